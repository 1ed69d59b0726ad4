// Build a Cartier module, split off its nilpotent part, list the simple
// crystal factors, and print the function-sheaf trace.

#include <iostream>

#include "froblab/kgroups.hpp"

using namespace froblab;

int main() {
  // two rational points over F_2: a delta crystal at the first, a rank-3
  // block with C the companion matrix of x^3 + x + 1 at the second
  CartierModule m{2, 1, {}};
  auto scalars = make_finite_field(2, 1, 1);

  Block b0 = standard_block(scalars, 1);
  b0.cmat = FpMat::identity(b0.ops(), 1);
  m.blocks.push_back(b0);

  Block b1 = standard_block(scalars, 3);
  i64 companion[3][3] = {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) b1.cmat.at(i, j) = companion[i][j];
  m.blocks.push_back(b1);

  std::cout << "valid: " << (validate_cartier(m).ok ? "yes" : "no") << "\n";
  auto nil = is_nilpotent(m);
  std::cout << "nilpotent: " << (nil.nilpotent ? "yes" : "no") << "\n";

  for (const auto& f : simple_factors(m)) {
    std::cout << "simple at point " << f.point << ": f = " << f.min_poly.to_string()
              << ", multiplicity " << f.multiplicity << ", End = F_{2^" << f.endo_degree
              << "}\n";
  }

  auto tr = taelman_trace(m);
  for (const auto& [pt, v] : tr.values)
    std::cout << "trace at point " << pt << " = " << v.to_string() << "\n";
  return 0;
}
