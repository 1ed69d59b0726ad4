// Euclidean division and gcrd/lclm in F_4[F], worked from scratch.

#include <iostream>

#include "froblab/parse.hpp"
#include "froblab/skew.hpp"

using namespace froblab;

int main() {
  auto ring = make_gf(2, 2);  // F_4 as an F_2-algebra: F acts as squaring

  SkewPoly a = parse_skew_expr("F^2 + w*F + 1", ring);
  SkewPoly b = parse_skew_expr("F + w", ring);

  auto [q, r] = div_right(a, b);
  std::cout << "A  = " << a.to_string() << "\n";
  std::cout << "B  = " << b.to_string() << "\n";
  std::cout << "Q  = " << q.to_string() << "\n";
  std::cout << "R  = " << r.to_string() << "\n";
  std::cout << "QB + R == A: " << (q * b + r == a ? "yes" : "no") << "\n\n";

  auto e = gcrd_lclm(a, b);
  std::cout << "gcrd = " << e.gcrd.to_string() << "\n";
  std::cout << "lclm = " << e.lclm.to_string() << "\n";
  std::cout << "Bezout: u*A + v*B == gcrd: " << (e.u * a + e.v * b == e.gcrd ? "yes" : "no")
            << "\n";
  return 0;
}
