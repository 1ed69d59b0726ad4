#ifndef FROBLAB_TESTS_CLI_CASES_HPP
#define FROBLAB_TESTS_CLI_CASES_HPP

// The golden command matrix, shared by the unit harness and the acceptance
// suite. Each case pins the full JSON document byte for byte.

#include <string>
#include <vector>

namespace froblab_tests {

struct CliCase {
  std::string name;        // golden file stem
  std::string args;        // everything after the binary path
  int expected_exit = 0;
};

inline const std::vector<CliCase>& cli_cases() {
  static const std::vector<CliCase> cases = {
      {"skew_mul", "skew mul --ring '{\"ring\":\"PolyRing\",\"p\":2}' 'F' 'x'", 0},
      {"skew_divr",
       "skew divr --ring '{\"ring\":\"GF\",\"p\":2,\"r\":2}' 'F^2+w*F+1' 'F+w'", 0},
      {"skew_divl", "skew divl --ring '{\"ring\":\"GF\",\"p\":2,\"r\":2}' 'F^2+w*F' 'F+1'", 0},
      {"skew_gcrd", "skew gcrd --ring '{\"ring\":\"GF\",\"p\":2,\"r\":2}' 'F^2' 'F'", 0},
      {"ore_witness_left",
       "ore witness --side left --ring '{\"ring\":\"PolyRing\",\"p\":2}' 'x' 'F'", 0},
      {"ore_witness_right",
       "ore witness --side right --ring '{\"ring\":\"PolyRing\",\"p\":2}' 'x' 'F+1'", 0},
      {"ore_search_notfound",
       "ore search --maxdeg 8 --ring '{\"ring\":\"RatFunc\",\"p\":2}' 'F' 't*F'", 0},
      {"ore_search_found",
       "ore search --maxdeg 2 --ring '{\"ring\":\"GF\",\"p\":2,\"r\":2}' 'F' 'F^2'", 0},
      {"ore_localize", "ore localize --ring '{\"ring\":\"PolyRing\",\"p\":2}' 'F' 'x' --f 'x'", 0},
      {"ore_dfrac",
       "ore dfrac --op mul --ring '{\"ring\":\"GF\",\"p\":2,\"r\":2}' '1' 'F+1' 'F+1' '1'", 0},
      {"koszul_present",
       "koszul present "
       "'{\"p\":2,\"baseExp\":1,\"blocks\":[{\"scalarDegree\":1,\"dim\":2,\"C\":[[0,1],[0,0]]}]}'",
       0},
      {"koszul_check",
       "koszul check --bound 5 "
       "'{\"p\":2,\"baseExp\":1,\"blocks\":[{\"scalarDegree\":1,\"dim\":2,\"C\":[[0,1],[0,0]]}]}'",
       0},
      {"ideal_reduce", "ideal reduce --ring '{\"ring\":\"GF\",\"p\":2,\"r\":1}' 'F^3' 'F^2'", 0},
      {"ideal_filtration",
       "ideal filtration --d 3 --ring '{\"ring\":\"GF\",\"p\":2,\"r\":1}' 'F^2'", 0},
      {"ideal_coker", "ideal coker --dbound 6 --ring '{\"ring\":\"GF\",\"p\":2,\"r\":1}' 'F^2'", 0},
      {"cartier_analyze",
       "cartier analyze "
       "'{\"p\":2,\"baseExp\":1,\"blocks\":[{\"scalarDegree\":1,\"dim\":2,\"C\":[[0,1],[0,0]]}]}'",
       0},
      {"cartier_delta", "cartier delta --points 3 --x 1 --p 2 --baseExp 1", 0},
      {"cartier_delta_points_spec",
       "cartier delta --x 2 --ring '{\"ring\":\"Points\",\"p\":2,\"count\":4}'", 0},
      {"k0_class",
       "k0 class "
       "'{\"p\":2,\"baseExp\":1,\"blocks\":[{\"scalarDegree\":1,\"dim\":3,"
       "\"C\":[[0,1,0],[0,0,1],[1,1,0]]}]}'",
       0},
      {"k0_trace",
       "k0 trace "
       "'{\"p\":2,\"baseExp\":1,\"blocks\":[{\"scalarDegree\":1,\"dim\":1,\"C\":[[1]]},"
       "{\"scalarDegree\":1,\"dim\":2,\"C\":[[0,1],[0,0]]}]}'",
       0},
      {"k0_ses", "k0 ses --points 3 --p 2 --baseExp 1 --samples 20 --seed 42", 0},
      {"k0_qdrank",
       "k0 qdrank '{\"ring\":{\"ring\":\"GF\",\"p\":2,\"r\":1},\"generators\":2,"
       "\"relations\":[[\"F\",\"1\"]]}'",
       0},
      {"k0_chow", "k0 chow --n 2 --q 3", 0},
      {"error_not_perfect",
       "skew divl --ring '{\"ring\":\"RatFunc\",\"p\":2}' 'F' 't*F'", 1},
      {"error_syntax", "skew mul --ring '{\"ring\":\"GF\",\"p\":2,\"r\":1}' 'F+' '1'", 1},
      {"error_unknown_symbol", "skew mul --ring '{\"ring\":\"GF\",\"p\":2,\"r\":1}' 't' '1'", 1},
      {"error_division_by_zero", "skew divr --ring '{\"ring\":\"GF\",\"p\":2,\"r\":1}' 'F' '0'", 1},
  };
  return cases;
}

}  // namespace froblab_tests

#endif  // FROBLAB_TESTS_CLI_CASES_HPP
