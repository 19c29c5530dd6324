#include "qsyslab/workspace.hpp"

namespace qsyslab::cli {

const std::map<std::string, std::string>& bundled_examples() {
  static const std::map<std::string, std::string> examples = {
      {"fn_alg_2", R"({
  "description": "functions on two points",
  "qsystems": {"A": {"builtin": "function_algebra", "n": 2}},
  "bimodules": {"AA": {"type": "qsys", "self": "A"}},
  "equations": {
    "associativity": "id[A]*m_A ; m_A = m_A*id[A] ; m_A",
    "unit_left": "i_A*id[A] ; m_A = id[A]",
    "separability": {"lhs": "m_A^* ; m_A", "rhs": "id[A]"}
  },
  "checks": [
    {"name": "axioms", "kind": "verify_qsystem", "params": {"qsystem": "A"}},
    {"name": "duality", "kind": "ev_coev", "params": {"qsystem": "A"}},
    {"name": "pairing_not_separable", "kind": "unitarily_separable", "params": {"qsystem": "A"}, "expect": false},
    {"name": "obstruction", "kind": "split_obstruction", "params": {"qsystem": "A", "expect_square": false}},
    {"name": "self_bimodule", "kind": "verify_qsys_bimodule", "params": {"bimodule": "AA"}},
    {"name": "embedding", "kind": "bimodule_to_qbe", "params": {"bimodule": "AA"}},
    {"name": "associativity", "kind": "equation", "params": {"equation": "associativity"}},
    {"name": "unit_left", "kind": "equation", "params": {"equation": "unit_left"}}
  ]
})"},
      {"matrix_alg_2", R"({
  "description": "2x2 matrices, normalized so that m m* = 1",
  "qsystems": {"A": {"builtin": "matrix_algebra", "n": 2}},
  "bimodules": {"AA": {"type": "qsys", "self": "A"}},
  "equations": {"separability": "m_A^* ; m_A = id[A]"},
  "checks": [
    {"name": "axioms", "kind": "verify_qsystem", "params": {"qsystem": "A"}},
    {"name": "duality", "kind": "ev_coev", "params": {"qsystem": "A"}},
    {"name": "obstruction", "kind": "split_obstruction", "params": {"qsystem": "A", "expect_square": true}},
    {"name": "self_bimodule", "kind": "verify_qsys_bimodule", "params": {"bimodule": "AA"}},
    {"name": "separability", "kind": "equation", "params": {"equation": "separability"}}
  ]
})"},
      {"matrix_mult_unnormalized", R"({
  "description": "plain 2x2 matrix multiplication on the Hilbert-Schmidt basis; m m* = 2",
  "spaces": {"A": 4},
  "morphisms": {
    "m": {"dom": ["A", "A"], "cod": ["A"], "matrix": [
      [1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
      [0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
      [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0],
      [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1]]}
  },
  "equations": {"mm_star_vs_id": {"lhs": "m ; m^*", "rhs": "id[A]*id[A]"}},
  "checks": [
    {"name": "mm_star_vs_id", "kind": "equation", "params": {"equation": "mm_star_vs_id"}, "expect": false}
  ]
})"},
      {"cz2", R"({
  "description": "functions on Z/2, its sign corepresentation and small bimodules",
  "spaces": {"L": 1, "V": 2},
  "quantum_groups": {"CZ2": {"builtin": "function_algebra_of_group", "group": {"cyclic": 2}}},
  "corepresentations": {
    "sign": {"group": "CZ2", "space": "L", "representation": {"cyclic_character": 1}},
    "chars": {"group": "CZ2", "space": "V", "representation": "regular"}
  },
  "morphisms": {
    "one": {"dom": ["L"], "cod": ["L"], "matrix": [[1]]},
    "p": {"dom": ["V"], "cod": ["V"], "matrix": [[0.5, 0.5], [0.5, 0.5]]}
  },
  "bimodules": {
    "trivial_L": {"type": "unitary", "left_group": "CZ2", "right_group": "CZ2", "space": ["L"],
                  "left_coaction": "trivial", "right_coaction": "trivial"},
    "sign_right": {"type": "unitary", "left_group": "CZ2", "right_group": "CZ2", "space": ["L"],
                   "left_coaction": "trivial", "right_coaction": {"corep": "sign"}},
    "trivial_V": {"type": "unitary", "left_group": "CZ2", "right_group": "CZ2", "space": ["V"],
                  "left_coaction": "trivial", "right_coaction": "trivial"}
  },
  "checks": [
    {"name": "star_algebra", "kind": "verify_star_algebra", "params": {"algebra": "CZ2"}},
    {"name": "quantum_group", "kind": "verify_cqg", "params": {"quantum_group": "CZ2"}},
    {"name": "sign_corep", "kind": "verify_corep", "params": {"corep": "sign"}},
    {"name": "sign_roundtrip", "kind": "corep_module_roundtrip", "params": {"corep": "sign"}},
    {"name": "regular_roundtrip", "kind": "corep_module_roundtrip", "params": {"corep": "chars", "side": "left"}},
    {"name": "sign_bimodule", "kind": "verify_bimodule", "params": {"bimodule": "sign_right"}},
    {"name": "one_is_not_equivariant", "kind": "verify_intertwiner",
     "params": {"morphism": "one", "source": "trivial_L", "target": "sign_right"}, "expect": false},
    {"name": "split_half", "kind": "split_idempotent", "params": {"bimodule": "trivial_V", "projection": "p"}}
  ]
})"},
      {"s3_function_algebra", R"({
  "description": "functions on S3 and its permutation corepresentation",
  "spaces": {"V": 3},
  "quantum_groups": {"CS3": {"builtin": "function_algebra_of_group", "group": {"symmetric": 3}}},
  "corepresentations": {"perm": {"group": "CS3", "space": "V", "representation": "permutation"}},
  "checks": [
    {"name": "quantum_group", "kind": "verify_cqg", "params": {"quantum_group": "CS3"}},
    {"name": "perm_corep", "kind": "verify_corep", "params": {"corep": "perm"}},
    {"name": "right_roundtrip", "kind": "corep_module_roundtrip", "params": {"corep": "perm"}},
    {"name": "left_roundtrip", "kind": "corep_module_roundtrip", "params": {"corep": "perm", "side": "left"}}
  ]
})"},
      {"qbe_selfdual_2", R"({
  "description": "the bi-element (A, m*, m*) for functions on two points",
  "qsystems": {"A": {"builtin": "function_algebra", "n": 2}},
  "qbielements": {"E": {"from_qsystem": "A"}},
  "morphisms": {
    "diag": {"dom": ["A"], "cod": ["A"], "matrix": [[1, 0], [0, 2]]},
    "swap": {"dom": ["A"], "cod": ["A"], "matrix": [[0, 1], [1, 0]]},
    "P": {"dom": ["A", "A"], "cod": ["A", "A"],
          "matrix": [[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1]]}
  },
  "checks": [
    {"name": "bi_element", "kind": "verify_qbe", "params": {"qbe": "E"}},
    {"name": "isometries", "kind": "isometries", "params": {"qbe": "E"}},
    {"name": "frobenius_lemma", "kind": "frobenius_identities", "params": {"qbe": "E"}},
    {"name": "exchange", "kind": "exchange_identity", "params": {"qbe": "E"}},
    {"name": "quantum_function", "kind": "qbe_to_quantum_function", "params": {"qbe": "E"}},
    {"name": "P_is_not_unital", "kind": "verify_quantum_function",
     "params": {"source": "A", "target": "A", "space": "A", "morphism": "P", "unital": true}, "expect": false},
    {"name": "diag_intertwines", "kind": "verify_qbe_intertwiner",
     "params": {"morphism": "diag", "source": "E", "target": "E"}},
    {"name": "swap_does_not", "kind": "verify_qbe_intertwiner",
     "params": {"morphism": "swap", "source": "E", "target": "E"}, "expect": false}
  ]
})"},
      {"nonsplit_c3", R"({
  "description": "functions on three points with trivial coactions: a Q-system in the bimodule category that cannot split",
  "qsystems": {"A": {"builtin": "function_algebra", "n": 3}},
  "quantum_groups": {"CZ2": {"builtin": "function_algebra_of_group", "group": {"cyclic": 2}}},
  "bimodules": {"A_trivial": {"type": "unitary", "left_group": "CZ2", "right_group": "CZ2", "space": ["A"],
                              "left_coaction": "trivial", "right_coaction": "trivial"}},
  "checks": [
    {"name": "axioms", "kind": "verify_qsystem", "params": {"qsystem": "A"}},
    {"name": "in_G", "kind": "verify_qsystem_in_G", "params": {"qsystem": "A", "bimodule": "A_trivial"}},
    {"name": "obstruction", "kind": "split_obstruction", "params": {"qsystem": "A", "expect_square": false}}
  ]
})"},
  };
  return examples;
}

}  // namespace qsyslab::cli
