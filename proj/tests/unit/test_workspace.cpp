#include "doctest.h"

#include <cstdlib>

#include "qsyslab/workspace.hpp"

using namespace qsyslab;
using namespace qsyslab::cli;

namespace {

Workspace load(const char* text) { return Workspace::from_json(json::parse(text)); }

std::string pointer_of(const char* text) {
  try {
    load(text);
  } catch (const InputError& e) {
    return e.pointer();
  }
  return "<none>";
}

const CheckResult& find(const std::vector<CheckResult>& rs, const std::string& name) {
  for (const auto& r : rs)
    if (r.name == name) return r;
  throw std::runtime_error("no check " + name);
}

}  // namespace

TEST_CASE("bundled examples all run as expected") {
  const auto& ex = bundled_examples();
  for (const char* name : {"fn_alg_2", "matrix_alg_2", "cz2", "s3_function_algebra", "qbe_selfdual_2", "nonsplit_c3"})
    CHECK(ex.count(name) == 1);
  for (const auto& [name, text] : ex) {
    INFO(name);
    const auto results = Workspace::from_json(json::parse(text)).run(Tolerance());
    CHECK_FALSE(results.empty());
    for (const auto& r : results) {
      INFO(r.name);
      CHECK(r.ok());
    }
  }
}

TEST_CASE("nonsplit example reports the obstruction") {
  const auto results = Workspace::from_json(json::parse(bundled_examples().at("nonsplit_c3"))).run(Tolerance());
  const CheckResult& o = find(results, "obstruction");
  CHECK(o.data["dim"] == 3);
  CHECK(o.data["is_perfect_square"] == false);
  CHECK(o.passed);
  CHECK(find(results, "in_G").passed);
}

TEST_CASE("explicit morphisms and equations") {
  const Workspace w = load(R"({
    "spaces": {"A": 2},
    "morphisms": {
      "m": {"dom": ["A", "A"], "cod": ["A"], "matrix": [[1, 0, 0, 0], [0, 0, 0, 1]]},
      "i": {"dom": [], "cod": ["A"], "matrix": [[1], [1]]},
      "phase": {"dom": ["A"], "cod": ["A"], "matrix": [[[0, 1], 0], [0, [0, -1]]]}
    },
    "qsystems": {"Q": {"space": "A", "mult": "m", "unit": "i"}},
    "equations": {"assoc": "id[A]*m ; m = m*id[A] ; m", "ii": {"lhs": "i ; i^*", "rhs": "i ; i^*"}},
    "checks": [
      {"name": "axioms", "kind": "verify_qsystem", "params": {"qsystem": "Q"}},
      {"name": "assoc", "kind": "equation", "params": {"equation": "assoc"}}
    ]
  })");
  CHECK(w.check_equation("assoc", Tolerance()).residual == 0.0);
  CHECK(w.environment().generator("phase").matrix()(1, 1) == Complex(0, -1));
  const auto eqs = w.equation_names();
  CHECK(eqs.size() == 2);
  CHECK_THROWS_AS(w.check_equation("nope", Tolerance()), InputError);
  const auto results = w.run(Tolerance());
  CHECK(results.size() == 2);
  CHECK(results[0].name == "axioms");
  CHECK(results[0].passed);
  CHECK(results[1].data["lhs"] == "id[A] * m ; m");
}

TEST_CASE("malformed workspaces point at the offending key") {
  CHECK(pointer_of(R"({"spaces": {"A": 0}})") == "/spaces/A");
  CHECK(pointer_of(R"({"widgets": {}})") == "/widgets");
  CHECK(pointer_of(R"({"spaces": {"A": 2}, "morphisms": {"f": {"dom": ["B"], "cod": ["A"], "matrix": [[1], [0]]}}})") ==
        "/morphisms/f/dom/0");
  CHECK(pointer_of(R"({"spaces": {"A": 2}, "morphisms": {"f": {"dom": ["A"], "cod": ["A"], "matrix": [[1, 0]]}}})")
            .rfind("/morphisms/f", 0) == 0);
  CHECK(pointer_of(R"({"qsystems": {"Q": {"builtin": "function_algebra", "n": 2}},
                       "checks": [{"name": "c", "kind": "verify_qsystem", "params": {"qsystem": "R"}}]})") ==
        "/checks/0/params/qsystem");
  CHECK(pointer_of(R"({"qsystems": {"Q": {"builtin": "function_algebra", "n": 2}},
                       "checks": [{"name": "c", "kind": "no_such_kind", "params": {}}]})") == "/checks/0/kind");
  CHECK(pointer_of(R"({"qsystems": {"Q": {"builtin": "function_algebra", "n": 2}},
                       "equations": {"bad": "m_Q = id[Q]"}})") == "/equations/bad");
  CHECK(pointer_of(R"({"qsystems": {"Q": {"builtin": "function_algebra", "n": 2}},
                       "equations": {"bad": "m_Q ;; m_Q = id[Q]"}})") == "/equations/bad");
  CHECK(pointer_of(R"({"spaces": {"A": 2}, "qsystems": {"A": {"builtin": "function_algebra", "n": 2}}})") != "<none>");
  CHECK_THROWS_AS(Workspace::from_file("/nonexistent/workspace.json"), InputError);
}

TEST_CASE("per-check tolerance wins") {
  const Workspace w = load(R"({
    "spaces": {"A": 1},
    "morphisms": {"f": {"dom": ["A"], "cod": ["A"], "matrix": [[1.000001]]}},
    "equations": {"e": "f = id[A]"},
    "checks": [
      {"name": "loose", "kind": "equation", "params": {"equation": "e"}, "tol": 1e-3},
      {"name": "strict", "kind": "equation", "params": {"equation": "e"}, "expect": false}
    ]
  })");
  const auto results = w.run(Tolerance(1e-9));
  CHECK(results[0].passed);
  CHECK(results[0].tolerance == 1e-3);
  CHECK_FALSE(results[1].passed);
  CHECK(results[1].ok());
  CHECK(results[1].outcome() == "expected-fail");
  CHECK(w.run(Tolerance(1e-2))[1].outcome() == "unexpected-pass");
}

TEST_CASE("tolerance precedence") {
  unsetenv("QSYSLAB_TOL");
  CHECK(resolve_tolerance(std::nullopt).eps == 1e-9);
  setenv("QSYSLAB_TOL", "1e-6", 1);
  CHECK(resolve_tolerance(std::nullopt).eps == 1e-6);
  CHECK(resolve_tolerance(1e-3).eps == 1e-3);
  setenv("QSYSLAB_TOL", "lots", 1);
  CHECK_THROWS_AS(resolve_tolerance(std::nullopt), InputError);
  CHECK(resolve_tolerance(1e-4).eps == 1e-4);
  unsetenv("QSYSLAB_TOL");
  CHECK_THROWS_AS(resolve_tolerance(-1.0), InputError);
}

TEST_CASE("report body is deterministic") {
  const Workspace w = Workspace::from_json(json::parse(bundled_examples().at("qbe_selfdual_2")));
  const json a = make_report_body(w.run(Tolerance()), Tolerance());
  const json b = make_report_body(w.run(Tolerance()), Tolerance());
  CHECK(a.dump() == b.dump());
  const json full = make_report(w.run(Tolerance()), Tolerance(), "x.json");
  CHECK(full["body"].dump() == a.dump());
  CHECK(full["header"]["tool"] == "qsyslab");
  CHECK(a["passed"] == true);
}

TEST_CASE("broken structures fail softly") {
  const Workspace w = load(R"({
    "spaces": {"A": 2},
    "morphisms": {
      "m": {"dom": ["A", "A"], "cod": ["A"], "matrix": [[1, 0, 0, 0], [0, 0, 0, 1]]},
      "twice": {"dom": [], "cod": ["A"], "matrix": [[2], [2]]}
    },
    "qsystems": {"Q": {"space": "A", "mult": "m", "unit": "twice"}},
    "checks": [
      {"name": "axioms", "kind": "verify_qsystem", "params": {"qsystem": "Q"}, "expect": false},
      {"name": "bielement", "kind": "bimodule_to_qbe", "params": {"bimodule": "self"}},
      {"name": "obstruction", "kind": "split_obstruction", "params": {"qsystem": "Q"}}
    ],
    "bimodules": {"self": {"type": "qsys", "self": "Q"}}
  })");
  const auto results = w.run(Tolerance());
  REQUIRE(results.size() == 3);
  CHECK(results[0].ok());
  CHECK(results[0].residuals.size() == 6);
  CHECK_FALSE(results[1].passed);
  CHECK_FALSE(results[1].messages.empty());
  CHECK(results[2].passed);
}
