// qsyslab: run the checks declared in a JSON workspace.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "qsyslab/workspace.hpp"

using namespace qsyslab;
using namespace qsyslab::cli;

namespace {

constexpr int kMalformed = 2;

int cmd_verify(const std::string& file, std::optional<double> tol_flag, const std::string& report_path) {
  const Tolerance tol = resolve_tolerance(tol_flag);
  const Workspace ws = Workspace::from_file(file);
  const auto results = ws.run(tol);
  std::cout << human_summary(results);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "error: cannot write " << report_path << '\n';
      return kMalformed;
    }
    out << make_report(results, tol, file).dump(2) << '\n';
  }
  bool ok = true;
  for (const auto& r : results) ok = ok && r.ok();
  return ok ? 0 : 1;
}

int cmd_check_eq(const std::string& file, const std::string& name, std::optional<double> tol_flag) {
  const Tolerance tol = resolve_tolerance(tol_flag);
  const Workspace ws = Workspace::from_file(file);
  const diagram::EquationReport r = ws.check_equation(name, tol);
  std::cout << name << ": " << r.signature.domain.to_string() << " -> " << r.signature.codomain.to_string()
            << "  residual " << r.residual << "  tol " << tol.eps << "  " << (r.passed ? "PASS" : "FAIL") << '\n';
  return r.passed ? 0 : 1;
}

int cmd_examples(bool list, const std::vector<std::string>& emit) {
  const auto& ex = bundled_examples();
  if (list || emit.empty()) {
    for (const auto& [name, _] : ex) std::cout << name << '\n';
    return 0;
  }
  auto it = ex.find(emit[0]);
  if (it == ex.end()) {
    std::cerr << "error: no bundled example '" << emit[0] << "'\n";
    return kMalformed;
  }
  std::ofstream out(emit[1]);
  if (!out) {
    std::cerr << "error: cannot write " << emit[1] << '\n';
    return kMalformed;
  }
  out << it->second << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for Q-systems, quantum group bimodules and quantum bi-elements"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string file, report, eq;
  std::optional<double> tol;
  bool list = false;
  std::vector<std::string> emit;

  auto* verify = app.add_subcommand("verify", "run every check in a workspace");
  verify->add_option("file", file, "workspace JSON")->required();
  verify->add_option("--tol", tol, "comparison tolerance");
  verify->add_option("--report", report, "write a JSON report here");

  auto* check_eq = app.add_subcommand("check-eq", "evaluate one named equation");
  check_eq->add_option("file", file, "workspace JSON")->required();
  check_eq->add_option("--eq", eq, "equation name")->required();
  check_eq->add_option("--tol", tol, "comparison tolerance");

  auto* examples = app.add_subcommand("examples", "list or write bundled workspaces");
  auto* list_opt = examples->add_flag("--list", list, "list names");
  examples->add_option("--emit", emit, "NAME PATH")->expected(2)->excludes(list_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kMalformed;
  }

  try {
    if (*verify) return cmd_verify(file, tol, report);
    if (*check_eq) return cmd_check_eq(file, eq, tol);
    return cmd_examples(list, emit);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  }
}
