#pragma once

// Declarative JSON workspaces: named spaces, maps and structures plus an ordered
// list of checks to run against them.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsyslab/cqg.hpp"
#include "qsyslab/diagram.hpp"
#include "qsyslab/frobenius.hpp"
#include "qsyslab/qbe.hpp"

namespace qsyslab::cli {

using json = nlohmann::ordered_json;

/// Malformed workspace. `pointer` is a JSON pointer to the offending key.
class InputError : public Error {
public:
  InputError(std::string pointer, const std::string& message)
      : Error(pointer.empty() ? message : pointer + ": " + message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

private:
  std::string pointer_;
};

struct CheckResult {
  std::string name;
  std::string kind;
  bool passed = false;  // verdict of the verifier
  bool expect = true;   // verdict the workspace asked for
  double tolerance = 0.0;
  std::vector<VerificationReport::Entry> residuals;
  json data = json::object();
  std::vector<std::string> messages;

  bool ok() const { return passed == expect; }
  std::string outcome() const;
};

class Workspace {
public:
  /// Throws InputError.
  static Workspace from_json(const json& doc);
  static Workspace from_file(const std::string& path);

  /// Runs every check in declaration order; failures do not stop the run.
  std::vector<CheckResult> run(Tolerance base) const;

  /// Throws InputError for an unknown name.
  diagram::EquationReport check_equation(const std::string& name, Tolerance tol) const;
  std::vector<std::string> equation_names() const;

  const diagram::Environment& environment() const { return env_; }

private:
  struct CheckSpec {
    std::string name;
    std::string kind;
    json params;
    std::optional<double> tol;
    bool expect = true;
    std::string pointer;
  };

  CheckResult run_check(const CheckSpec& spec, Tolerance tol) const;
  void validate_check(const CheckSpec& spec) const;

  // loading, in dependency order
  void load_spaces(const json& doc);
  void load_builtins(const json& doc);
  void load_morphisms(const json& doc);
  void load_algebras(const json& doc);
  void load_quantum_groups(const json& doc);
  void load_qsystems(const json& doc);
  void load_corepresentations(const json& doc);
  void load_bimodules(const json& doc);
  void load_qbielements(const json& doc);
  void load_equations(const json& doc);
  void load_checks(const json& doc);

  void add_space(const std::string& name, std::size_t dim, const std::string& ptr);
  void add_morphism(const std::string& name, LinearMap map, const std::string& ptr);
  void claim(const std::string& name, const std::string& ptr);
  const Space& space_ref(const json& v, const std::string& ptr) const;
  Word word_ref(const json& v, const std::string& ptr) const;
  const LinearMap& morphism_ref(const json& v, const std::string& ptr) const;
  const FiniteQuantumGroup& group_ref(const json& v, const std::string& ptr) const;
  const QSystem& qsystem_ref(const json& v, const std::string& ptr) const;

  diagram::Environment env_;
  std::map<std::string, Space> spaces_;
  std::map<std::string, LinearMap> morphisms_;
  std::map<std::string, FDStarAlgebra> algebras_;
  std::map<std::string, FiniteQuantumGroup> groups_;
  std::map<std::string, FiniteGroup> finite_groups_;  // for builtin function algebras
  std::map<std::string, QSystem> qsystems_;
  std::map<std::string, Corepresentation> coreps_;
  std::map<std::string, QSysBimodule> qsys_bimodules_;
  std::map<std::string, UnitaryBimodule> unitary_bimodules_;
  std::map<std::string, QuantumBiElement> qbes_;
  std::map<std::string, diagram::EquationText> equations_;
  std::map<std::string, std::pair<std::string, std::string>> equation_text_;
  std::vector<CheckSpec> checks_;
  std::map<std::string, std::string> object_names_;  // name -> section, shared namespace
};

/// Report document. The header carries run metadata; the body is a pure function
/// of the workspace and tolerance.
json make_report_body(const std::vector<CheckResult>& results, Tolerance tol);
json make_report(const std::vector<CheckResult>& results, Tolerance tol, const std::string& input);
std::string human_summary(const std::vector<CheckResult>& results);

/// default < QSYSLAB_TOL < flag. Throws InputError for an unusable value.
Tolerance resolve_tolerance(std::optional<double> flag);

/// Bundled example workspaces, name -> JSON text.
const std::map<std::string, std::string>& bundled_examples();

inline constexpr const char* kVersion = "0.3.1";

}  // namespace qsyslab::cli
