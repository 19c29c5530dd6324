#pragma once

// A textual language for string diagrams.
//
//   expr   := par (";" par)* ;          f ; g  means "f first, then g", i.e. g o f
//   par    := post ("*" post)* ;        side-by-side boxes (tensor product)
//   post   := atom ("^*")* ;            adjoint
//   atom   := IDENT | "id" "[" IDENT ("," IDENT)* "]" | "(" expr ")" ;
//
// '#' starts a comment that runs to the end of the line. `id` is a keyword.
// An equation is `lhs = rhs`; equation files hold one `name: lhs = rhs` per line.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qsyslab/report.hpp"
#include "qsyslab/tensor_core.hpp"

namespace qsyslab::diagram {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Generator {
  std::string name;
};
struct Identity {
  std::vector<std::string> spaces;
};
struct Sequential {
  std::vector<ExprPtr> stages;
};
struct Parallel {
  std::vector<ExprPtr> factors;
};
struct Adjoint {
  ExprPtr inner;
};

struct Expr {
  std::variant<Generator, Identity, Sequential, Parallel, Adjoint> node;
};

ExprPtr make_generator(std::string name);
ExprPtr make_identity(std::vector<std::string> spaces);
ExprPtr make_sequential(std::vector<ExprPtr> stages);
ExprPtr make_parallel(std::vector<ExprPtr> factors);
ExprPtr make_adjoint(ExprPtr inner);

bool structurally_equal(const Expr& a, const Expr& b);

/// Throws SyntaxError.
ExprPtr parse(const std::string& text);

struct EquationText {
  ExprPtr lhs;
  ExprPtr rhs;
};
/// Parses `lhs = rhs`. Throws SyntaxError.
EquationText parse_equation(const std::string& text);

struct NamedEquation {
  std::string name;
  EquationText equation;
  std::size_t line = 0;
};
/// One `name: lhs = rhs` per line; blank lines and `#` comments are skipped.
/// Throws SyntaxError with positions in the whole file.
std::vector<NamedEquation> parse_equation_file(const std::string& text);

/// Minimal-parenthesis rendering; parse(print(e)) is structurally equal to e.
std::string print(const Expr& e);

/// Names resolvable in expressions: spaces (each name may alias a whole Word) and
/// generators.
class Environment {
public:
  void add_space(const std::string& name, const Space& space);
  void add_alias(const std::string& name, const Word& word);
  /// Every factor of the generator's wires must be a declared space.
  void add_generator(const std::string& name, const LinearMap& map);

  const Word& space(const std::string& name) const;
  const LinearMap& generator(const std::string& name) const;
  bool has_generator(const std::string& name) const { return generators_.count(name) != 0; }

  const std::map<std::string, Word>& spaces() const { return spaces_; }
  const std::map<std::string, LinearMap>& generators() const { return generators_; }

private:
  bool declares(const Space& s) const;

  std::map<std::string, Word> spaces_;
  std::map<std::string, LinearMap> generators_;
};

struct Signature {
  Word domain;
  Word codomain;
};

/// Throws TypeError or UnknownGenerator.
Signature typecheck(const Expr& e, const Environment& env);

LinearMap eval(const Expr& e, const Environment& env);
LinearMap eval(const std::string& text, const Environment& env);

struct EquationReport {
  Signature signature;
  double residual = 0.0;
  bool passed = false;
  Tolerance tol;
};

/// Throws SignatureMismatch when the two sides have different wire types.
EquationReport check_equation(const Expr& lhs, const Expr& rhs, const Environment& env,
                              Tolerance tol = {});
EquationReport check_equation(const std::string& lhs, const std::string& rhs,
                              const Environment& env, Tolerance tol = {});

/// Evaluates `lhs` and `rhs` and appends the residual to `report` under `axiom`.
void check_into(VerificationReport& report, const std::string& axiom, const std::string& lhs,
                const std::string& rhs, const Environment& env);

}  // namespace qsyslab::diagram
