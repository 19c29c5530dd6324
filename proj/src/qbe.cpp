#include "qsyslab/qbe.hpp"

namespace qsyslab {

using diagram::check_into;
using diagram::Environment;

namespace {

void require_signature(const LinearMap& f, const Word& dom, const Word& cod, const char* what) {
  if (!(f.domain() == dom) || !(f.codomain() == cod)) {
    throw WireMismatch(std::string(what) + " must be " + dom.to_string() + " -> " +
                       cod.to_string() + ", got " + f.domain().to_string() + " -> " +
                       f.codomain().to_string());
  }
}

void bind_pair(Environment& env, const QSystem& a, const QSystem& b) {
  env.add_space("A", a.space);
  env.add_space("B", b.space);
  env.add_generator("mA", a.mult);
  env.add_generator("iA", a.unit);
  env.add_generator("mB", b.mult);
  env.add_generator("iB", b.unit);
}

const AxiomEquation& axiom(const std::string& id) {
  for (const auto& a : qbe_axioms()) {
    if (a.id == id) return a;
  }
  throw std::logic_error("no axiom " + id);
}

}  // namespace

Environment qbe_environment(const QuantumBiElement& e) {
  Environment env;
  bind_pair(env, e.left_q, e.right_q);
  env.add_space("H", e.space);
  env.add_generator("Q1", e.q1);
  env.add_generator("Q2", e.q2);
  return env;
}

const std::vector<AxiomEquation>& qbe_axioms() {
  static const std::vector<AxiomEquation> axioms = {
      {"1a", "Q1 ; id[A]*Q1", "Q1 ; mA^**id[H]"},
      {"1b", "Q2 ; Q2*id[B]", "Q2 ; id[H]*mB^*"},
      {"1c", "Q1 ; id[A]*Q2", "Q2 ; Q1*id[B]"},
      {"2.left", "Q1 ; iA^**id[H]", "id[H]"},
      {"2.right", "Q2 ; id[H]*iB^*", "id[H]"},
      {"3a", "Q1^*", "id[A]*Q1 ; (mA ; iA^*)*id[H]"},
      {"3b", "Q2^*", "Q2*id[B] ; id[H]*(mB ; iB^*)"},
  };
  return axioms;
}

VerificationReport verify_qbe(const QuantumBiElement& e, Tolerance tol) {
  require_signature(e.q1, Word(e.space), Word{e.left_q.space, e.space}, "Q1");
  require_signature(e.q2, Word(e.space), Word{e.space, e.right_q.space}, "Q2");
  const Environment env = qbe_environment(e);
  VerificationReport report(tol);
  for (const auto& a : qbe_axioms()) check_into(report, a.id, a.lhs, a.rhs, env);
  return report;
}

VerificationReport verify_quantum_element(const QSystem& a, const Space& h, const LinearMap& q1,
                                          Tolerance tol) {
  require_signature(q1, Word(h), Word{a.space, h}, "Q1");
  Environment env;
  env.add_space("A", a.space);
  env.add_space("H", h);
  env.add_generator("mA", a.mult);
  env.add_generator("iA", a.unit);
  env.add_generator("Q1", q1);
  VerificationReport report(tol);
  for (const char* id : {"1a", "2.left", "3a"}) {
    const AxiomEquation& ax = axiom(id);
    check_into(report, ax.id, ax.lhs, ax.rhs, env);
  }
  return report;
}

VerificationReport check_frobenius_identities(const QuantumBiElement& e, Tolerance tol) {
  const Environment env = qbe_environment(e);
  VerificationReport report(tol);
  check_into(report, "i.left", "id[A]*Q1 ; mA*id[H]", "Q1^* ; Q1", env);
  check_into(report, "i.right", "mA^**id[H] ; id[A]*Q1^*", "Q1^* ; Q1", env);
  check_into(report, "ii.left", "Q2*id[B] ; id[H]*mB", "Q2^* ; Q2", env);
  check_into(report, "ii.right", "id[H]*mB^* ; Q2^**id[B]", "Q2^* ; Q2", env);
  return report;
}

VerificationReport check_isometries(const QuantumBiElement& e, Tolerance tol) {
  VerificationReport report(tol);
  report.add("Q1", isometry_residual(e.q1));
  report.add("Q2", isometry_residual(e.q2));
  return report;
}

diagram::EquationReport check_exchange_identity(const QuantumBiElement& e, Tolerance tol) {
  return diagram::check_equation("Q2^* ; Q1", "Q1*id[B] ; id[A]*Q2^*", qbe_environment(e), tol);
}

Environment quantum_function_environment(const QuantumFunction& f) {
  Environment env;
  bind_pair(env, f.source_q, f.target_q);
  env.add_space("H", f.space);
  env.add_generator("P", f.p);
  return env;
}

const std::vector<AxiomEquation>& quantum_function_axioms() {
  static const std::vector<AxiomEquation> axioms = {
      {"QF1", "id[H]*mA^* ; P*id[A] ; id[B]*P", "P ; mB^**id[H]"},
      {"QF2", "P ; iB^**id[H]", "id[H]*iA^*"},
      {"QF3", "P^*",
       "id[B]*id[H]*(iA ; mA^*) ; id[B]*P*id[A] ; (mB ; iB^*)*id[H]*id[A]"},
  };
  return axioms;
}

VerificationReport verify_quantum_function(const QuantumFunction& f, Tolerance tol) {
  require_signature(f.p, Word{f.space, f.source_q.space}, Word{f.target_q.space, f.space}, "P");
  const Environment env = quantum_function_environment(f);
  VerificationReport report(tol);
  for (const auto& a : quantum_function_axioms()) {
    const diagram::EquationReport r = diagram::check_equation(a.lhs, a.rhs, env, tol);
    report.add(a.id, r.residual, a.id != "QF2" || f.unital);
  }
  return report;
}

QuantumFunction qbe_to_quantum_function(const QuantumBiElement& e, Tolerance tol) {
  const VerificationReport pre = verify_qbe(e, tol);
  if (!pre.passed()) throw VerificationFailed("not a quantum bi-element:\n" + pre.summary());
  QuantumFunction f{e.right_q, e.left_q, e.space, compose(e.q1, adjoint(e.q2)), false, false};
  const VerificationReport post = verify_quantum_function(f, tol.scaled(10));
  if (!post.passed()) throw VerificationFailed("Q1 Q2* is not a quantum function:\n" + post.summary());
  f.verified = true;
  return f;
}

VerificationReport verify_qbe_intertwiner(const LinearMap& f, const QuantumBiElement& e,
                                          const QuantumBiElement& g, Tolerance tol) {
  if (!same_qsystem(e.left_q, g.left_q) || !same_qsystem(e.right_q, g.right_q)) {
    throw PairMismatch("bi-elements over different pairs of Q-systems");
  }
  require_signature(f, Word(e.space), Word(g.space), "intertwiner");
  Environment env;
  env.add_space("A", e.left_q.space);
  env.add_space("B", e.right_q.space);
  env.add_space("H", e.space);
  env.add_space("K", g.space);
  env.add_generator("Q1E", e.q1);
  env.add_generator("Q2E", e.q2);
  env.add_generator("Q1F", g.q1);
  env.add_generator("Q2F", g.q2);
  env.add_generator("f", f);
  VerificationReport report(tol);
  check_into(report, "Q1", "Q1E ; id[A]*f", "f ; Q1F", env);
  check_into(report, "Q2", "Q2E ; f*id[B]", "f ; Q2F", env);
  return report;
}

QuantumBiElement bimodule_to_qbe(const QSysBimodule& m, Tolerance tol) {
  const VerificationReport pre = verify_qsys_bimodule(m, tol);
  if (!pre.passed()) throw VerificationFailed("not a Q-system bimodule:\n" + pre.summary());
  QuantumBiElement e{m.left, m.right, m.space, adjoint(m.lambda), adjoint(m.rho), false};
  const VerificationReport post = verify_qbe(e, tol.scaled(10));
  if (!post.passed()) throw VerificationFailed("image is not a quantum bi-element:\n" + post.summary());
  e.verified = true;
  return e;
}

QuantumBiElement qbe_from_qsystem(const QSystem& a, Tolerance tol) {
  const VerificationReport pre = verify_qsystem(a, tol);
  if (!pre.passed()) throw VerificationFailed("not a Q-system:\n" + pre.summary());
  QuantumBiElement e{a, a, a.space, adjoint(a.mult), adjoint(a.mult), false};
  const VerificationReport post = verify_qbe(e, tol.scaled(10));
  if (!post.passed()) throw VerificationFailed("(A, m*, m*) fails:\n" + post.summary());
  e.verified = true;
  return e;
}

}  // namespace qsyslab
