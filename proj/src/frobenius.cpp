#include "qsyslab/frobenius.hpp"

#include <cmath>

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

void run_axioms(VerificationReport& report, const std::vector<AxiomEquation>& axioms,
                const Environment& env) {
  for (const auto& a : axioms) check_into(report, a.id, a.lhs, a.rhs, env);
}

Vector flatten(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

}  // namespace

Environment qsystem_environment(const QSystem& q) {
  Environment env;
  env.add_space("A", q.space);
  env.add_generator("m", q.mult);
  env.add_generator("i", q.unit);
  return env;
}

const std::vector<AxiomEquation>& qsystem_axioms() {
  static const std::vector<AxiomEquation> axioms = {
      {"Q1", "id[A]*m ; m", "m*id[A] ; m"},
      {"Q2.left", "i*id[A] ; m", "id[A]"},
      {"Q2.right", "id[A]*i ; m", "id[A]"},
      {"Q3.left", "m^**id[A] ; id[A]*m", "m ; m^*"},
      {"Q3.right", "id[A]*m^* ; m*id[A]", "m ; m^*"},
      {"Q4", "m^* ; m", "id[A]"},
  };
  return axioms;
}

VerificationReport verify_qsystem(const QSystem& q, Tolerance tol) {
  require_signature(q.mult, Word{q.space, q.space}, Word(q.space), "multiplication");
  require_signature(q.unit, Word{}, Word(q.space), "unit");
  VerificationReport report(tol);
  run_axioms(report, qsystem_axioms(), qsystem_environment(q));
  return report;
}

Duality ev_coev(const QSystem& q, Tolerance tol) {
  Environment env = qsystem_environment(q);
  LinearMap ev = diagram::eval("m ; i^*", env);
  LinearMap coev = diagram::eval("i ; m^*", env);
  env.add_generator("ev", ev);
  env.add_generator("coev", coev);
  VerificationReport zz(tol);
  check_into(zz, "zigzag.left", "id[A]*coev ; ev*id[A]", "id[A]", env);
  check_into(zz, "zigzag.right", "coev*id[A] ; id[A]*ev", "id[A]", env);
  return {std::move(ev), std::move(coev), std::move(zz)};
}

bool is_unitarily_separable(const LinearMap& ev, Tolerance tol) {
  if (!ev.codomain().empty()) {
    throw WireMismatch("pairing must land in C, got " + ev.codomain().to_string());
  }
  return approx_eq(compose(ev, adjoint(ev)), identity(Word{}), tol);
}

namespace {

QSystem finish(Space space, Matrix m, Matrix i) {
  const Word a(space);
  QSystem q{space, LinearMap(Word{space, space}, a, std::move(m)), LinearMap(Word{}, a, std::move(i))};
  q.verified = verify_qsystem(q, Tolerance(1e-10)).passed();
  return q;
}

}  // namespace

QSystem function_algebra(std::size_t n, const std::string& name) {
  const auto d = static_cast<Eigen::Index>(n);
  Matrix m = Matrix::Zero(d, d * d);
  for (Eigen::Index j = 0; j < d; ++j) m(j, j * d + j) = 1.0;
  return finish(Space(name, n), std::move(m), Matrix::Ones(d, 1));
}

QSystem matrix_algebra(std::size_t n, const std::string& name) {
  const auto k = static_cast<Eigen::Index>(n);
  const Eigen::Index d = k * k;
  const double s = std::sqrt(static_cast<double>(n));
  Matrix m = Matrix::Zero(d, d * d);
  Matrix i = Matrix::Zero(d, 1);
  for (Eigen::Index a = 0; a < k; ++a) {
    i(a * k + a, 0) = s;
    for (Eigen::Index b = 0; b < k; ++b) {
      for (Eigen::Index c = 0; c < k; ++c) m(a * k + c, (a * k + b) * d + (b * k + c)) = 1.0 / s;
    }
  }
  return finish(Space(name, n * n), std::move(m), std::move(i));
}

QSystem group_algebra(const FiniteGroup& g, const std::string& name) {
  const auto d = static_cast<Eigen::Index>(g.order());
  const double s = std::sqrt(static_cast<double>(g.order()));
  Matrix m = Matrix::Zero(d, d * d);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) {
      m(static_cast<Eigen::Index>(g.mul(static_cast<std::size_t>(a), static_cast<std::size_t>(b))), a * d + b) = 1.0 / s;
    }
  }
  Matrix i = Matrix::Zero(d, 1);
  i(static_cast<Eigen::Index>(g.unit()), 0) = s;
  return finish(Space(name, g.order()), std::move(m), std::move(i));
}

QSystem group_algebra(const FiniteGroup::Table& mult, std::size_t unit,
                      const std::vector<std::size_t>& inverse, const std::string& name) {
  return group_algebra(FiniteGroup(mult, unit, inverse), name);
}

// ---------------------------------------------------------------------------

Environment qsys_bimodule_environment(const QSysBimodule& m) {
  Environment env;
  env.add_space("Q", m.left.space);
  env.add_space("P", m.right.space);
  env.add_space("X", m.space);
  env.add_generator("mQ", m.left.mult);
  env.add_generator("iQ", m.left.unit);
  env.add_generator("mP", m.right.mult);
  env.add_generator("iP", m.right.unit);
  env.add_generator("l", m.lambda);
  env.add_generator("r", m.rho);
  return env;
}

const std::vector<AxiomEquation>& qsys_bimodule_axioms() {
  static const std::vector<AxiomEquation> axioms = {
      {"B1.left", "id[Q]*l ; l", "mQ*id[X] ; l"},
      {"B1.right", "r*id[P] ; r", "id[X]*mP ; r"},
      {"B1.middle", "l*id[P] ; r", "id[Q]*r ; l"},
      {"B2.left", "iQ*id[X] ; l", "id[X]"},
      {"B2.right", "id[X]*iP ; r", "id[X]"},
      {"B3.left.1", "id[Q]*l^* ; mQ*id[X]", "l ; l^*"},
      {"B3.left.2", "mQ^**id[X] ; id[Q]*l", "l ; l^*"},
      {"B3.right.1", "r^**id[P] ; id[X]*mP", "r ; r^*"},
      {"B3.right.2", "id[X]*mP^* ; r*id[P]", "r ; r^*"},
      {"B4.left", "l^* ; l", "id[X]"},
      {"B4.right", "r^* ; r", "id[X]"},
  };
  return axioms;
}

VerificationReport verify_qsys_bimodule(const QSysBimodule& m, Tolerance tol) {
  require_signature(m.lambda, Word{m.left.space, m.space}, Word(m.space), "left action");
  require_signature(m.rho, Word{m.space, m.right.space}, Word(m.space), "right action");
  VerificationReport report(tol);
  run_axioms(report, qsys_bimodule_axioms(), qsys_bimodule_environment(m));
  return report;
}

QSysBimodule self_bimodule(const QSystem& q) {
  return {q, q, q.space, q.mult, q.mult, q.verified};
}

bool same_qsystem(const QSystem& a, const QSystem& b) {
  return a.space == b.space && a.mult.matrix() == b.mult.matrix() &&
         a.unit.matrix() == b.unit.matrix();
}

namespace {

void require_same_pair(const QSysBimodule& m, const QSysBimodule& n) {
  if (!same_qsystem(m.left, n.left) || !same_qsystem(m.right, n.right)) {
    throw PairMismatch("bimodules sit over different pairs of Q-systems");
  }
}

}  // namespace

VerificationReport verify_qsys_intertwiner(const LinearMap& f, const QSysBimodule& m,
                                           const QSysBimodule& n, Tolerance tol) {
  require_same_pair(m, n);
  require_signature(f, Word(m.space), Word(n.space), "intertwiner");
  Environment env;
  env.add_space("Q", m.left.space);
  env.add_space("P", m.right.space);
  env.add_space("X", m.space);
  env.add_space("Y", n.space);
  env.add_generator("lX", m.lambda);
  env.add_generator("rX", m.rho);
  env.add_generator("lY", n.lambda);
  env.add_generator("rY", n.rho);
  env.add_generator("f", f);
  VerificationReport report(tol);
  check_into(report, "lambda", "lX ; f", "id[Q]*f ; lY", env);
  check_into(report, "rho", "rX ; f", "f*id[P] ; rY", env);
  return report;
}

std::vector<LinearMap> qsys_intertwiner_basis(const QSysBimodule& m, const QSysBimodule& n,
                                              Tolerance tol) {
  require_same_pair(m, n);
  const LinearMap idq = identity(Word(m.left.space));
  const LinearMap idp = identity(Word(m.right.space));
  return solution_basis(
      Word(m.space), Word(n.space),
      [&](const LinearMap& f) {
        const Matrix a = compose(f, m.lambda).matrix() - compose(n.lambda, tensor(idq, f)).matrix();
        const Matrix b = compose(f, m.rho).matrix() - compose(n.rho, tensor(f, idp)).matrix();
        Vector out(a.size() + b.size());
        out << flatten(a), flatten(b);
        return out;
      },
      tol);
}

QSysSplit split_qsys_bimodule(const LinearMap& p, const QSysBimodule& m, Tolerance tol,
                              const std::string& name) {
  LinearMap iso = range_factorize(p, tol, name.empty() ? m.space.name() + "_p" : name);
  const VerificationReport inter = verify_qsys_intertwiner(p, m, m, tol);
  if (!inter.passed()) {
    throw NotAnIntertwiner("projection does not commute with the actions", inter.max_residual());
  }
  const Space w = iso.domain().factors().front();
  const LinearMap iso_star = adjoint(iso);
  QSysBimodule sub{m.left,
                   m.right,
                   w,
                   compose(iso_star, compose(m.lambda, tensor(identity(Word(m.left.space)), iso))),
                   compose(iso_star, compose(m.rho, tensor(iso, identity(Word(m.right.space))))),
                   false};
  sub.verified = verify_qsys_bimodule(sub, tol.scaled(10)).passed();
  return {std::move(sub), std::move(iso)};
}

SplitObstruction split_dimension_obstruction(const QSystem& q) {
  const std::size_t d = q.space.dim();
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(d))));
  return {d, r * r == d};
}

}  // namespace qsyslab
