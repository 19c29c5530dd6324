#include "qsyslab/cqg.hpp"

#include <algorithm>

namespace qsyslab {

using diagram::check_into;
using diagram::Environment;

namespace {

Eigen::Index idx(std::size_t n) { return static_cast<Eigen::Index>(n); }

Vector basis_vector(Eigen::Index n, Eigen::Index k) {
  Vector v = Vector::Zero(n);
  v(k) = 1.0;
  return v;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

/// Multiplication of A (x) A as a map (A (x) A) (x) (A (x) A) -> A (x) A.
Matrix doubled_product(const FDStarAlgebra& a) {
  const Eigen::Index n = idx(a.dim());
  const Matrix& m = a.mult.matrix();
  Matrix out(n * n, n * n * n * n);
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index q = 0; q < n; ++q) {
      for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index s = 0; s < n; ++s) {
          // (b_p (x) b_q)(b_r (x) b_s) = b_p b_r (x) b_q b_s
          out.col(((p * n + q) * n + r) * n + s) =
              kron(m.col(p * n + r), m.col(q * n + s));
        }
      }
    }
  }
  return out;
}

Eigen::Index numerical_rank(const Matrix& m, double eps) {
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  Eigen::Index r = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) r += sv(k) > eps * sv(0);
  return r;
}

void require_shape(const LinearMap& f, const Word& dom, const Word& cod, const char* what) {
  if (!(f.domain() == dom) || !(f.codomain() == cod)) {
    throw ShapeError(std::string(what) + " must be " + dom.to_string() + " -> " + cod.to_string() +
                     ", got " + f.domain().to_string() + " -> " + f.codomain().to_string());
  }
}

// Largest |<alpha(xi_a), alpha(xi_b)> - delta_ab 1| with <x (x) v, y (x) w> = <v, w> x* y.
// `coefficient(a, v)` returns the algebra element paired with basis vector v in alpha(xi_a).
template <typename Coefficient>
double inner_product_residual(const FDStarAlgebra& alg, Eigen::Index d, Coefficient coefficient) {
  double r = 0.0;
  std::vector<std::vector<Vector>> coeff(static_cast<std::size_t>(d));
  std::vector<std::vector<Vector>> starred(static_cast<std::size_t>(d));
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index v = 0; v < d; ++v) {
      coeff[static_cast<std::size_t>(a)].push_back(coefficient(a, v));
      starred[static_cast<std::size_t>(a)].push_back(alg.star(coeff[static_cast<std::size_t>(a)].back()));
    }
  }
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) {
      Vector acc = a == b ? Vector(-alg.unit) : Vector(Vector::Zero(idx(alg.dim())));
      for (Eigen::Index v = 0; v < d; ++v) {
        acc += alg.product(starred[static_cast<std::size_t>(a)][static_cast<std::size_t>(v)],
                           coeff[static_cast<std::size_t>(b)][static_cast<std::size_t>(v)]);
      }
      r = std::max(r, acc.size() ? acc.cwiseAbs().maxCoeff() : 0.0);
    }
  }
  return r;
}

double left_inner_residual(const LinearMap& alpha, const FDStarAlgebra& alg) {
  const Eigen::Index d = idx(alpha.domain().dim());
  const Eigen::Index n = idx(alg.dim());
  const Matrix& m = alpha.matrix();
  return inner_product_residual(alg, d, [&](Eigen::Index a, Eigen::Index v) {
    Vector x(n);
    for (Eigen::Index g = 0; g < n; ++g) x(g) = m(g * d + v, a);
    return x;
  });
}

double right_inner_residual(const LinearMap& alpha, const FDStarAlgebra& alg) {
  const Eigen::Index d = idx(alpha.domain().dim());
  const Eigen::Index n = idx(alg.dim());
  const Matrix& m = alpha.matrix();
  return inner_product_residual(alg, d, [&](Eigen::Index a, Eigen::Index v) -> Vector {
    return m.col(a).segment(v * n, n);
  });
}

Environment group_environment(const FiniteQuantumGroup& g) {
  Environment env;
  env.add_space("A", g.algebra.space);
  env.add_generator("D", g.comult);
  return env;
}

}  // namespace

Vector FDStarAlgebra::product(const Vector& x, const Vector& y) const {
  return mult.matrix() * kron(x, y);
}

Vector FDStarAlgebra::star(const Vector& x) const { return involution * x.conjugate(); }

FDStarAlgebra make_star_algebra(const Space& space, const StructureConstants& c,
                                const Vector& unit, const Matrix& involution) {
  const Eigen::Index n = idx(space.dim());
  if (idx(c.size()) != n) throw ShapeError("structure constants: first index has wrong size");
  Matrix m(n, n * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (idx(c[j].size()) != n) throw ShapeError("structure constants: second index has wrong size");
    for (Eigen::Index k = 0; k < n; ++k) {
      if (idx(c[j][k].size()) != n) throw ShapeError("structure constants: third index has wrong size");
      for (Eigen::Index l = 0; l < n; ++l) m(l, j * n + k) = c[j][k][l];
    }
  }
  if (unit.size() != n) throw ShapeError("unit vector has wrong length");
  if (involution.rows() != n || involution.cols() != n) throw ShapeError("involution has wrong shape");
  if (!unit.allFinite() || !involution.allFinite()) throw ShapeError("non-finite entries");
  return {space, LinearMap(Word{space, space}, Word(space), std::move(m)), unit, involution};
}

StructureConstants structure_constants(const FDStarAlgebra& a) {
  const Eigen::Index n = idx(a.dim());
  StructureConstants c(a.dim(), std::vector<std::vector<Complex>>(a.dim(), std::vector<Complex>(a.dim())));
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k)
      for (Eigen::Index l = 0; l < n; ++l) c[j][k][l] = a.mult.matrix()(l, j * n + k);
  return c;
}

VerificationReport verify_star_algebra(const FDStarAlgebra& a, Tolerance tol) {
  const Eigen::Index n = idx(a.dim());
  require_shape(a.mult, Word{a.space, a.space}, Word(a.space), "multiplication");
  if (a.unit.size() != n) throw ShapeError("unit vector has wrong length");
  if (a.involution.rows() != n || a.involution.cols() != n) throw ShapeError("involution has wrong shape");

  VerificationReport report(tol);
  Environment env;
  env.add_space("A", a.space);
  env.add_generator("m", a.mult);
  check_into(report, "associativity", "id[A]*m ; m", "m*id[A] ; m", env);
  const Matrix& m = a.mult.matrix();
  const Matrix id = Matrix::Identity(n, n);
  Matrix left(n, n), right(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    left.col(k) = a.product(a.unit, id.col(k));
    right.col(k) = a.product(id.col(k), a.unit);
  }
  report.add("unit.left", max_abs(left - id));
  report.add("unit.right", max_abs(right - id));
  report.add("star.involutive", max_abs(a.involution * a.involution.conjugate() - id));
  double anti = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const Vector lhs = a.star(m.col(j * n + k));
      const Vector rhs = a.product(a.involution.col(k), a.involution.col(j));
      anti = std::max(anti, max_abs(lhs - rhs));
    }
  }
  report.add("star.antimultiplicative", anti);
  return report;
}

VerificationReport verify_cqg(const FiniteQuantumGroup& g, Tolerance tol) {
  const FDStarAlgebra& a = g.algebra;
  const Eigen::Index n = idx(a.dim());
  require_shape(g.comult, Word(a.space), Word{a.space, a.space}, "comultiplication");
  VerificationReport report(tol);
  check_into(report, "coassociativity", "D ; D*id[A]", "D ; id[A]*D", group_environment(g));

  const Matrix& d = g.comult.matrix();
  report.add("unital", max_abs(d * a.unit - kron(a.unit, a.unit)));

  const Matrix m2 = doubled_product(a);
  const Matrix dd = tensor(g.comult, g.comult).matrix();
  report.add("multiplicative", max_abs(d * a.mult.matrix() - m2 * dd));

  const Matrix ss = tensor(LinearMap(Word(a.space), Word(a.space), a.involution),
                           LinearMap(Word(a.space), Word(a.space), a.involution))
                        .matrix();
  report.add("star", max_abs(d * a.involution - ss * d.conjugate()));

  // a (x) b -> (a (x) 1) Delta(b) and a (x) b -> (1 (x) a) Delta(b)
  Matrix id_u(n * n, n), u_id(n * n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    id_u.col(k) = kron(basis_vector(n, k), a.unit);
    u_id.col(k) = kron(a.unit, basis_vector(n, k));
  }
  const Word aa{a.space, a.space};
  const Matrix cl = m2 * tensor(LinearMap(Word(a.space), aa, id_u), g.comult).matrix();
  const Matrix cr = m2 * tensor(LinearMap(Word(a.space), aa, u_id), g.comult).matrix();
  const Eigen::Index full = n * n;
  const Eigen::Index rl = numerical_rank(cl, tol.eps);
  const Eigen::Index rr = numerical_rank(cr, tol.eps);
  report.add_decided("cancellation.left", static_cast<double>(full - rl), rl == full);
  report.add_decided("cancellation.right", static_cast<double>(full - rr), rr == full);
  return report;
}

namespace {

FiniteQuantumGroup finish(FDStarAlgebra alg, Matrix comult) {
  const Space s = alg.space;
  FiniteQuantumGroup g{std::move(alg), LinearMap(Word(s), Word{s, s}, std::move(comult)), false};
  const Tolerance tol(1e-10);
  g.verified = verify_star_algebra(g.algebra, tol).passed() && verify_cqg(g, tol).passed();
  return g;
}

}  // namespace

FiniteQuantumGroup function_algebra_of_group(const FiniteGroup& grp, const std::string& name) {
  const Eigen::Index n = idx(grp.order());
  const Space s(name, grp.order());
  Matrix m = Matrix::Zero(n, n * n);
  Matrix d = Matrix::Zero(n * n, n);
  for (Eigen::Index g = 0; g < n; ++g) {
    m(g, g * n + g) = 1.0;
    for (Eigen::Index h = 0; h < n; ++h) {
      d(h * n + g, idx(grp.mul(static_cast<std::size_t>(h), static_cast<std::size_t>(g)))) = 1.0;
    }
  }
  FDStarAlgebra alg{s, LinearMap(Word{s, s}, Word(s), std::move(m)), Vector::Ones(n),
                    Matrix::Identity(n, n)};
  return finish(std::move(alg), std::move(d));
}

FiniteQuantumGroup function_algebra_of_group(const FiniteGroup::Table& mult, const std::string& name) {
  return function_algebra_of_group(FiniteGroup::from_table(mult), name);
}

FiniteQuantumGroup group_algebra_qg(const FiniteGroup& grp, const std::string& name) {
  const Eigen::Index n = idx(grp.order());
  const Space s(name, grp.order());
  Matrix m = Matrix::Zero(n, n * n);
  Matrix d = Matrix::Zero(n * n, n);
  Matrix inv = Matrix::Zero(n, n);
  for (Eigen::Index g = 0; g < n; ++g) {
    const auto gu = static_cast<std::size_t>(g);
    for (Eigen::Index h = 0; h < n; ++h) m(idx(grp.mul(gu, static_cast<std::size_t>(h))), g * n + h) = 1.0;
    d(g * n + g, g) = 1.0;
    inv(idx(grp.inverse(gu)), g) = 1.0;
  }
  Vector unit = Vector::Zero(n);
  unit(idx(grp.unit())) = 1.0;
  FDStarAlgebra alg{s, LinearMap(Word{s, s}, Word(s), std::move(m)), std::move(unit), std::move(inv)};
  return finish(std::move(alg), std::move(d));
}

FiniteQuantumGroup group_algebra_qg(const FiniteGroup::Table& mult, const std::string& name) {
  return group_algebra_qg(FiniteGroup::from_table(mult), name);
}

bool same_group(const FiniteQuantumGroup& a, const FiniteQuantumGroup& b) {
  return a.algebra.space == b.algebra.space && a.algebra.mult.matrix() == b.algebra.mult.matrix() &&
         a.algebra.unit == b.algebra.unit && a.algebra.involution == b.algebra.involution &&
         a.comult.matrix() == b.comult.matrix();
}

// ---------------------------------------------------------------------------
// Corepresentations and one-sided modules

VerificationReport verify_corep(const Corepresentation& u, Tolerance tol) {
  const FDStarAlgebra& alg = u.group.algebra;
  const std::size_t d = u.space.dim();
  if (u.entries.size() != d * d) throw ShapeError("corepresentation needs d*d entries");
  for (const auto& e : u.entries) {
    if (e.size() != idx(alg.dim())) throw ShapeError("corepresentation entry has wrong length");
  }
  const Matrix& delta = u.group.comult.matrix();
  double co = 0.0, left = 0.0, right = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      Vector sum = Vector::Zero(delta.rows());
      Vector l_acc = j == k ? Vector(-alg.unit) : Vector(Vector::Zero(alg.unit.size()));
      Vector r_acc = l_acc;
      for (std::size_t l = 0; l < d; ++l) {
        sum += kron(u.entry(j, l), u.entry(l, k));
        l_acc += alg.product(alg.star(u.entry(l, j)), u.entry(l, k));
        r_acc += alg.product(u.entry(j, l), alg.star(u.entry(k, l)));
      }
      co = std::max(co, max_abs(delta * u.entry(j, k) - sum));
      left = std::max(left, max_abs(l_acc));
      right = std::max(right, max_abs(r_acc));
    }
  }
  VerificationReport report(tol);
  report.add("comultiplicative", co);
  report.add("unitary.left", left);
  report.add("unitary.right", right);
  return report;
}

Corepresentation corep_from_group_representation(const FiniteQuantumGroup& cg,
                                                 const Representation& pi,
                                                 const std::string& name) {
  const std::size_t n = cg.algebra.dim();
  if (pi.size() != n || pi.empty()) throw ShapeError("representation must have one matrix per group element");
  const std::size_t d = static_cast<std::size_t>(pi.front().rows());
  Corepresentation u{cg, Space(name, d), {}};
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      Vector e(idx(n));
      for (std::size_t g = 0; g < n; ++g) e(idx(g)) = pi[g](idx(j), idx(k));
      u.entries.push_back(std::move(e));
    }
  }
  return u;
}

VerificationReport verify_right_module(const LinearMap& alpha, const FiniteQuantumGroup& g,
                                       Tolerance tol) {
  const Space& a = g.algebra.space;
  require_shape(alpha, alpha.domain(), concat(alpha.domain(), Word(a)), "right coaction");
  Environment env = group_environment(g);
  env.add_alias("V", alpha.domain());
  env.add_generator("alpha", alpha);
  VerificationReport report(tol);
  check_into(report, "coaction", "alpha ; id[V]*D", "alpha ; alpha*id[A]", env);
  report.add("inner_product", right_inner_residual(alpha, g.algebra));
  return report;
}

VerificationReport verify_left_module(const LinearMap& alpha, const FiniteQuantumGroup& g,
                                      Tolerance tol) {
  const Space& a = g.algebra.space;
  require_shape(alpha, alpha.domain(), concat(Word(a), alpha.domain()), "left coaction");
  Environment env = group_environment(g);
  env.add_alias("V", alpha.domain());
  env.add_generator("alpha", alpha);
  VerificationReport report(tol);
  check_into(report, "coaction", "alpha ; D*id[V]", "alpha ; id[A]*alpha", env);
  report.add("inner_product", left_inner_residual(alpha, g.algebra));
  return report;
}

LinearMap corep_to_module(const Corepresentation& u, Tolerance tol) {
  const VerificationReport r = verify_corep(u, tol);
  if (!r.passed()) throw VerificationFailed("not a unitary corepresentation:\n" + r.summary());
  const Eigen::Index d = idx(u.space.dim());
  const Eigen::Index n = idx(u.group.algebra.dim());
  Matrix m(d * n, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index k = 0; k < d; ++k) m.block(j * n, k, n, 1) = u.entry(static_cast<std::size_t>(j), static_cast<std::size_t>(k));
  return LinearMap(Word(u.space), Word{u.space, u.group.algebra.space}, std::move(m));
}

namespace {

const Space& single_space(const LinearMap& alpha) {
  if (alpha.domain().size() != 1) {
    throw ShapeError("coaction domain must be a single space, got " + alpha.domain().to_string());
  }
  return alpha.domain().factors().front();
}

}  // namespace

Corepresentation module_to_corep(const LinearMap& alpha, const FiniteQuantumGroup& g,
                                 Tolerance tol) {
  const Space& v = single_space(alpha);
  const VerificationReport r = verify_right_module(alpha, g, tol);
  if (!r.passed()) throw VerificationFailed("not a unitary right module:\n" + r.summary());
  const Eigen::Index d = idx(v.dim());
  const Eigen::Index n = idx(g.algebra.dim());
  Corepresentation u{g, v, {}};
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index k = 0; k < d; ++k) u.entries.push_back(alpha.matrix().block(j * n, k, n, 1));
  return u;
}

LinearMap corep_to_left_module(const Corepresentation& u, Tolerance tol) {
  const VerificationReport r = verify_corep(u, tol);
  if (!r.passed()) throw VerificationFailed("not a unitary corepresentation:\n" + r.summary());
  const Eigen::Index d = idx(u.space.dim());
  const Eigen::Index n = idx(u.group.algebra.dim());
  const FDStarAlgebra& alg = u.group.algebra;
  Matrix m = Matrix::Zero(n * d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index j = 0; j < d; ++j) {
      const Vector s = alg.star(u.entry(static_cast<std::size_t>(k), static_cast<std::size_t>(j)));
      for (Eigen::Index a = 0; a < n; ++a) m(a * d + j, k) = s(a);
    }
  }
  return LinearMap(Word(u.space), Word{alg.space, u.space}, std::move(m));
}

Corepresentation left_module_to_corep(const LinearMap& alpha, const FiniteQuantumGroup& g,
                                      Tolerance tol) {
  const Space& v = single_space(alpha);
  const VerificationReport r = verify_left_module(alpha, g, tol);
  if (!r.passed()) throw VerificationFailed("not a unitary left module:\n" + r.summary());
  const Eigen::Index d = idx(v.dim());
  const Eigen::Index n = idx(g.algebra.dim());
  Corepresentation u{g, v, std::vector<Vector>(static_cast<std::size_t>(d * d))};
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index j = 0; j < d; ++j) {
      Vector c(n);
      for (Eigen::Index a = 0; a < n; ++a) c(a) = alpha.matrix()(a * d + j, k);
      u.entries[static_cast<std::size_t>(k * d + j)] = g.algebra.star(c);
    }
  }
  return u;
}

// ---------------------------------------------------------------------------
// Bimodules

namespace {

Environment bimodule_environment(const UnitaryBimodule& v) {
  Environment env;
  env.add_space("G", v.left_group.algebra.space);
  env.add_space("H", v.right_group.algebra.space);
  env.add_alias("V", v.space);
  env.add_generator("DG", v.left_group.comult);
  env.add_generator("DH", v.right_group.comult);
  env.add_generator("aL", v.left_coaction);
  env.add_generator("aR", v.right_coaction);
  return env;
}

void require_same_groups(const UnitaryBimodule& v, const UnitaryBimodule& w) {
  if (!same_group(v.left_group, w.left_group) || !same_group(v.right_group, w.right_group)) {
    throw GroupMismatch("bimodules over different quantum groups");
  }
}

UnitaryBimodule checked(UnitaryBimodule b) {
  b.verified = verify_bimodule(b, Tolerance(1e-9)).passed();
  return b;
}

}  // namespace

VerificationReport verify_bimodule(const UnitaryBimodule& v, Tolerance tol) {
  const Word g(v.left_group.algebra.space);
  const Word h(v.right_group.algebra.space);
  require_shape(v.left_coaction, v.space, concat(g, v.space), "left coaction");
  require_shape(v.right_coaction, v.space, concat(v.space, h), "right coaction");
  const Environment env = bimodule_environment(v);
  VerificationReport report(tol);
  check_into(report, "i", "aL ; DG*id[V]", "aL ; id[G]*aL", env);
  check_into(report, "ii", "aR ; id[V]*DH", "aR ; aR*id[H]", env);
  check_into(report, "iii", "aL ; id[G]*aR", "aR ; aL*id[H]", env);
  report.add("iv.left", left_inner_residual(v.left_coaction, v.left_group.algebra));
  report.add("iv.right", right_inner_residual(v.right_coaction, v.right_group.algebra));
  return report;
}

LinearMap trivial_coaction(const Word& v, const FiniteQuantumGroup& g, Side side) {
  const Eigen::Index d = idx(v.dim());
  const Eigen::Index n = idx(g.algebra.dim());
  const Vector& u = g.algebra.unit;
  Matrix m = Matrix::Zero(n * d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index a = 0; a < n; ++a) {
      if (side == Side::left) {
        m(a * d + k, k) = u(a);
      } else {
        m(k * n + a, k) = u(a);
      }
    }
  }
  const Word gw(g.algebra.space);
  return LinearMap(v, side == Side::left ? concat(gw, v) : concat(v, gw), std::move(m));
}

UnitaryBimodule trivial_bimodule(const Word& v, const FiniteQuantumGroup& g,
                                 const FiniteQuantumGroup& h) {
  return checked({g, h, v, trivial_coaction(v, g, Side::left), trivial_coaction(v, h, Side::right)});
}

UnitaryBimodule unit_bimodule(const FiniteQuantumGroup& g) { return trivial_bimodule(Word{}, g, g); }

UnitaryBimodule direct_sum_bimodule(const UnitaryBimodule& v, const UnitaryBimodule& w,
                                    const std::string& name) {
  require_same_groups(v, w);
  const std::size_t dv = v.space.dim(), dw = w.space.dim();
  const std::string n = name.empty() ? "sum" : name;
  const Space s = dv + dw == 0 ? Space::zero(n) : Space(n, dv + dw);
  Matrix iu = Matrix::Zero(idx(dv + dw), idx(dv));
  Matrix iv = Matrix::Zero(idx(dv + dw), idx(dw));
  iu.topRows(idx(dv)).setIdentity();
  iv.bottomRows(idx(dw)).setIdentity();
  const LinearMap u(v.space, Word(s), std::move(iu));
  const LinearMap p(w.space, Word(s), std::move(iv));
  const LinearMap ig = identity(Word(v.left_group.algebra.space));
  const LinearMap ih = identity(Word(v.right_group.algebra.space));
  LinearMap left = add(compose(compose(tensor(ig, u), v.left_coaction), adjoint(u)),
                       compose(compose(tensor(ig, p), w.left_coaction), adjoint(p)));
  LinearMap right = add(compose(compose(tensor(u, ih), v.right_coaction), adjoint(u)),
                        compose(compose(tensor(p, ih), w.right_coaction), adjoint(p)));
  return checked({v.left_group, v.right_group, Word(s), std::move(left), std::move(right)});
}

UnitaryBimodule tensor_bimodule(const UnitaryBimodule& v, const UnitaryBimodule& w) {
  if (!same_group(v.right_group, w.left_group)) {
    throw GroupMismatch("tensor product needs matching middle quantum group");
  }
  return checked({v.left_group, w.right_group, concat(v.space, w.space),
                  tensor(v.left_coaction, identity(w.space)),
                  tensor(identity(v.space), w.right_coaction)});
}

VerificationReport verify_intertwiner(const LinearMap& t, const UnitaryBimodule& v,
                                      const UnitaryBimodule& w, Tolerance tol) {
  require_same_groups(v, w);
  if (!(t.domain() == v.space) || !(t.codomain() == w.space)) {
    throw WireMismatch("intertwiner must be " + v.space.to_string() + " -> " + w.space.to_string() +
                       ", got " + t.domain().to_string() + " -> " + t.codomain().to_string());
  }
  Environment env;
  env.add_space("G", v.left_group.algebra.space);
  env.add_space("H", v.right_group.algebra.space);
  env.add_alias("V", v.space);
  env.add_alias("W", w.space);
  env.add_generator("aLV", v.left_coaction);
  env.add_generator("aRV", v.right_coaction);
  env.add_generator("aLW", w.left_coaction);
  env.add_generator("aRW", w.right_coaction);
  env.add_generator("T", t);
  VerificationReport report(tol);
  check_into(report, "left", "aLV ; id[G]*T", "T ; aLW", env);
  check_into(report, "right", "aRV ; T*id[H]", "T ; aRW", env);
  return report;
}

LinearMap compose_intertwiners(const LinearMap& s, const LinearMap& t, const UnitaryBimodule& u,
                               const UnitaryBimodule& v, const UnitaryBimodule& w, Tolerance tol) {
  for (const auto& [f, a, b] : {std::tuple{&t, &u, &v}, std::tuple{&s, &v, &w}}) {
    const VerificationReport r = verify_intertwiner(*f, *a, *b, tol);
    if (!r.passed()) throw NotAnIntertwiner("compose_intertwiners: input fails", r.max_residual());
  }
  LinearMap out = compose(s, t);
  const VerificationReport r = verify_intertwiner(out, u, w, tol.scaled(10));
  if (!r.passed()) throw VerificationFailed("composite is not an intertwiner:\n" + r.summary());
  return out;
}

LinearMap tensor_intertwiners(const LinearMap& t, const UnitaryBimodule& v1,
                              const UnitaryBimodule& v2, const LinearMap& s,
                              const UnitaryBimodule& w1, const UnitaryBimodule& w2, Tolerance tol) {
  for (const auto& [f, a, b] : {std::tuple{&t, &v1, &v2}, std::tuple{&s, &w1, &w2}}) {
    const VerificationReport r = verify_intertwiner(*f, *a, *b, tol);
    if (!r.passed()) throw NotAnIntertwiner("tensor_intertwiners: input fails", r.max_residual());
  }
  LinearMap out = tensor(t, s);
  const VerificationReport r =
      verify_intertwiner(out, tensor_bimodule(v1, w1), tensor_bimodule(v2, w2), tol.scaled(10));
  if (!r.passed()) throw VerificationFailed("tensor product is not an intertwiner:\n" + r.summary());
  return out;
}

std::vector<LinearMap> intertwiner_basis(const UnitaryBimodule& v, const UnitaryBimodule& w,
                                         Tolerance tol) {
  require_same_groups(v, w);
  const LinearMap ig = identity(Word(v.left_group.algebra.space));
  const LinearMap ih = identity(Word(v.right_group.algebra.space));
  return solution_basis(
      v.space, w.space,
      [&](const LinearMap& t) {
        const Matrix a = compose(tensor(ig, t), v.left_coaction).matrix() -
                         compose(w.left_coaction, t).matrix();
        const Matrix b = compose(tensor(t, ih), v.right_coaction).matrix() -
                         compose(w.right_coaction, t).matrix();
        Vector out(a.size() + b.size());
        out << Eigen::Map<const Vector>(a.data(), a.size()), Eigen::Map<const Vector>(b.data(), b.size());
        return out;
      },
      tol);
}

BimoduleSplit split_idempotent(const LinearMap& p, const UnitaryBimodule& v, Tolerance tol,
                               const std::string& name) {
  LinearMap iso = range_factorize(p, tol, name.empty() ? "W" : name);
  const VerificationReport inter = verify_intertwiner(p, v, v, tol);
  if (!inter.passed()) {
    throw NotAnIntertwiner("projection is not an intertwiner:\n" + inter.summary(), inter.max_residual());
  }
  const LinearMap iso_star = adjoint(iso);
  const LinearMap ig = identity(Word(v.left_group.algebra.space));
  const LinearMap ih = identity(Word(v.right_group.algebra.space));
  UnitaryBimodule w{v.left_group, v.right_group, iso.domain(),
                    compose(tensor(ig, iso_star), compose(v.left_coaction, iso)),
                    compose(tensor(iso_star, ih), compose(v.right_coaction, iso)), false};
  w.verified = verify_bimodule(w, tol.scaled(10)).passed();
  return {std::move(w), std::move(iso)};
}

VerificationReport verify_qsystem_in_G(const QSystem& q, const UnitaryBimodule& b, Tolerance tol) {
  if (!same_group(b.left_group, b.right_group)) {
    throw GroupMismatch("a Q-system in G needs a G-G bimodule");
  }
  if (!(b.space == Word(q.space))) {
    throw WireMismatch("bimodule space " + b.space.to_string() + " is not the Q-system space " +
                       q.space.name());
  }
  VerificationReport report(tol);
  report.merge(verify_qsystem(q, tol), "qsystem.");
  report.merge(verify_intertwiner(q.mult, tensor_bimodule(b, b), b, tol), "mult.");
  report.merge(verify_intertwiner(q.unit, unit_bimodule(b.left_group), b, tol), "unit.");
  return report;
}

}  // namespace qsyslab
