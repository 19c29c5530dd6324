#include "generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsyslab::testing {

Matrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = Complex(n(rng), n(rng));
  return m;
}

Matrix random_unitary(Rng& rng, Eigen::Index n) {
  Eigen::HouseholderQR<Matrix> qr(random_matrix(rng, n, n));
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double a = std::abs(r(k, k));
    if (a > 0) q.col(k) *= r(k, k) / a;
  }
  return q;
}

LinearMap random_contraction(Rng& rng, const Word& dom, const Word& cod) {
  Matrix m = random_matrix(rng, static_cast<Eigen::Index>(cod.dim()), static_cast<Eigen::Index>(dom.dim()));
  const double norm = Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
  if (norm > 0) m /= norm;
  return LinearMap(dom, cod, std::move(m));
}

std::vector<Matrix> spectral_projections(const Matrix& hermitian, double gap) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (hermitian + hermitian.adjoint()));
  const auto& ev = eig.eigenvalues();  // ascending
  const Eigen::Index n = ev.size();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  std::vector<Matrix> out;
  for (Eigen::Index cut = 1; cut < n; ++cut) {
    if (ev(cut) - ev(cut - 1) <= gap * scale) continue;
    const Matrix v = eig.eigenvectors().rightCols(n - cut);
    out.push_back(v * v.adjoint());
  }
  return out;
}

// ---------------------------------------------------------------------------

diagram::ExprPtr random_ast(Rng& rng, int depth) {
  static const char* names[] = {"f", "g", "m", "i", "Q1", "x_2", "ev"};
  static const char* spaces[] = {"A", "B", "H", "V0"};
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
  const int kind = pick(rng);
  auto children = [&](int lo) {
    std::uniform_int_distribution<int> count(lo, 3);
    std::vector<diagram::ExprPtr> out;
    const int k = count(rng);
    for (int j = 0; j < k; ++j) out.push_back(random_ast(rng, depth - 1));
    return out;
  };
  switch (kind) {
    case 0: return diagram::make_generator(names[std::uniform_int_distribution<int>(0, 6)(rng)]);
    case 1: {
      std::vector<std::string> s;
      const int k = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int j = 0; j < k; ++j) s.emplace_back(spaces[std::uniform_int_distribution<int>(0, 3)(rng)]);
      return diagram::make_identity(std::move(s));
    }
    case 2: return diagram::make_sequential(children(2));
    case 3: return diagram::make_parallel(children(2));
    case 4: return diagram::make_adjoint(random_ast(rng, depth - 1));
    default: return diagram::make_generator("f");
  }
}

RandomEnv random_environment(Rng& rng) {
  RandomEnv e;
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (const char* name : {"A", "B", "C"}) {
    Space s(name, dim(rng));
    e.env.add_space(name, s);
    e.spaces.emplace_back(name, s);
  }
  return e;
}

namespace {

Word to_word(const RandomEnv& env, const std::vector<std::size_t>& w) {
  std::vector<Space> f;
  for (auto k : w) f.push_back(env.spaces[k].second);
  return Word(std::move(f));
}

}  // namespace

std::vector<std::size_t> random_word(Rng& rng, const RandomEnv& env, std::size_t max_len,
                                     std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> which(0, env.spaces.size() - 1);
  for (;;) {
    std::vector<std::size_t> w(len(rng));
    for (auto& k : w) k = which(rng);
    if (to_word(env, w).dim() <= max_dim) return w;
  }
}

TypedExpr random_typed_expr(Rng& rng, RandomEnv& env, const std::vector<std::size_t>& dom,
                            const std::vector<std::size_t>& cod, int depth) {
  const Word d = to_word(env, dom);
  const Word c = to_word(env, cod);
  int kind = depth <= 0 ? 0 : std::uniform_int_distribution<int>(0, 4)(rng);
  if (kind == 4 && (dom != cod || dom.empty())) kind = 0;
  switch (kind) {
    case 1: {
      const auto mid = random_word(rng, env, 2, 16);
      TypedExpr a = random_typed_expr(rng, env, dom, mid, depth - 1);
      TypedExpr b = random_typed_expr(rng, env, mid, cod, depth - 1);
      return {diagram::make_sequential({a.expr, b.expr}), compose(b.value, a.value)};
    }
    case 2: {
      const std::size_t i = std::uniform_int_distribution<std::size_t>(0, dom.size())(rng);
      const std::size_t j = std::uniform_int_distribution<std::size_t>(0, cod.size())(rng);
      const std::vector<std::size_t> d1(dom.begin(), dom.begin() + static_cast<long>(i)), d2(dom.begin() + static_cast<long>(i), dom.end());
      const std::vector<std::size_t> c1(cod.begin(), cod.begin() + static_cast<long>(j)), c2(cod.begin() + static_cast<long>(j), cod.end());
      TypedExpr a = random_typed_expr(rng, env, d1, c1, depth - 1);
      TypedExpr b = random_typed_expr(rng, env, d2, c2, depth - 1);
      return {diagram::make_parallel({a.expr, b.expr}), tensor(a.value, b.value)};
    }
    case 3: {
      TypedExpr t = random_typed_expr(rng, env, cod, dom, depth - 1);
      return {diagram::make_adjoint(t.expr), adjoint(t.value)};
    }
    case 4: {
      std::vector<std::string> names;
      for (auto k : dom) names.push_back(env.spaces[k].first);
      return {diagram::make_identity(std::move(names)), identity(d)};
    }
    default: {
      const std::string name = "g" + std::to_string(env.next_generator++);
      LinearMap f = random_contraction(rng, d, c);
      env.env.add_generator(name, f);
      return {diagram::make_generator(name), std::move(f)};
    }
  }
}

// ---------------------------------------------------------------------------

std::vector<QSystem> standard_qsystems() {
  std::vector<QSystem> out;
  for (std::size_t n = 1; n <= 9; ++n) out.push_back(function_algebra(n));
  for (std::size_t n = 1; n <= 3; ++n) out.push_back(matrix_algebra(n));
  out.push_back(group_algebra(cyclic_group(2)));
  out.push_back(group_algebra(cyclic_group(3)));
  out.push_back(group_algebra(cyclic_group(4)));
  out.push_back(group_algebra(symmetric_group(3)));
  return out;
}

QSysBimodule product_bimodule(const QSystem& a, const QSystem& b) {
  const Space x("X", a.space.dim() * b.space.dim());
  LinearMap l = tensor(a.mult, identity(Word(b.space))).retyped(Word{a.space, x}, Word(x));
  LinearMap r = tensor(identity(Word(a.space)), b.mult).retyped(Word{x, b.space}, Word(x));
  return {a, b, x, std::move(l), std::move(r), false};
}

QSysBimodule column_module(std::size_t n) {
  const QSystem a = matrix_algebra(n, "A");
  const QSystem c = function_algebra(1, "C");
  const Space x("X", n);
  const auto k = static_cast<Eigen::Index>(n);
  Matrix l = Matrix::Zero(k, k * k * k);
  for (Eigen::Index j = 0; j < k; ++j)
    for (Eigen::Index q = 0; q < k; ++q) l(j, (j * k + q) * k + q) = 1.0 / std::sqrt(static_cast<double>(n));
  return {a, c, x, LinearMap(Word{a.space, x}, Word(x), std::move(l)),
          identity(Word(x)).retyped(Word{x, c.space}, Word(x)), false};
}

QSysBimodule conjugate_bimodule(const QSysBimodule& m, const Matrix& u) {
  const LinearMap uu(Word(m.space), Word(m.space), u);
  const LinearMap us = adjoint(uu);
  return {m.left, m.right, m.space,
          compose(uu, compose(m.lambda, tensor(identity(Word(m.left.space)), us))),
          compose(uu, compose(m.rho, tensor(us, identity(Word(m.right.space))))), false};
}

std::vector<QSysSplit> random_sub_bimodules(Rng& rng, const QSysBimodule& m) {
  const auto basis = qsys_intertwiner_basis(m, m);
  Matrix t = Matrix::Zero(static_cast<Eigen::Index>(m.space.dim()), static_cast<Eigen::Index>(m.space.dim()));
  std::normal_distribution<double> n(0.0, 1.0);
  for (const auto& b : basis) t += Complex(n(rng), n(rng)) * b.matrix();
  std::vector<QSysSplit> out;
  int k = 0;
  for (const Matrix& p : spectral_projections(t * t.adjoint())) {
    out.push_back(split_qsys_bimodule(LinearMap(Word(m.space), Word(m.space), p), m, Tolerance(1e-8),
                                      "S" + std::to_string(k++)));
  }
  return out;
}

QuantumBiElement conjugate_qbe(const QuantumBiElement& e, const Matrix& u) {
  const LinearMap uu(Word(e.space), Word(e.space), u);
  const LinearMap us = adjoint(uu);
  return {e.left_q, e.right_q, e.space,
          compose(tensor(identity(Word(e.left_q.space)), uu), compose(e.q1, us)),
          compose(tensor(uu, identity(Word(e.right_q.space))), compose(e.q2, us)), false};
}

namespace {

void require_bimodule(const QSysBimodule& m, std::vector<QSysBimodule>& out) {
  const VerificationReport r = verify_qsys_bimodule(m, Tolerance(1e-9));
  if (!r.passed()) throw std::logic_error("generated bimodule fails:\n" + r.summary());
  out.push_back(m);
  out.back().verified = true;
}

}  // namespace

std::vector<QSysBimodule> generated_qsys_bimodules(Rng& rng) {
  std::vector<QSysBimodule> out;
  const auto qs = standard_qsystems();
  for (const auto& q : qs) require_bimodule(self_bimodule(q), out);

  const QSystem f2 = function_algebra(2, "A"), f3 = function_algebra(3, "A"), f4 = function_algebra(4, "A");
  const QSystem g2 = function_algebra(2, "B"), g3 = function_algebra(3, "B");
  const QSystem m2 = matrix_algebra(2, "A"), mb2 = matrix_algebra(2, "B");
  const QSystem z3 = group_algebra(cyclic_group(3), "A"), zb3 = group_algebra(cyclic_group(3), "B");
  const std::vector<std::pair<QSystem, QSystem>> pairs = {
      {f2, g2}, {f2, g3}, {f3, g2}, {f3, g3}, {f4, g2}, {m2, g2}, {f2, mb2}, {z3, zb3}, {f3, zb3}, {z3, g3}};
  std::vector<QSysBimodule> products;
  for (const auto& [a, b] : pairs) {
    products.push_back(product_bimodule(a, b));
    require_bimodule(products.back(), out);
  }
  require_bimodule(column_module(2), out);
  require_bimodule(column_module(3), out);

  const std::size_t base = out.size();
  for (std::size_t k = 0; k < base; ++k) {
    const auto d = static_cast<Eigen::Index>(out[k].space.dim());
    if (d > 1) require_bimodule(conjugate_bimodule(out[k], random_unitary(rng, d)), out);
  }
  for (std::size_t k = 0; k < base; ++k) {
    if (out[k].space.dim() < 2) continue;
    for (auto& s : random_sub_bimodules(rng, out[k])) require_bimodule(s.bimodule, out);
  }
  return out;
}

std::vector<QuantumBiElement> generated_qbes(Rng& rng) {
  std::vector<QuantumBiElement> out;
  for (const auto& q : standard_qsystems()) out.push_back(qbe_from_qsystem(q));
  for (const auto& m : generated_qsys_bimodules(rng)) out.push_back(bimodule_to_qbe(m));
  const std::size_t base = out.size();
  for (std::size_t k = 0; k < base; k += 3) {
    const auto d = static_cast<Eigen::Index>(out[k].space.dim());
    if (d < 2) continue;
    QuantumBiElement e = conjugate_qbe(out[k], random_unitary(rng, d));
    const VerificationReport r = verify_qbe(e, Tolerance(1e-9));
    if (!r.passed()) throw std::logic_error("conjugated bi-element fails:\n" + r.summary());
    e.verified = true;
    out.push_back(std::move(e));
  }
  return out;
}

// ---------------------------------------------------------------------------

UnitaryBimodule character_bimodule(const FiniteQuantumGroup& czn, std::size_t n,
                                   const std::vector<std::size_t>& k_left,
                                   const std::vector<std::size_t>& k_right) {
  const std::size_t d = k_left.size();
  auto diagonal = [&](const std::vector<std::size_t>& ks) {
    Representation pi;
    for (std::size_t g = 0; g < n; ++g) {
      Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
      for (std::size_t j = 0; j < d; ++j) {
        m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) =
            root_of_unity(n, (ks[j] * g) % n);
      }
      pi.push_back(std::move(m));
    }
    return corep_from_group_representation(czn, pi, "V");
  };
  const Corepresentation l = diagonal(k_left);
  const Corepresentation r = diagonal(k_right);
  UnitaryBimodule v{czn, czn, Word(l.space), corep_to_left_module(l), corep_to_module(r), false};
  v.verified = verify_bimodule(v).passed();
  return v;
}

UnitaryBimodule conjugate_bimodule(const UnitaryBimodule& v, const Matrix& u) {
  const LinearMap uu(v.space, v.space, u);
  const LinearMap us = adjoint(uu);
  UnitaryBimodule w{v.left_group, v.right_group, v.space,
                    compose(tensor(identity(Word(v.left_group.algebra.space)), uu), compose(v.left_coaction, us)),
                    compose(tensor(uu, identity(Word(v.right_group.algebra.space))), compose(v.right_coaction, us)),
                    false};
  w.verified = verify_bimodule(w).passed();
  return w;
}

}  // namespace qsyslab::testing
