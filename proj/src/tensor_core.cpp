#include "qsyslab/tensor_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qsyslab {

namespace {

void require_same_signature(const LinearMap& f, const LinearMap& g, const char* op) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain())) {
    throw WireMismatch(std::string(op) + ": signatures differ, " + f.domain().to_string() +
                       " -> " + f.codomain().to_string() + " vs " + g.domain().to_string() +
                       " -> " + g.codomain().to_string());
  }
}

}  // namespace

Space::Space(std::string name, std::size_t dim) : name_(std::move(name)), dim_(dim) {
  if (name_.empty()) throw Error("space name must be non-empty");
  if (dim_ == 0) throw Error("space '" + name_ + "' must have dimension >= 1");
}

Space::Space(ZeroTag, std::string name) : name_(std::move(name)), dim_(0) {
  if (name_.empty()) throw Error("space name must be non-empty");
}

Space Space::zero(std::string name) { return Space(ZeroTag{}, std::move(name)); }

std::size_t Word::dim() const noexcept {
  std::size_t d = 1;
  for (const auto& s : factors_) d *= s.dim();
  return d;
}

std::string Word::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) os << ',';
    os << factors_[k].name();
  }
  os << ']';
  return os.str();
}

Word concat(const Word& a, const Word& b) {
  std::vector<Space> f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return Word(std::move(f));
}

Word concat(std::initializer_list<Word> words) {
  std::vector<Space> f;
  for (const auto& w : words) f.insert(f.end(), w.factors().begin(), w.factors().end());
  return Word(std::move(f));
}

Tolerance::Tolerance(double e) : eps(e) {
  if (!(e >= 0.0)) throw Error("tolerance must be a nonnegative number");
}

LinearMap::LinearMap(Word domain, Word codomain, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  const auto rows = static_cast<Eigen::Index>(codomain_.dim());
  const auto cols = static_cast<Eigen::Index>(domain_.dim());
  if (matrix_.rows() != rows || matrix_.cols() != cols) {
    std::ostringstream os;
    os << "matrix shape " << matrix_.rows() << "x" << matrix_.cols() << " does not match "
       << domain_.to_string() << " -> " << codomain_.to_string() << " (" << rows << "x" << cols
       << ")";
    throw ShapeError(os.str());
  }
  if (!matrix_.allFinite()) throw ShapeError("matrix has non-finite entries");
}

LinearMap LinearMap::retyped(Word domain, Word codomain) const {
  return LinearMap(std::move(domain), std::move(codomain), matrix_);
}

LinearMap identity(const Word& w) {
  const auto d = static_cast<Eigen::Index>(w.dim());
  return LinearMap(w, w, Matrix::Identity(d, d));
}

LinearMap zero_map(const Word& domain, const Word& codomain) {
  return LinearMap(domain, codomain,
                   Matrix::Zero(static_cast<Eigen::Index>(codomain.dim()),
                                static_cast<Eigen::Index>(domain.dim())));
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (!(f.codomain() == g.domain())) {
    throw WireMismatch("compose: codomain " + f.codomain().to_string() +
                       " does not match domain " + g.domain().to_string());
  }
  return LinearMap(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

LinearMap tensor(const LinearMap& f, const LinearMap& g) {
  const Matrix& a = f.matrix();
  const Matrix& b = g.matrix();
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return LinearMap(concat(f.domain(), g.domain()), concat(f.codomain(), g.codomain()),
                   std::move(k));
}

LinearMap adjoint(const LinearMap& f) {
  return LinearMap(f.codomain(), f.domain(), f.matrix().adjoint());
}

LinearMap scale(const LinearMap& f, Complex c) {
  return LinearMap(f.domain(), f.codomain(), c * f.matrix());
}

LinearMap add(const LinearMap& f, const LinearMap& g) {
  require_same_signature(f, g, "add");
  return LinearMap(f.domain(), f.codomain(), f.matrix() + g.matrix());
}

LinearMap whisker_apply(const Word& left, const LinearMap& f, const Word& right,
                        const LinearMap& x) {
  const Word expected = concat({left, f.domain(), right});
  if (!(x.codomain() == expected)) {
    throw WireMismatch("whisker_apply: codomain " + x.codomain().to_string() +
                       " does not match " + expected.to_string());
  }
  const auto outer = static_cast<Eigen::Index>(left.dim());
  const auto inner = static_cast<Eigen::Index>(right.dim());
  const Eigen::Index n = f.matrix().cols();
  const Eigen::Index m = f.matrix().rows();
  if (outer == 1 && inner == 1) {
    return LinearMap(x.domain(), concat({left, f.codomain(), right}), f.matrix() * x.matrix());
  }

  // Segment of a column for fixed outer index, viewed column-major as inner x n,
  // holds entry (r, k) at k * inner + r, matching flat index (l * n + k) * inner + r.
  const Matrix ft = f.matrix().transpose();
  Matrix out(outer * m * inner, x.matrix().cols());
  for (Eigen::Index c = 0; c < x.matrix().cols(); ++c) {
    const Complex* src = x.matrix().col(c).data();
    Complex* dst = out.col(c).data();
    for (Eigen::Index l = 0; l < outer; ++l) {
      Eigen::Map<const Matrix> in_block(src + l * n * inner, inner, n);
      Eigen::Map<Matrix> out_block(dst + l * m * inner, inner, m);
      out_block.noalias() = in_block * ft;
    }
  }
  return LinearMap(x.domain(), concat({left, f.codomain(), right}), std::move(out));
}

double max_abs(const LinearMap& f) {
  if (f.matrix().size() == 0) return 0.0;
  return f.matrix().cwiseAbs().maxCoeff();
}

double max_abs_diff(const LinearMap& f, const LinearMap& g) {
  require_same_signature(f, g, "approx_eq");
  if (f.matrix().size() == 0) return 0.0;
  return (f.matrix() - g.matrix()).cwiseAbs().maxCoeff();
}

bool approx_eq(const LinearMap& f, const LinearMap& g, Tolerance tol) {
  return max_abs_diff(f, g) <= tol.eps;
}

double isometry_residual(const LinearMap& f) {
  return max_abs_diff(compose(adjoint(f), f), identity(f.domain()));
}

double coisometry_residual(const LinearMap& f) {
  return max_abs_diff(compose(f, adjoint(f)), identity(f.codomain()));
}

double projection_residual(const LinearMap& p) {
  if (!(p.domain() == p.codomain())) {
    throw WireMismatch("projection: " + p.domain().to_string() + " -> " +
                       p.codomain().to_string() + " is not an endomorphism");
  }
  return std::max(max_abs_diff(compose(p, p), p), max_abs_diff(adjoint(p), p));
}

bool is_isometry(const LinearMap& f, Tolerance tol) { return isometry_residual(f) <= tol.eps; }

bool is_coisometry(const LinearMap& f, Tolerance tol) {
  return coisometry_residual(f) <= tol.eps;
}

bool is_projection(const LinearMap& p, Tolerance tol) {
  return projection_residual(p) <= tol.eps;
}

bool is_unitary(const LinearMap& f, Tolerance tol) {
  return is_isometry(f, tol) && is_coisometry(f, tol);
}

LinearMap range_factorize(const LinearMap& p, Tolerance tol, const std::string& range_name) {
  const double residual = projection_residual(p);
  if (residual > tol.eps) {
    throw NotAProjection("range_factorize: not a projection, residual " +
                             std::to_string(residual) + " > " + std::to_string(tol.eps),
                         residual);
  }
  const Matrix hermitian = 0.5 * (p.matrix() + p.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k) {
    if (eig.eigenvalues()(k) > 0.5) keep.push_back(k);
  }
  const auto rank = static_cast<Eigen::Index>(keep.size());
  const std::string name = range_name.empty() ? "ran_" + p.domain().to_string() : range_name;
  const Space w = rank == 0 ? Space::zero(name) : Space(name, static_cast<std::size_t>(rank));

  Matrix cols(hermitian.rows(), rank);
  for (Eigen::Index k = 0; k < rank; ++k) cols.col(k) = eig.eigenvectors().col(keep[k]);
  if (rank > 0) {
    // Re-orthonormalize; eigenvectors of a nearly-degenerate cluster can drift.
    Eigen::HouseholderQR<Matrix> qr(cols);
    Matrix q = qr.householderQ() * Matrix::Identity(cols.rows(), rank);
    cols = q;
  }
  return LinearMap(Word(w), p.domain(), std::move(cols));
}

namespace detail {

std::vector<LinearMap> nullspace_basis(const Word& domain, const Word& codomain,
                                       const Matrix& system, Tolerance tol) {
  const auto rows = static_cast<Eigen::Index>(codomain.dim());
  const auto cols = static_cast<Eigen::Index>(domain.dim());
  std::vector<LinearMap> basis;
  if (rows * cols == 0) return basis;
  if (system.rows() == 0) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      for (Eigen::Index r = 0; r < rows; ++r) {
        Matrix unit = Matrix::Zero(rows, cols);
        unit(r, c) = 1.0;
        basis.emplace_back(domain, codomain, std::move(unit));
      }
    }
    return basis;
  }
  Eigen::JacobiSVD<Matrix> svd(system, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double largest = sv.size() > 0 ? sv(0) : 0.0;
  const double cutoff = std::max(tol.eps, 1e-12) * std::max(1.0, largest);
  const Matrix& v = svd.matrixV();
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    const double s = k < sv.size() ? sv(k) : 0.0;
    if (s > cutoff) continue;
    Matrix m = Eigen::Map<const Matrix>(v.col(k).data(), rows, cols);
    basis.emplace_back(domain, codomain, std::move(m));
  }
  return basis;
}

}  // namespace detail
}  // namespace qsyslab
