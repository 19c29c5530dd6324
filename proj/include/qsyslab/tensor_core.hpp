#pragma once

// Dense complex linear maps between tensor products of named finite-dimensional
// Hilbert spaces.
//
// Conventions:
//   * the flat basis index of e_i (x) e_j in C^m (x) C^n is i * n + j (leftmost
//     factor most significant), so tensor() is the Kronecker product;
//   * M(r, c) is the coefficient of codomain basis vector r in the image of domain
//     basis vector c, so compose() is the ordinary matrix product;
//   * the empty Word is the monoidal unit C, of dimension 1.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qsyslab/errors.hpp"

namespace qsyslab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// A named finite-dimensional Hilbert space with a fixed orthonormal basis.
class Space {
public:
  Space(std::string name, std::size_t dim);

  /// The zero space. Only produced by range_factorize of the zero projection.
  static Space zero(std::string name);

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return dim_; }

  friend bool operator==(const Space& a, const Space& b) {
    return a.dim_ == b.dim_ && a.name_ == b.name_;
  }

private:
  struct ZeroTag {};
  Space(ZeroTag, std::string name);

  std::string name_;
  std::size_t dim_;
};

/// An ordered tensor product of spaces; the wire type of a morphism.
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Space> factors) : factors_(factors) {}
  explicit Word(std::vector<Space> factors) : factors_(std::move(factors)) {}
  Word(const Space& s) : factors_{s} {}  // NOLINT: a space is a one-letter word

  const std::vector<Space>& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  bool empty() const noexcept { return factors_.empty(); }
  std::size_t dim() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) { return a.factors_ == b.factors_; }

private:
  std::vector<Space> factors_;
};

Word concat(const Word& a, const Word& b);
Word concat(std::initializer_list<Word> words);

struct Tolerance {
  double eps = 1e-9;

  Tolerance() = default;
  explicit Tolerance(double e);
  Tolerance scaled(double factor) const { return Tolerance(eps * factor); }
};

/// A linear map dom -> cod. Immutable once built.
class LinearMap {
public:
  LinearMap(Word domain, Word codomain, Matrix matrix);

  const Word& domain() const noexcept { return domain_; }
  const Word& codomain() const noexcept { return codomain_; }
  const Matrix& matrix() const noexcept { return matrix_; }

  /// Same matrix, different wire labels. Dimensions must agree.
  LinearMap retyped(Word domain, Word codomain) const;

private:
  Word domain_;
  Word codomain_;
  Matrix matrix_;
};

LinearMap identity(const Word& w);
LinearMap zero_map(const Word& domain, const Word& codomain);

/// g o f. Requires f.codomain() == g.domain().
LinearMap compose(const LinearMap& g, const LinearMap& f);
LinearMap tensor(const LinearMap& f, const LinearMap& g);
LinearMap adjoint(const LinearMap& f);
LinearMap scale(const LinearMap& f, Complex c);
LinearMap add(const LinearMap& f, const LinearMap& g);

/// (id_left (x) f (x) id_right) o x, computed without materializing the Kronecker
/// product. Requires x.codomain() == concat(left, f.domain(), right).
LinearMap whisker_apply(const Word& left, const LinearMap& f, const Word& right,
                        const LinearMap& x);

/// Max-abs entrywise difference. Throws WireMismatch unless both signatures agree.
double max_abs_diff(const LinearMap& f, const LinearMap& g);
double max_abs(const LinearMap& f);

bool approx_eq(const LinearMap& f, const LinearMap& g, Tolerance tol = {});

double isometry_residual(const LinearMap& f);    // |f* f - 1|
double coisometry_residual(const LinearMap& f);  // |f f* - 1|
/// max(|p p - p|, |p* - p|); throws WireMismatch for non-endomorphisms.
double projection_residual(const LinearMap& p);

bool is_isometry(const LinearMap& f, Tolerance tol = {});
bool is_coisometry(const LinearMap& f, Tolerance tol = {});
bool is_projection(const LinearMap& p, Tolerance tol = {});
bool is_unitary(const LinearMap& f, Tolerance tol = {});

/// Splits a projection p on V as iso o iso* with iso: W -> V an isometry, where W
/// is a fresh space of dimension rank(p). Throws NotAProjection.
LinearMap range_factorize(const LinearMap& p, Tolerance tol = {},
                          const std::string& range_name = {});

/// Orthonormal basis (Frobenius inner product) of the solution space of a
/// homogeneous linear system on maps dom -> cod. `constraint` must be complex-linear
/// and return the stacked residual vector of the equations for a candidate map.
template <typename Constraint>
std::vector<LinearMap> solution_basis(const Word& domain, const Word& codomain,
                                      Constraint&& constraint, Tolerance tol = {});

namespace detail {
std::vector<LinearMap> nullspace_basis(const Word& domain, const Word& codomain,
                                       const Matrix& system, Tolerance tol);
}

template <typename Constraint>
std::vector<LinearMap> solution_basis(const Word& domain, const Word& codomain,
                                      Constraint&& constraint, Tolerance tol) {
  const auto rows = static_cast<Eigen::Index>(codomain.dim());
  const auto cols = static_cast<Eigen::Index>(domain.dim());
  Matrix system;
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      Matrix unit = Matrix::Zero(rows, cols);
      unit(r, c) = 1.0;
      const Vector residual = constraint(LinearMap(domain, codomain, std::move(unit)));
      if (system.size() == 0) system = Matrix::Zero(residual.size(), rows * cols);
      system.col(c * rows + r) = residual;
    }
  }
  return detail::nullspace_basis(domain, codomain, system, tol);
}

}  // namespace qsyslab
