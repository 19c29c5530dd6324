#include "qsyslab/groups.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qsyslab {

namespace {

std::string pair_text(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

FiniteGroup::FiniteGroup(Table mult, std::size_t unit, std::vector<std::size_t> inverse)
    : mult_(std::move(mult)), unit_(unit), inverse_(std::move(inverse)) {
  const std::size_t n = mult_.size();
  if (n == 0) throw NotAGroup("closure", "empty table");
  for (std::size_t g = 0; g < n; ++g) {
    if (mult_[g].size() != n) throw NotAGroup("closure", "row " + std::to_string(g) + " has wrong length");
    for (std::size_t h = 0; h < n; ++h) {
      if (mult_[g][h] >= n) throw NotAGroup("closure", "product " + pair_text(g, h) + " out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]]) {
          throw NotAGroup("associativity", "elements " + std::to_string(a) + ", " +
                                               std::to_string(b) + ", " + std::to_string(c));
        }
      }
    }
  }
  if (unit_ >= n) throw NotAGroup("unit", "unit index out of range");
  for (std::size_t g = 0; g < n; ++g) {
    if (mult_[unit_][g] != g || mult_[g][unit_] != g) {
      throw NotAGroup("unit", "element " + std::to_string(unit_) + " is not neutral for " + std::to_string(g));
    }
  }
  if (inverse_.size() != n) throw NotAGroup("inverse", "inverse table has wrong length");
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t h = inverse_[g];
    if (h >= n || mult_[g][h] != unit_ || mult_[h][g] != unit_) {
      throw NotAGroup("inverse", "element " + std::to_string(g));
    }
  }
}

FiniteGroup FiniteGroup::from_table(Table mult) {
  const std::size_t n = mult.size();
  std::size_t unit = n;
  for (std::size_t e = 0; e < n && unit == n; ++e) {
    bool neutral = mult[e].size() == n;
    for (std::size_t g = 0; neutral && g < n; ++g) {
      neutral = mult[e][g] == g && mult[g].size() == n && mult[g][e] == g;
    }
    if (neutral) unit = e;
  }
  if (unit == n) throw NotAGroup("unit", "no neutral element");
  std::vector<std::size_t> inverse(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (mult[g][h] == unit) {
        inverse[g] = h;
        break;
      }
    }
    if (inverse[g] == n) throw NotAGroup("inverse", "element " + std::to_string(g));
  }
  return FiniteGroup(std::move(mult), unit, std::move(inverse));
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw NotAGroup("closure", "order 0");
  FiniteGroup::Table t(n, std::vector<std::size_t>(n));
  std::vector<std::size_t> inv(n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) t[g][h] = (g + h) % n;
    inv[g] = (n - g) % n;
  }
  return FiniteGroup(std::move(t), 0, std::move(inv));
}

namespace {

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

FiniteGroup symmetric_group(std::size_t n) {
  const auto perms = all_permutations(n);
  const std::size_t k = perms.size();
  auto index_of = [&](const std::vector<std::size_t>& p) {
    return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  FiniteGroup::Table t(k, std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index_of(c);
    }
  }
  return FiniteGroup::from_table(std::move(t));
}

std::vector<std::size_t> permutation_of(std::size_t n, std::size_t g) { return all_permutations(n).at(g); }

double representation_residual(const FiniteGroup& g, const Representation& pi) {
  if (pi.size() != g.order()) throw ShapeError("representation has wrong number of matrices");
  double r = 0.0;
  for (std::size_t a = 0; a < g.order(); ++a) {
    const Matrix& pa = pi[a];
    r = std::max(r, (pa.adjoint() * pa - Matrix::Identity(pa.rows(), pa.cols())).cwiseAbs().maxCoeff());
    for (std::size_t b = 0; b < g.order(); ++b) {
      r = std::max(r, (pa * pi[b] - pi[g.mul(a, b)]).cwiseAbs().maxCoeff());
    }
  }
  return r;
}

Representation regular_representation(const FiniteGroup& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Representation out;
  for (std::size_t a = 0; a < g.order(); ++a) {
    Matrix m = Matrix::Zero(n, n);
    for (std::size_t b = 0; b < g.order(); ++b) m(static_cast<Eigen::Index>(g.mul(a, b)), static_cast<Eigen::Index>(b)) = 1.0;
    out.push_back(std::move(m));
  }
  return out;
}

// exp(2 pi i r / n), exact on the real and imaginary axes
Complex root_of_unity(std::size_t n, std::size_t r) {
  if (r == 0) return 1.0;
  if (2 * r == n) return -1.0;
  if (4 * r == n) return Complex(0, 1);
  if (4 * r == 3 * n) return Complex(0, -1);
  return std::polar(1.0, 2.0 * M_PI * static_cast<double>(r) / static_cast<double>(n));
}

Representation cyclic_character(std::size_t n, std::size_t k) {
  Representation out;
  for (std::size_t g = 0; g < n; ++g) {
    Matrix m(1, 1);
    m(0, 0) = root_of_unity(n, (k * g) % n);
    out.push_back(std::move(m));
  }
  return out;
}

Representation permutation_representation(std::size_t n) {
  const auto perms = all_permutations(n);
  Representation out;
  for (const auto& p : perms) {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t x = 0; x < n; ++x) m(static_cast<Eigen::Index>(p[x]), static_cast<Eigen::Index>(x)) = 1.0;
    out.push_back(std::move(m));
  }
  return out;
}

Representation sign_representation(std::size_t n) {
  Representation out;
  for (const auto& p : all_permutations(n)) {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) inversions += p[a] > p[b];
    }
    Matrix m(1, 1);
    m(0, 0) = inversions % 2 ? -1.0 : 1.0;
    out.push_back(std::move(m));
  }
  return out;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.size() != b.size()) throw ShapeError("direct_sum: representations of different groups");
  Representation out;
  for (std::size_t g = 0; g < a.size(); ++g) {
    const Eigen::Index p = a[g].rows(), q = b[g].rows();
    Matrix m = Matrix::Zero(p + q, p + q);
    m.topLeftCorner(p, p) = a[g];
    m.bottomRightCorner(q, q) = b[g];
    out.push_back(std::move(m));
  }
  return out;
}

Representation conjugate(const Representation& pi, const Matrix& u) {
  Representation out;
  for (const auto& m : pi) out.push_back(u * m * u.adjoint());
  return out;
}

}  // namespace qsyslab
