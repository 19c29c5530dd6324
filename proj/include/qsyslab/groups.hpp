#pragma once

// Finite groups given by Cayley tables, and a few of their unitary representations.

#include <cstddef>
#include <vector>

#include "qsyslab/tensor_core.hpp"

namespace qsyslab {

class FiniteGroup {
public:
  using Table = std::vector<std::vector<std::size_t>>;

  /// Validates closure, associativity, the unit and the inverses; throws NotAGroup
  /// naming the first violated law.
  FiniteGroup(Table mult, std::size_t unit, std::vector<std::size_t> inverse);

  /// Derives unit and inverses from the table itself.
  static FiniteGroup from_table(Table mult);

  std::size_t order() const noexcept { return mult_.size(); }
  std::size_t mul(std::size_t g, std::size_t h) const { return mult_[g][h]; }
  std::size_t unit() const noexcept { return unit_; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  const Table& table() const noexcept { return mult_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.mult_ == b.mult_;
  }

private:
  Table mult_;
  std::size_t unit_;
  std::vector<std::size_t> inverse_;
};

FiniteGroup cyclic_group(std::size_t n);

/// Permutations of {0..n-1} in lexicographic order; (s t)(x) = s(t(x)).
FiniteGroup symmetric_group(std::size_t n);

/// The permutation of {0..n-1} for element g of symmetric_group(n).
std::vector<std::size_t> permutation_of(std::size_t n, std::size_t g);

/// A unitary representation: one matrix per group element, pi(gh) = pi(g) pi(h).
using Representation = std::vector<Matrix>;

/// Largest |pi(g)pi(h) - pi(gh)| and |pi(g)* pi(g) - 1|.
double representation_residual(const FiniteGroup& g, const Representation& pi);

Representation regular_representation(const FiniteGroup& g);
/// g -> exp(2 pi i k g / n) on C^1 for the cyclic group of order n.
Representation cyclic_character(std::size_t n, std::size_t k);
Complex root_of_unity(std::size_t n, std::size_t r);
/// Natural action of symmetric_group(n) on C^n.
Representation permutation_representation(std::size_t n);
Representation sign_representation(std::size_t n);
Representation direct_sum(const Representation& a, const Representation& b);
/// U pi(g) U* for every g.
Representation conjugate(const Representation& pi, const Matrix& u);

}  // namespace qsyslab
