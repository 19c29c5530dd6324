#pragma once

// Finite quantum groups given by structure constants, their unitary
// corepresentations, and unitary bimodules between them.

#include <string>
#include <vector>

#include "qsyslab/frobenius.hpp"
#include "qsyslab/groups.hpp"
#include "qsyslab/report.hpp"
#include "qsyslab/tensor_core.hpp"

namespace qsyslab {

/// A finite-dimensional unital *-algebra. The involution is antilinear:
/// star(x) = S conj(x), i.e. star(b_j) = sum_l S(l, j) b_l.
struct FDStarAlgebra {
  Space space;
  LinearMap mult;  // A (x) A -> A;  mult(l, j*n + k) = c[j][k][l]
  Vector unit;
  Matrix involution;

  std::size_t dim() const noexcept { return space.dim(); }
  Vector product(const Vector& x, const Vector& y) const;
  Vector star(const Vector& x) const;
};

using StructureConstants = std::vector<std::vector<std::vector<Complex>>>;

/// c[j][k][l] = coefficient of b_l in b_j b_k. Throws ShapeError.
FDStarAlgebra make_star_algebra(const Space& space, const StructureConstants& c,
                                const Vector& unit, const Matrix& involution);
StructureConstants structure_constants(const FDStarAlgebra& a);

/// Entries associativity, unit.left, unit.right, star.involutive,
/// star.antimultiplicative.
VerificationReport verify_star_algebra(const FDStarAlgebra& a, Tolerance tol = {});

struct FiniteQuantumGroup {
  FDStarAlgebra algebra;
  LinearMap comult;  // A -> A (x) A
  bool verified = false;
};

/// Entries coassociativity, unital, multiplicative, star, cancellation.left,
/// cancellation.right (the last two report the rank deficit).
VerificationReport verify_cqg(const FiniteQuantumGroup& g, Tolerance tol = {});

/// C(G): delta basis, pointwise product, Delta(d_g) = sum_{hk=g} d_h (x) d_k.
FiniteQuantumGroup function_algebra_of_group(const FiniteGroup& g, const std::string& name = "G");
FiniteQuantumGroup function_algebra_of_group(const FiniteGroup::Table& mult,
                                             const std::string& name = "G");
/// C[G]: group-element basis, star(g) = g^-1, Delta(g) = g (x) g.
FiniteQuantumGroup group_algebra_qg(const FiniteGroup& g, const std::string& name = "G");
FiniteQuantumGroup group_algebra_qg(const FiniteGroup::Table& mult, const std::string& name = "G");

bool same_group(const FiniteQuantumGroup& a, const FiniteQuantumGroup& b);

/// U = sum e_jk (x) u_jk with u_jk stored at entries[j*d + k].
struct Corepresentation {
  FiniteQuantumGroup group;
  Space space;
  std::vector<Vector> entries;

  const Vector& entry(std::size_t j, std::size_t k) const { return entries.at(j * space.dim() + k); }
};

/// Entries comultiplicative, unitary.left (U*U = 1), unitary.right (UU* = 1).
VerificationReport verify_corep(const Corepresentation& u, Tolerance tol = {});

/// u_jk = sum_g pi(g)_jk d_g over C(G).
Corepresentation corep_from_group_representation(const FiniteQuantumGroup& cg,
                                                 const Representation& pi,
                                                 const std::string& name = "H");

/// Right coaction V -> V (x) A,  xi_k -> sum_j xi_j (x) u_jk.
LinearMap corep_to_module(const Corepresentation& u, Tolerance tol = {});
Corepresentation module_to_corep(const LinearMap& alpha, const FiniteQuantumGroup& g,
                                 Tolerance tol = {});
/// Left coaction V -> A (x) V,  xi_k -> sum_j star(u_kj) (x) xi_j.
LinearMap corep_to_left_module(const Corepresentation& u, Tolerance tol = {});
Corepresentation left_module_to_corep(const LinearMap& alpha, const FiniteQuantumGroup& g,
                                      Tolerance tol = {});

/// Coaction and inner-product conditions of a one-sided module.
VerificationReport verify_right_module(const LinearMap& alpha, const FiniteQuantumGroup& g,
                                       Tolerance tol = {});
VerificationReport verify_left_module(const LinearMap& alpha, const FiniteQuantumGroup& g,
                                      Tolerance tol = {});

/// A unitary G-H bimodule. The space is a Word so that tensor products and the
/// unit (empty word) are bimodules too.
struct UnitaryBimodule {
  FiniteQuantumGroup left_group;
  FiniteQuantumGroup right_group;
  Word space;
  LinearMap left_coaction;   // V -> A_G (x) V
  LinearMap right_coaction;  // V -> V (x) A_H
  bool verified = false;
};

/// Entries i, ii, iii, iv.left, iv.right.
VerificationReport verify_bimodule(const UnitaryBimodule& v, Tolerance tol = {});

enum class Side { left, right };
LinearMap trivial_coaction(const Word& v, const FiniteQuantumGroup& g, Side side);

UnitaryBimodule trivial_bimodule(const Word& v, const FiniteQuantumGroup& g,
                                 const FiniteQuantumGroup& h);
/// C with trivial coactions on both sides.
UnitaryBimodule unit_bimodule(const FiniteQuantumGroup& g);

UnitaryBimodule direct_sum_bimodule(const UnitaryBimodule& v, const UnitaryBimodule& w,
                                    const std::string& name = {});
UnitaryBimodule tensor_bimodule(const UnitaryBimodule& v, const UnitaryBimodule& w);

/// Entries left, right.
VerificationReport verify_intertwiner(const LinearMap& t, const UnitaryBimodule& v,
                                      const UnitaryBimodule& w, Tolerance tol = {});
/// s o t for t: U -> V and s: V -> W. Throws NotAnIntertwiner when an input fails and
/// VerificationFailed when the result does.
LinearMap compose_intertwiners(const LinearMap& s, const LinearMap& t, const UnitaryBimodule& u,
                               const UnitaryBimodule& v, const UnitaryBimodule& w,
                               Tolerance tol = {});
/// t (x) s between tensor bimodules, for t: V1 -> V2 and s: W1 -> W2.
LinearMap tensor_intertwiners(const LinearMap& t, const UnitaryBimodule& v1,
                              const UnitaryBimodule& v2, const LinearMap& s,
                              const UnitaryBimodule& w1, const UnitaryBimodule& w2,
                              Tolerance tol = {});
std::vector<LinearMap> intertwiner_basis(const UnitaryBimodule& v, const UnitaryBimodule& w,
                                         Tolerance tol = {});

struct BimoduleSplit {
  UnitaryBimodule bimodule;
  LinearMap iso;  // W -> V
};
/// Throws NotAProjection or NotAnIntertwiner.
BimoduleSplit split_idempotent(const LinearMap& p, const UnitaryBimodule& v, Tolerance tol = {},
                               const std::string& name = {});

/// Q-system axioms plus equivariance of m (from B (x) B) and i (from the unit
/// bimodule). Entries are prefixed qsystem., mult., unit.
VerificationReport verify_qsystem_in_G(const QSystem& q, const UnitaryBimodule& b,
                                       Tolerance tol = {});

}  // namespace qsyslab
