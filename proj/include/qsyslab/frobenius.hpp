#pragma once

// Q-systems (unitary special Frobenius algebras) in Hilb and their bimodules.

#include <string>
#include <vector>

#include "qsyslab/diagram.hpp"
#include "qsyslab/groups.hpp"
#include "qsyslab/report.hpp"
#include "qsyslab/tensor_core.hpp"

namespace qsyslab {

struct QSystem {
  Space space;
  LinearMap mult;  // A (x) A -> A
  LinearMap unit;  // C -> A
  /// Set only by a verifier run (the factory functions below run it).
  bool verified = false;
};

/// An axiom as a diagram equation. The generator and space names are those bound by
/// the matching *_environment() function.
struct AxiomEquation {
  std::string id;
  std::string lhs;
  std::string rhs;
};

/// Binds A, m, i.
diagram::Environment qsystem_environment(const QSystem& q);
const std::vector<AxiomEquation>& qsystem_axioms();

/// Entries Q1, Q2.left, Q2.right, Q3.left, Q3.right, Q4.
VerificationReport verify_qsystem(const QSystem& q, Tolerance tol = {});

struct Duality {
  LinearMap ev;    // A (x) A -> C,  i* m
  LinearMap coev;  // C -> A (x) A,  m* i
  VerificationReport zigzag;
};
Duality ev_coev(const QSystem& q, Tolerance tol = {});

/// ev ev* = 1. Requires ev to land in C.
bool is_unitarily_separable(const LinearMap& ev, Tolerance tol = {});

/// Functions on n points: m(e_j (x) e_k) = delta_jk e_j, i(1) = sum_j e_j.
QSystem function_algebra(std::size_t n, const std::string& name = "A");
/// n x n matrices on the orthonormal basis f_jk (index j*n + k),
/// m(f_jk (x) f_lm) = delta_kl f_jm / sqrt(n), i(1) = sqrt(n) sum_j f_jj.
QSystem matrix_algebra(std::size_t n, const std::string& name = "A");
/// C[G] on the orthonormal basis of group elements, m(g (x) h) = gh / sqrt|G|,
/// i(1) = sqrt|G| e.
QSystem group_algebra(const FiniteGroup& g, const std::string& name = "A");
QSystem group_algebra(const FiniteGroup::Table& mult, std::size_t unit,
                      const std::vector<std::size_t>& inverse, const std::string& name = "A");

/// A Q-P bimodule (X, lambda, rho).
struct QSysBimodule {
  QSystem left;
  QSystem right;
  Space space;
  LinearMap lambda;  // Q (x) X -> X
  LinearMap rho;     // X (x) P -> X
  bool verified = false;
};

/// Binds Q, P, X, mQ, iQ, mP, iP, l, r.
diagram::Environment qsys_bimodule_environment(const QSysBimodule& m);
const std::vector<AxiomEquation>& qsys_bimodule_axioms();

/// Entries B1.left, B1.right, B1.middle, B2.left, B2.right, B3.left.1, B3.left.2,
/// B3.right.1, B3.right.2, B4.left, B4.right.
VerificationReport verify_qsys_bimodule(const QSysBimodule& m, Tolerance tol = {});

/// (A, m, m).
QSysBimodule self_bimodule(const QSystem& q);

/// Entries lambda, rho. Throws PairMismatch unless M and N sit over the same pair.
VerificationReport verify_qsys_intertwiner(const LinearMap& f, const QSysBimodule& m,
                                           const QSysBimodule& n, Tolerance tol = {});

/// Orthonormal basis of the bimodule intertwiners M -> N.
std::vector<LinearMap> qsys_intertwiner_basis(const QSysBimodule& m, const QSysBimodule& n,
                                              Tolerance tol = {});

/// Sub-bimodule cut out by a projection intertwiner p; returns it with the
/// isometric inclusion.
struct QSysSplit {
  QSysBimodule bimodule;
  LinearMap iso;
};
QSysSplit split_qsys_bimodule(const LinearMap& p, const QSysBimodule& m, Tolerance tol = {},
                              const std::string& name = {});

struct SplitObstruction {
  std::size_t dim = 0;
  bool is_perfect_square = false;
};
/// A split Q-system X (x) Xbar has square dimension; a non-square certifies that
/// no splitting exists.
SplitObstruction split_dimension_obstruction(const QSystem& q);

bool same_qsystem(const QSystem& a, const QSystem& b);

}  // namespace qsyslab
