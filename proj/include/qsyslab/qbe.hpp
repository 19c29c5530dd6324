#pragma once

// Quantum bi-elements of a pair of Q-systems and quantum functions between them.

#include <string>
#include <vector>

#include "qsyslab/diagram.hpp"
#include "qsyslab/frobenius.hpp"
#include "qsyslab/report.hpp"

namespace qsyslab {

/// (H, Q1, Q2) over the pair (A, B).
struct QuantumBiElement {
  QSystem left_q;   // A
  QSystem right_q;  // B
  Space space;      // H
  LinearMap q1;     // H -> A (x) H
  LinearMap q2;     // H -> H (x) B
  bool verified = false;
};

/// P: H (x) A -> B (x) H for A = source, B = target.
struct QuantumFunction {
  QSystem source_q;
  QSystem target_q;
  Space space;
  LinearMap p;
  bool unital = false;
  bool verified = false;
};

/// Binds A, B, H, mA, iA, mB, iB, Q1, Q2.
diagram::Environment qbe_environment(const QuantumBiElement& e);

/// The reading of conditions (1)-(3) used by verify_qbe, ids 1a 1b 1c 2.left
/// 2.right 3a 3b.
const std::vector<AxiomEquation>& qbe_axioms();

VerificationReport verify_qbe(const QuantumBiElement& e, Tolerance tol = {});

/// The conditions involving only Q1 (1a, 2.left, 3a), i.e. a quantum element of A.
VerificationReport verify_quantum_element(const QSystem& a, const Space& h, const LinearMap& q1,
                                          Tolerance tol = {});

/// Entries i.left, i.right, ii.left, ii.right; each compares against Q Q*.
VerificationReport check_frobenius_identities(const QuantumBiElement& e, Tolerance tol = {});

/// Entries Q1, Q2 (|Q* Q - 1|).
VerificationReport check_isometries(const QuantumBiElement& e, Tolerance tol = {});

/// Q1 Q2* = (1 (x) Q2*)(Q1 (x) 1).
diagram::EquationReport check_exchange_identity(const QuantumBiElement& e, Tolerance tol = {});

/// Binds A (source), B (target), H, mA, iA, mB, iB, P.
diagram::Environment quantum_function_environment(const QuantumFunction& f);
const std::vector<AxiomEquation>& quantum_function_axioms();

/// Entries QF1, QF2, QF3. QF2 counts towards passed() only for unital functions.
VerificationReport verify_quantum_function(const QuantumFunction& f, Tolerance tol = {});

/// P = Q1 Q2*: H (x) B -> A (x) H, non-unital, from B to A. Throws
/// VerificationFailed if the input is not a bi-element or QF1/QF3 fail.
QuantumFunction qbe_to_quantum_function(const QuantumBiElement& e, Tolerance tol = {});

/// Entries Q1, Q2. Throws PairMismatch.
VerificationReport verify_qbe_intertwiner(const LinearMap& f, const QuantumBiElement& e,
                                          const QuantumBiElement& g, Tolerance tol = {});

/// (X, lambda*, rho*). Throws VerificationFailed.
QuantumBiElement bimodule_to_qbe(const QSysBimodule& m, Tolerance tol = {});

/// (A, m*, m*) over (A, A). Throws VerificationFailed.
QuantumBiElement qbe_from_qsystem(const QSystem& a, Tolerance tol = {});

}  // namespace qsyslab
