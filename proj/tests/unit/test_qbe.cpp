#include "doctest.h"

#include "generators.hpp"

using namespace qsyslab;
using qsyslab::testing::Rng;

namespace {

QuantumBiElement scaled_q1(const QuantumBiElement& e, double s) {
  QuantumBiElement out = e;
  out.q1 = scale(e.q1, s);
  out.verified = false;
  return out;
}

}  // namespace

TEST_CASE("self-dual bi-elements") {
  const QSystem a = function_algebra(2);
  const QuantumBiElement e = qbe_from_qsystem(a);
  CHECK(e.verified);
  CHECK(max_abs_diff(e.q1.retyped(Word(a.space), Word{a.space, a.space}), adjoint(a.mult)) == 0.0);
  const VerificationReport r = verify_qbe(e, Tolerance(0.0));
  CHECK(r.passed());
  for (const char* id : {"1a", "1b", "1c", "2.left", "2.right", "3a", "3b"}) CHECK(r.contains(id));

  const QuantumBiElement one = qbe_from_qsystem(function_algebra(1));
  CHECK(one.q1.matrix() == Matrix::Ones(1, 1));
  CHECK(verify_qbe(qbe_from_qsystem(function_algebra(3)), Tolerance(0.0)).passed());
  CHECK(verify_qbe(qbe_from_qsystem(group_algebra(cyclic_group(2))), Tolerance(1e-12)).passed());
  CHECK(verify_qbe(qbe_from_qsystem(matrix_algebra(2)), Tolerance(1e-12)).passed());

  QSystem bad = a;
  bad.unit = scale(a.unit, 2.0);
  CHECK_THROWS_AS(qbe_from_qsystem(bad), VerificationFailed);
}

TEST_CASE("scaled Q1") {
  const QuantumBiElement e = scaled_q1(qbe_from_qsystem(function_algebra(2)), 2.0);
  const VerificationReport r = verify_qbe(e);
  CHECK(r.at("2.left").residual == doctest::Approx(1.0));
  CHECK_FALSE(r.at("1a").passed);
  // both sides of 3a are linear in Q1
  CHECK(r.at("3a").passed);
  CHECK(r.at("2.right").passed);
}

TEST_CASE("Frobenius identities, isometries and exchange") {
  for (const QSystem& a : {function_algebra(2), function_algebra(3), matrix_algebra(2)}) {
    const QuantumBiElement e = qbe_from_qsystem(a);
    const VerificationReport f = check_frobenius_identities(e, Tolerance(1e-12));
    CHECK(f.passed());
    CHECK(f.entries().size() == 4);
    CHECK(check_isometries(e, Tolerance(1e-12)).passed());
    CHECK(check_exchange_identity(e, Tolerance(1e-12)).passed);
  }
  CHECK(check_isometries(qbe_from_qsystem(function_algebra(3)), Tolerance(0.0)).passed());
  CHECK(check_exchange_identity(qbe_from_qsystem(function_algebra(2)), Tolerance(0.0)).residual == 0.0);

  // a coaction that is not coassociative breaks the lemma as well
  const QSystem a = function_algebra(2);
  QuantumBiElement broken = qbe_from_qsystem(a);
  Matrix q = broken.q1.matrix();
  q(1, 0) = 0.5;
  broken.q1 = LinearMap(broken.q1.domain(), broken.q1.codomain(), q);
  broken.verified = false;
  CHECK_FALSE(verify_qbe(broken).at("1a").passed);
  const VerificationReport lemma = check_frobenius_identities(broken);
  CHECK_FALSE(lemma.passed());
  CHECK(lemma.at("ii.left").passed);
  CHECK(lemma.at("ii.right").passed);

  QuantumBiElement mixed = qbe_from_qsystem(a);
  Matrix q2 = mixed.q2.matrix();
  q2.col(0).swap(q2.col(1));
  mixed.q2 = LinearMap(mixed.q2.domain(), mixed.q2.codomain(), q2);
  CHECK_FALSE(verify_qbe(mixed).at("1c").passed);
  CHECK_FALSE(check_exchange_identity(mixed).passed);
}

TEST_CASE("quantum functions") {
  const QSystem c = function_algebra(1);
  const Space h("H", 1);
  const QuantumFunction trivial{c, c, h, LinearMap(Word{h, c.space}, Word{c.space, h}, Matrix::Ones(1, 1)), true, false};
  const VerificationReport t = verify_quantum_function(trivial, Tolerance(0.0));
  CHECK(t.passed());
  CHECK(t.at("QF2").required);

  const QSystem a = function_algebra(2);
  const QuantumFunction p = qbe_to_quantum_function(qbe_from_qsystem(a));
  CHECK_FALSE(p.unital);
  CHECK(p.verified);
  Matrix expect = Matrix::Zero(4, 4);
  expect(0, 0) = expect(3, 3) = 1.0;
  CHECK(p.p.matrix() == expect);
  const VerificationReport r = verify_quantum_function(p, Tolerance(0.0));
  CHECK(r.at("QF1").passed);
  CHECK(r.at("QF3").passed);
  CHECK(r.at("QF2").residual == 1.0);
  CHECK_FALSE(r.at("QF2").required);
  CHECK(r.passed());

  QuantumFunction unital = p;
  unital.unital = true;
  CHECK_FALSE(verify_quantum_function(unital).passed());

  QuantumFunction doubled = p;
  doubled.p = scale(p.p, 2.0);
  CHECK_FALSE(verify_quantum_function(doubled).at("QF1").passed);

  const QuantumFunction pm = qbe_to_quantum_function(qbe_from_qsystem(matrix_algebra(2)));
  const VerificationReport rm = verify_quantum_function(pm, Tolerance(1e-12));
  CHECK(rm.at("QF1").passed);
  CHECK(rm.at("QF3").passed);

  CHECK_THROWS_AS(qbe_to_quantum_function(scaled_q1(qbe_from_qsystem(a), 2.0)), VerificationFailed);
}

TEST_CASE("quantum elements as bi-elements over C") {
  const QSystem a = function_algebra(3);
  const QSystem c = function_algebra(1, "C");
  const QSysBimodule col = testing::column_module(3);
  const QuantumBiElement e = bimodule_to_qbe(col);
  CHECK(verify_qbe(e).passed());

  // Q2 is the identity up to the trivial wire
  CHECK(e.q2.matrix().isIdentity());
  const VerificationReport full = verify_qbe(e);
  const VerificationReport elem = verify_quantum_element(e.left_q, e.space, e.q1);
  for (const auto& entry : elem.entries()) CHECK(full.at(entry.axiom).residual == entry.residual);
  for (const char* id : {"1b", "1c", "2.right", "3b"}) CHECK(full.at(id).residual == 0.0);

  // P = Q1 when B is trivial
  const QuantumFunction p = qbe_to_quantum_function(e);
  CHECK(p.p.matrix() == e.q1.matrix());

  // a failing Q1 fails both verifiers identically
  const QuantumBiElement bad = scaled_q1(e, 2.0);
  const VerificationReport badfull = verify_qbe(bad);
  const VerificationReport badelem = verify_quantum_element(bad.left_q, bad.space, bad.q1);
  for (const auto& entry : badelem.entries()) CHECK(badfull.at(entry.axiom).residual == entry.residual);
  CHECK_FALSE(badelem.passed());
  (void)a;
  (void)c;
}

TEST_CASE("bi-element intertwiners") {
  const QSystem a = function_algebra(2);
  const QuantumBiElement e = qbe_from_qsystem(a);
  CHECK(verify_qbe_intertwiner(identity(e.space), e, e).passed());
  CHECK(verify_qbe_intertwiner(zero_map(e.space, e.space), e, e).passed());
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 0.3;
  d(1, 1) = Complex(0, -2);
  CHECK(verify_qbe_intertwiner(LinearMap(e.space, e.space, d), e, e).passed());
  Matrix swap(2, 2);
  swap << 0, 1, 1, 0;
  const VerificationReport r = verify_qbe_intertwiner(LinearMap(e.space, e.space, swap), e, e);
  CHECK_FALSE(r.at("Q1").passed);

  const QuantumBiElement other = qbe_from_qsystem(function_algebra(3));
  CHECK_THROWS_AS(verify_qbe_intertwiner(zero_map(e.space, other.space), e, other), PairMismatch);
}

TEST_CASE("bimodules embed as bi-elements") {
  const QSystem a = function_algebra(2);
  const QuantumBiElement e = bimodule_to_qbe(self_bimodule(a));
  const QuantumBiElement s = qbe_from_qsystem(a);
  CHECK(max_abs_diff(e.q1, s.q1) == 0.0);
  CHECK(max_abs_diff(e.q2, s.q2) == 0.0);
  CHECK(verify_qbe(bimodule_to_qbe(self_bimodule(matrix_algebra(2))), Tolerance(1e-12)).passed());

  QSysBimodule broken = self_bimodule(a);
  broken.lambda = scale(broken.lambda, 2.0);
  CHECK_THROWS_AS(bimodule_to_qbe(broken), VerificationFailed);

  Rng rng(41);
  int maps = 0;
  for (const QSysBimodule& m : testing::generated_qsys_bimodules(rng)) {
    if (m.space.dim() > 4) continue;
    const QuantumBiElement img = bimodule_to_qbe(m);
    for (const LinearMap& f : qsys_intertwiner_basis(m, m)) {
      CHECK(verify_qbe_intertwiner(f, img, img).passed());
      ++maps;
    }
  }
  CHECK(maps > 50);
}

TEST_CASE("generated bi-elements satisfy the consequences") {
  Rng rng(42);
  const auto all = testing::generated_qbes(rng);
  CHECK(all.size() >= 100);
  for (const QuantumBiElement& e : all) {
    CHECK(check_isometries(e, Tolerance(1e-9)).passed());
    CHECK(check_frobenius_identities(e, Tolerance(1e-9)).passed());
    CHECK(check_exchange_identity(e, Tolerance(1e-9)).passed);
  }
}
