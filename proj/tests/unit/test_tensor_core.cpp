#include "doctest.h"

#include "generators.hpp"

using namespace qsyslab;
using qsyslab::testing::Rng;

namespace {

const Space C2("V", 2);
const Space C3("W", 3);

LinearMap map_of(const Word& dom, const Word& cod, std::initializer_list<std::initializer_list<Complex>> rows) {
  Matrix m(static_cast<Eigen::Index>(cod.dim()), static_cast<Eigen::Index>(dom.dim()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (Complex x : row) m(r, c++) = x;
    ++r;
  }
  return LinearMap(dom, cod, m);
}

LinearMap random_map(Rng& rng, const Word& dom, const Word& cod) {
  return LinearMap(dom, cod,
                   testing::random_matrix(rng, static_cast<Eigen::Index>(cod.dim()),
                                          static_cast<Eigen::Index>(dom.dim())));
}

}  // namespace

TEST_CASE("words and spaces") {
  CHECK(Word().dim() == 1);
  CHECK(Word{C2, C3}.dim() == 6);
  CHECK(concat(Word{C2}, Word{C3, C2}) == Word{C2, C3, C2});
  CHECK_FALSE(Word{C2, C3} == Word{C3, C2});
  CHECK_THROWS(Space("", 2));
  CHECK_THROWS(Space("V", 0));
  CHECK(Space::zero("Z").dim() == 0);
}

TEST_CASE("linear map shape is checked") {
  CHECK_THROWS_AS(LinearMap(C2, C3, Matrix::Zero(2, 2)), ShapeError);
  Matrix nan = Matrix::Zero(2, 2);
  nan(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(LinearMap(C2, C2, nan), ShapeError);
  CHECK_THROWS(identity(C2).retyped(C3, C3));
}

TEST_CASE("compose") {
  const LinearMap swap = map_of(C2, C2, {{0, 1}, {1, 0}});
  CHECK(max_abs_diff(compose(swap, identity(C2)), swap) == 0.0);

  const LinearMap f = map_of(Word(), C2, {{1}, {0}});
  const LinearMap g = map_of(C2, Word(), {{0, 1}});
  CHECK(compose(g, f).matrix()(0, 0) == Complex(0));

  Rng rng(1);
  const LinearMap a = random_map(rng, C2, C3);
  const LinearMap b = random_map(rng, C3, C2);
  const LinearMap ba = compose(b, a);
  CHECK(ba.domain() == Word(C2));
  CHECK(ba.codomain() == Word(C2));
  double diff = 0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      Complex s = 0;
      for (int k = 0; k < 3; ++k) s += b.matrix()(r, k) * a.matrix()(k, c);
      diff = std::max(diff, std::abs(s - ba.matrix()(r, c)));
    }
  CHECK(diff <= 1e-14);

  CHECK_THROWS_AS(compose(a, a), WireMismatch);
  // same dimension, different name
  CHECK_THROWS_AS(compose(identity(Space("U", 2)), identity(C2)), WireMismatch);
}

TEST_CASE("tensor") {
  CHECK(max_abs_diff(tensor(identity(C2), identity(C3)), identity(Word{C2, C3})) == 0.0);

  Rng rng(2);
  const LinearMap g = random_map(rng, C2, C3);
  const LinearMap two = map_of(Word(), Word(), {{2}});
  CHECK(max_abs_diff(tensor(two, g), scale(g, 2.0)) <= 1e-15);
  CHECK(max_abs_diff(tensor(g, two), scale(g, 2.0)) <= 1e-15);

  for (int t = 0; t < 20; ++t) {
    const LinearMap f = random_map(rng, C2, C2), h = random_map(rng, C2, C2);
    const LinearMap k = random_map(rng, C2, C2), l = random_map(rng, C2, C2);
    CHECK(max_abs_diff(compose(tensor(f, l), tensor(h, k)), tensor(compose(f, h), compose(l, k))) <= 1e-12);
  }
}

TEST_CASE("index convention: e_i (x) e_j sits at i*n + j") {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Matrix ei = Matrix::Zero(2, 1), ej = Matrix::Zero(2, 1);
      ei(i, 0) = 1.0;
      ej(j, 0) = 1.0;
      const LinearMap v = tensor(LinearMap(Word(), C2, ei), LinearMap(Word(), C2, ej));
      for (int k = 0; k < 4; ++k) CHECK(v.matrix()(k, 0) == Complex(k == i * 2 + j ? 1.0 : 0.0));
    }
}

TEST_CASE("adjoint") {
  const LinearMap f = map_of(Word(), Word(), {{Complex(0, 1)}});
  CHECK(adjoint(f).matrix()(0, 0) == Complex(0, -1));
  CHECK(max_abs_diff(adjoint(identity(Word{C2, C3})), identity(Word{C2, C3})) == 0.0);

  Rng rng(3);
  const LinearMap a = random_map(rng, C2, C3), b = random_map(rng, C3, C2);
  CHECK(max_abs_diff(adjoint(adjoint(a)), a) == 0.0);
  CHECK(adjoint(a).domain() == Word(C3));
  CHECK(max_abs_diff(adjoint(compose(b, a)), compose(adjoint(a), adjoint(b))) <= 1e-15);
}

TEST_CASE("identity") {
  CHECK(identity(Word()).matrix().rows() == 1);
  CHECK(identity(Word()).matrix()(0, 0) == Complex(1));
  CHECK(identity(Word{C2, C3}).matrix().isIdentity());
}

TEST_CASE("approx_eq threshold") {
  Rng rng(4);
  const LinearMap f = random_map(rng, C2, C2);
  CHECK(approx_eq(f, f, Tolerance(0.0)));
  Matrix e11 = Matrix::Zero(2, 2);
  e11(0, 0) = 1.0;
  CHECK_FALSE(approx_eq(f, LinearMap(C2, C2, f.matrix() + 1e-8 * e11), Tolerance(1e-9)));
  CHECK(approx_eq(f, LinearMap(C2, C2, f.matrix() + 1e-12 * e11), Tolerance(1e-9)));
  CHECK_THROWS_AS(approx_eq(f, identity(C3)), WireMismatch);
  CHECK_THROWS(Tolerance(-1.0));
}

TEST_CASE("isometry and projection predicates") {
  const LinearMap col = map_of(Word(), C2, {{1}, {0}});
  CHECK(is_isometry(col));
  CHECK_FALSE(is_coisometry(col));
  const LinearMap d = map_of(C2, C2, {{1, 0}, {0, 0}});
  CHECK(is_projection(d));
  CHECK_FALSE(is_isometry(d));
  const LinearMap half = map_of(C2, C2, {{0.5, 0.5}, {0.5, 0.5}});
  CHECK(is_projection(half));
  CHECK(is_unitary(map_of(C2, C2, {{0, 1}, {1, 0}})));
  CHECK_FALSE(is_projection(map_of(C2, C2, {{0, 1}, {0, 0}})));
  CHECK_THROWS_AS(is_projection(col), WireMismatch);
}

TEST_CASE("range_factorize") {
  const Tolerance tol;
  auto round_trip = [&](const LinearMap& p, std::size_t rank) {
    const LinearMap iso = range_factorize(p, tol);
    CHECK(iso.domain().dim() == rank);
    CHECK(iso.codomain() == p.domain());
    CHECK(approx_eq(compose(iso, adjoint(iso)), p, tol.scaled(10)));
    CHECK(approx_eq(compose(adjoint(iso), iso), identity(iso.domain()), tol.scaled(10)));
    return iso;
  };
  const LinearMap e = round_trip(map_of(C2, C2, {{1, 0}, {0, 0}}), 1);
  CHECK(std::abs(std::abs(e.matrix()(0, 0)) - 1.0) <= 1e-12);

  const LinearMap h = round_trip(map_of(C2, C2, {{0.5, 0.5}, {0.5, 0.5}}), 1);
  CHECK(std::abs(std::abs(h.matrix()(0, 0)) - std::sqrt(0.5)) <= 1e-12);
  CHECK(std::abs(h.matrix()(0, 0) - h.matrix()(1, 0)) <= 1e-12);

  const LinearMap z = round_trip(zero_map(C2, C2), 0);
  CHECK(z.matrix().cols() == 0);
  CHECK(z.matrix().rows() == 2);

  CHECK_THROWS_AS(range_factorize(map_of(C2, C2, {{1, 1}, {0, 0}})), NotAProjection);

  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const auto u = testing::random_unitary(rng, 4);
    const std::size_t k = static_cast<std::size_t>(t % 5);
    const Matrix v = u.leftCols(static_cast<Eigen::Index>(k));
    round_trip(LinearMap(Word{C2, C2}, Word{C2, C2}, v * v.adjoint()), k);
  }
}

TEST_CASE("whisker_apply matches the Kronecker product") {
  Rng rng(6);
  const Space a("A", 2), b("B", 3);
  const LinearMap f = random_map(rng, b, Word{a, a});
  const LinearMap x = random_map(rng, Word{a}, Word{a, b, b});
  const LinearMap direct = compose(tensor(tensor(identity(a), f), identity(b)), x);
  CHECK(max_abs_diff(whisker_apply(Word(a), f, Word(b), x), direct) <= 1e-14);
}

TEST_CASE("solution basis of a commutant") {
  // maps commuting with diag(1,1,2): block diagonal, dimension 4 + 1
  const Space v("V", 3);
  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 1, 1, 2;
  const auto basis = solution_basis(Word(v), Word(v), [&](const LinearMap& t) -> Vector {
    const Matrix r = d * t.matrix() - t.matrix() * d;
    return Eigen::Map<const Vector>(r.data(), r.size());
  });
  CHECK(basis.size() == 5);
}
