#include <doctest.h>

#include "crossmod/subspace.hpp"
#include "generators.hpp"

using namespace crossmod;

namespace {

Mat m_of(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vec> vs;
  std::size_t cols = 0;
  for (auto r : rows) {
    Vec v;
    for (long x : r) v.emplace_back(x);
    cols = v.size();
    vs.push_back(v);
  }
  return Mat::from_rows(vs, cols);
}

// cofactor expansion, independent of the elimination code
Scalar det_cofactor(const Mat& m) {
  if (m.rows() == 1) return m(0, 0);
  Scalar s;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Mat minor(m.rows() - 1, m.cols() - 1);
    for (std::size_t i = 1; i < m.rows(); ++i)
      for (std::size_t k = 0, kk = 0; k < m.cols(); ++k)
        if (k != j) minor(i - 1, kk++) = m(i, k);
    Scalar t = m(0, j) * det_cofactor(minor);
    s += (j % 2 == 0) ? t : -t;
  }
  return s;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact and canonical") {
  Scalar a(2, 4), b(-3, 6);
  CHECK(a.str() == "1/2");
  CHECK(b.str() == "-1/2");
  CHECK((a + b).is_zero());
  CHECK((Scalar(1, 3) * Scalar(3)).is_one());
}

TEST_CASE("scalar parsing") {
  CHECK(Scalar::parse("-6/4") == Scalar(-3, 2));
  CHECK(Scalar::parse("  7 ") == Scalar(7));
  CHECK(Scalar::parse("5 mod 3") == Scalar::residue(2, 3));
  CHECK_THROWS(Scalar::parse("1/0"));
  CHECK_THROWS(Scalar::parse("abc"));
  CHECK_THROWS(Scalar::parse("6/-4"));
  CHECK_THROWS(Scalar::parse("2 mod 4"));
}

TEST_CASE("prime field arithmetic") {
  Scalar two = Scalar::residue(2, 3);
  CHECK((two * two) == Scalar::residue(1, 3));
  CHECK(two.inverse() == two);
  CHECK((two + 1).is_zero());
  CHECK(-two == Scalar::residue(1, 3));
  CHECK((Scalar(1, 2) * Scalar::residue(1, 3)) == Scalar::residue(2, 3));
  CHECK_THROWS(Scalar::residue(1, 3) + Scalar::residue(1, 5));
  CHECK_THROWS(Scalar::residue(1, 4));
  CHECK_THROWS(Scalar::residue(0, 3).inverse());
  for (long v = 1; v < 7; ++v) CHECK((Scalar::residue(v, 7) * Scalar::residue(v, 7).inverse()).is_one());
  CHECK(all_vectors(Field::prime(3), 2).size() == 9);
}

TEST_CASE("rref examples") {
  auto id = rref(Mat::identity(3));
  CHECK(id.reduced == Mat::identity(3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  auto r = rref(m_of({{2, 4}}));
  CHECK(r.reduced == m_of({{1, 2}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});

  Mat dep = m_of({{1, 2, 3}, {0, 1, 4}, {1, 3, 7}});
  CHECK(det_cofactor(dep).is_zero());
  CHECK(!(dep(0, 0) * dep(1, 1) - dep(0, 1) * dep(1, 0)).is_zero());
  CHECK(rank(dep) == 2);
  CHECK(determinant(dep).is_zero());
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Mat(2, 3)) == Subspace::full(3));
  CHECK(kernel(Mat::identity(4)).dim() == 0);
  Mat a = m_of({{1, 2}});
  Subspace k = kernel(a);
  REQUIRE(k.dim() == 1);
  CHECK(is_zero(a * k.vector(0)));
  CHECK(k.contains(Vec{Scalar(-2), Scalar(1)}));
}

TEST_CASE("solve examples") {
  Vec b{Scalar(3), Scalar(-1, 2)};
  auto s = solve(Mat::identity(2), b);
  REQUIRE(s);
  CHECK(s->particular == b);

  Mat a = m_of({{1, 2}});
  auto t = solve(a, Vec{Scalar(3)});
  REQUIRE(t);
  CHECK(a * t->particular == Vec{Scalar(3)});
  CHECK(t->particular == Vec{Scalar(3), Scalar(0)});
  CHECK(t->homogeneous.contains(Vec{Scalar(-2), Scalar(1)}));

  CHECK(!solve(Mat(2, 2), Vec{Scalar(1), Scalar(0)}));
}

TEST_CASE("subspace calculus examples") {
  Subspace x = Subspace::span({Vec{Scalar(1), Scalar(0)}}, 2);
  Subspace y = Subspace::span({Vec{Scalar(0), Scalar(1)}}, 2);
  CHECK(intersect(x, y).dim() == 0);
  CHECK(intersect(x, x) == x);
  CHECK(sum(x, y) == Subspace::full(2));
  CHECK(annihilator(x) == y);
  CHECK_THROWS_AS(sum(x, Subspace(3)), DimensionError);
}

TEST_CASE("canonical subspace census") {
  std::vector<Scalar> c{Scalar(-1), Scalar(0), Scalar(1)};
  // dims 0..2 of F^2: 1 + (3 + 1) + 1
  CHECK(canonical_subspaces(2, c).size() == 6);
  // dims 0..3 of F^3: 1 + 13 + 13 + 1
  auto all3 = canonical_subspaces(3, c);
  CHECK(all3.size() == 28);
  for (std::size_t i = 0; i < all3.size(); ++i)
    for (std::size_t j = i + 1; j < all3.size(); ++j) CHECK(!(all3[i] == all3[j]));
}

TEST_CASE("property: rref idempotent, dimension formula, annihilator laws") {
  testing::Gen g(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
    Mat m = g.low_rank(static_cast<std::size_t>(g.integer(1, 5)), n, static_cast<std::size_t>(g.integer(0, 4)));
    auto once = rref(m);
    CHECK(rref(once.reduced).reduced == once.reduced);
    CHECK(std::is_sorted(once.pivots.begin(), once.pivots.end()));
    CHECK(kernel(m).dim() == n - once.pivots.size());
    for (const auto& v : kernel(m).vectors()) CHECK(is_zero(m * v));

    Subspace u = g.subspace(n), v = g.subspace(n);
    CHECK(u.dim() + v.dim() == sum(u, v).dim() + intersect(u, v).dim());
    CHECK(annihilator(annihilator(u)) == u);
    Subspace uv = sum(u, v);
    CHECK(annihilator(u).contains(annihilator(uv)));
    CHECK(intersect(u, v) == intersect(v, u));

    Vec b = g.vec(m.rows());
    auto s = solve(m, b);
    if (s) CHECK(m * s->particular == b);
    else CHECK(!Subspace::row_space(m.transpose()).contains(b));
  }
}

TEST_CASE("inverse and determinant agree") {
  testing::Gen g(11);
  for (int trial = 0; trial < 30; ++trial) {
    Mat m = g.mat(3, 3);
    CHECK(determinant(m) == det_cofactor(m));
    auto inv = inverse(m);
    CHECK(inv.has_value() == !determinant(m).is_zero());
    if (inv) CHECK(m * *inv == Mat::identity(3));
  }
}
