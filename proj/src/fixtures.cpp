#include "crossmod/fixtures.hpp"

namespace crossmod::fixtures {

LieAlg l_sol2() { return LieAlg::from_brackets(2, {{0, 1, {Scalar(0), Scalar(1)}}}); }

LieAlg sl2() {
  return LieAlg::from_brackets(3,
                               {{0, 1, {Scalar(0), Scalar(2), Scalar(0)}},
                                {0, 2, {Scalar(0), Scalar(0), Scalar(-2)}},
                                {1, 2, {Scalar(1), Scalar(0), Scalar(0)}}},
                               {"H", "E", "F"});
}

LieCrossedModule x_flow() {
  LieAlg g0(1, {"x"});
  LieAlg g1(2, {"u", "v"});
  std::vector<Scalar> act(1 * 2 * 2);
  act[(0 * 2 + 0) * 2 + 1] = 1;  // x |> u = v
  return LieCrossedModule(g0, g1, Mat(1, 2), act);
}

LieBialgebra b_sol2() { return {l_sol2(), LieAlg(2)}; }

LieBialgebra b_sl2() { return {sl2(), coboundary_dual(sl2(), Multivector::basis(3, {0, 1}))}; }

Coboundary x_flow_coboundary() { return coboundary_2bialgebra(x_flow(), Multivector::basis(2, {0, 1})); }

LieCrossedModule identity_cm(const LieAlg& g) {
  std::size_t n = g.dim();
  std::vector<Scalar> act(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) act[(a * n + b) * n + c] = g.c(a, b, c);
  return LieCrossedModule(g, g, Mat::identity(n), act);
}

FinGroup s3() { return FinGroup::from_permutations({{1, 2, 0}, {1, 0, 2}}, 3); }

std::vector<int> a3() {
  FinGroup g = s3();
  return g.generated({1});  // element 1 is the first generator, (0 1 2)
}

FinCrossedModule cm_z4() {
  FinCrossedModule cm{FinGroup::cyclic(2), FinGroup::cyclic(4), {0, 1, 0, 1}, {}};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 4; ++b) cm.act.push_back(b);
  return cm;
}

FinCrossedModule cm_s3() {
  FinGroup g = s3();
  FinCrossedModule cm{g, g, g.all(), {}};
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) cm.act.push_back(g.mul(g.mul(a, b), g.inv(a)));
  return cm;
}

TwoVectSpace v_line(Field field) { return TwoVectSpace::make(Mat::identity(1), field); }

Rep sign_rep(Field field) {
  auto scalar = [&](long k) { return Mat(1, 1, {Scalar::in(field, k)}); };
  Rep rep;
  for (long g0 = 0; g0 < 2; ++g0) {
    Mat s = scalar(g0 == 0 ? 1 : -1);
    rep.sigma0.push_back({s, s});
  }
  for (long g1 = 0; g1 < 4; ++g1) rep.sigma1.push_back({scalar(g1 % 2 == 0 ? 0 : -2)});
  return rep;
}

namespace {

Mat unit_mat(std::size_t n, std::size_t i, std::size_t j) {
  Mat m(n, n);
  m(i, j) = 1;
  return m;
}

Mat rows(std::size_t n, std::vector<Scalar> entries) {
  const std::size_t cols = entries.size() / n;
  return Mat(n, cols, std::move(entries));
}

}  // namespace

MatCrossedModule mat_heis() {
  auto e = [](std::size_t i, std::size_t j) { return unit_mat(3, i, j); };
  Mat id = Mat::identity(3);
  return MatCrossedModule::conjugation(
      3, {e(0, 1), e(0, 2), e(1, 2)}, {e(0, 2)},
      {id + e(0, 1), id + Scalar(2) * e(1, 2), id + e(0, 1) - e(0, 2) + Scalar(3) * e(1, 2),
       id + Scalar(1, 2) * e(0, 1) + e(1, 2)},
      {id + e(0, 2), id - Scalar(2) * e(0, 2), id + Scalar(1, 3) * e(0, 2)});
}

MatCrossedModule mat_affine() {
  auto aff = [](Scalar a, Scalar b) { return rows(2, {a, b, 0, 1}); };
  return MatCrossedModule::conjugation(2, {unit_mat(2, 0, 0), unit_mat(2, 0, 1)}, {unit_mat(2, 0, 1)},
                                       {aff(2, 1), aff(1, 3), aff(-1, Scalar(1, 2))},
                                       {aff(1, 1), aff(1, -2), aff(1, Scalar(1, 3))});
}

MatCrossedModule mat_affine_identity() {
  auto aff = [](Scalar a, Scalar b) { return rows(2, {a, b, 0, 1}); };
  std::vector<Mat> g{aff(2, 1), aff(1, 3), aff(-1, Scalar(1, 2))};
  std::vector<Mat> basis{unit_mat(2, 0, 0), unit_mat(2, 0, 1)};
  return MatCrossedModule::conjugation(2, basis, basis, g, {aff(3, -1), aff(1, 2)});
}

MatCrossedModule mat_linear_plane() {
  std::vector<Mat> gl2{unit_mat(2, 0, 0), unit_mat(2, 0, 1), unit_mat(2, 1, 0), unit_mat(2, 1, 1)};
  return MatCrossedModule::linear(2, gl2, {rows(2, {0, -1, 1, 0}), rows(2, {1, 1, 0, 1}), rows(2, {2, 0, 0, 1})},
                                  {rows(2, {1, 0}), rows(2, {0, 1}), rows(2, {2, -1})});
}

}  // namespace crossmod::fixtures
