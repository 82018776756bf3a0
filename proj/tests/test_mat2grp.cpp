#include <doctest.h>

#include "crossmod/fixtures.hpp"
#include "generators.hpp"

using namespace crossmod;
using crossmod::testing::Gen;

namespace {

std::vector<MatCrossedModule> all_fixtures() {
  return {fixtures::mat_heis(), fixtures::mat_affine(), fixtures::mat_affine_identity(), fixtures::mat_linear_plane()};
}

Mat col(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return Mat::from_columns({v}, v.size());
}

Mat unit_mat(std::size_t n, std::size_t i, std::size_t j) {
  Mat m(n, n);
  m(i, j) = 1;
  return m;
}

// G0 = G1 = {1} acting on the line, no G0 algebra.
MatCrossedModule trivial_linear() { return MatCrossedModule::linear(1, {}, {Mat::identity(1)}, {col({0})}); }

// Flip the sign of the hat term: the R-translated derivative enters with + instead of -.
AlgElem wrong_sign(const MatCrossedModule& cm, const TwoGroupElem& g, const AlgElem& xu) {
  AlgElem right = ad_2group(cm, g, xu);
  AlgElem hat_term = ad_2group(cm, g, {xu.x, Mat(xu.u.rows(), xu.u.cols())});
  return {right.x, right.u - Scalar(2) * hat_term.u};
}

}  // namespace

TEST_CASE("dual matrices invert exactly") {
  Gen gen(3);
  for (int i = 0; i < 20; ++i) {
    Mat a = gen.mat(3, 3);
    if (!inverse(a)) continue;
    DualMat d{a, gen.mat(3, 3)};
    DualMat prod = d * d.inverse();
    CHECK(prod.a == Mat::identity(3));
    CHECK(prod.b.is_zero());
  }
  CHECK_THROWS_AS((DualMat{Mat(2, 2), Mat::identity(2)}.inverse()), PreconditionError);
}

TEST_CASE("matrix crossed module fixtures are valid") {
  for (const auto& cm : all_fixtures()) {
    Report r = validate_mat_cm(cm);
    CHECK_MESSAGE(r.ok(), r.first_failure());
    CHECK(validate_lie_cm(lie_cm(cm)).ok());
  }
  CHECK(validate_mat_cm(trivial_linear()).ok());

  MatCrossedModule bad = fixtures::mat_heis();
  bad.g1_basis = {unit_mat(3, 0, 1)};
  Report r = validate_mat_cm(bad);
  CHECK(r.failed("action_preserves_g1"));

  MatCrossedModule singular = fixtures::mat_affine();
  singular.g0_samples.push_back(Mat(2, 2));
  CHECK(validate_mat_cm(singular).failed("g0_invertible"));
}

TEST_CASE("hat vectors by dual-number evaluation") {
  MatCrossedModule lin = fixtures::mat_linear_plane();
  Mat rotation(2, 2, {Scalar(0), Scalar(-1), Scalar(1), Scalar(0)});
  CHECK(hat_vector(lin, rotation, col({1, 0})) == col({0, 1}));
  CHECK(hat_vector(lin, Mat(2, 2), col({2, -1})).is_zero());

  MatCrossedModule heis = fixtures::mat_heis();
  for (const Mat& g1 : heis.g1_samples)
    for (const Mat& x : heis.g0_basis) CHECK(hat_vector(heis, x, g1).is_zero());

  // closed forms: x g1 - g1 x under conjugation, x g1 on vectors
  for (const auto& cm : all_fixtures())
    for (const Mat& g1 : cm.g1_samples)
      for (const Mat& x : cm.g0_basis)
        CHECK(hat_vector(cm, x, g1) == (cm.mode == MatMode::conjugation ? x * g1 - g1 * x : x * g1));
}

TEST_CASE("adjoint action: formula, oracle and bracket") {
  for (const auto& cm : all_fixtures()) {
    const std::size_t n = cm.g0_basis.size() + cm.g1_basis.size();
    CHECK(ad_matrix(cm, identity_elem(cm)) == Mat::identity(n));
    Report r = ad_oracle_check(cm);
    CHECK_MESSAGE(r.ok(), r.first_failure());
    CHECK(r.checks() > 0);
  }

  // central G1: the hat term vanishes and Ad is conjugation in both slots
  MatCrossedModule heis = fixtures::mat_heis();
  for (const auto& g : samples(heis).elements) {
    Mat g0i = *inverse(g.g0);
    for (const Mat& x : heis.g0_basis)
      for (const Mat& u : heis.g1_basis) {
        AlgElem out = ad_2group(heis, g, {x, u});
        CHECK(out.x == g.g0 * x * g0i);
        CHECK(out.u == g.g0 * u * g0i);
      }
  }

  // affine group: x = E11 against a translation has a nonzero hat term
  MatCrossedModule aff = fixtures::mat_affine();
  TwoGroupElem g{aff.g0_samples[0], aff.g1_samples[0]};
  AlgElem out = ad_2group(aff, g, {unit_mat(2, 0, 0), Mat(2, 2)});
  CHECK_FALSE(out.u.is_zero());
  CHECK(out == ad_2group_oracle(aff, g, {unit_mat(2, 0, 0), Mat(2, 2)}));
}

TEST_CASE("adjoint action respects the groupoid structure") {
  for (const auto& cm : all_fixtures()) {
    Report r = ad_groupoid_check(cm);
    CHECK_MESSAGE(r.ok(), r.first_failure());
    Report a = ad_action_check(cm);
    CHECK_MESSAGE(a.ok(), a.first_failure());
  }
  Report bad = ad_groupoid_check(fixtures::mat_affine(), wrong_sign);
  CHECK_FALSE(bad.ok());
  CHECK((bad.failed("composable") || bad.failed("groupoid_hom")));
  Report bad2 = ad_groupoid_check(fixtures::mat_affine_identity(), wrong_sign);
  CHECK_FALSE(bad2.ok());
}

TEST_CASE("adjoint representation") {
  for (const auto& cm : all_fixtures()) {
    Report r = validate_adjoint_rep(cm);
    CHECK_MESSAGE(r.ok(), r.first_failure());
  }
  MatCrossedModule triv = trivial_linear();
  MatRep rep = adjoint_rep(triv);
  CHECK(validate_adjoint_rep(triv).ok());
  CHECK(rep.sigma0(Mat::identity(1)) == gl0_identity(rep.space));
  CHECK(rep.sigma1(col({0})) == gl1_identity(rep.space));

  MatCrossedModule heis = fixtures::mat_heis();
  MatRep hr = adjoint_rep(heis);
  for (const Mat& g1 : heis.g1_samples) CHECK(hr.sigma1(g1).gamma.is_zero());

  // affine: Ad1_{g1}(x) = -(x g1 - g1 x) g1^-1
  MatCrossedModule aff = fixtures::mat_affine();
  MatRep ar = adjoint_rep(aff);
  for (const Mat& g1 : aff.g1_samples) {
    Mat g1i = *inverse(g1);
    Mat expected(1, 2);
    for (std::size_t j = 0; j < 2; ++j) {
      Mat img = -((aff.g0_basis[j] * g1 - g1 * aff.g0_basis[j]) * g1i);
      expected(0, j) = img(0, 1);  // g1 = span{E12}
      CHECK(img(0, 0).is_zero());
    }
    CHECK(ar.sigma1(g1).gamma == expected);
  }
}

TEST_CASE("coadjoint 2-group action") {
  for (const auto& cm : all_fixtures()) {
    const std::size_t n = cm.g0_basis.size() + cm.g1_basis.size();
    CHECK(coad_matrix(cm, identity_elem(cm)) == Mat::identity(n));
    CHECK(rho_star(cm, g1_unit(cm)).is_zero());
    Report r = coad_check(cm);
    CHECK_MESSAGE(r.ok(), r.first_failure());
  }

  MatCrossedModule heis = fixtures::mat_heis();
  for (const Mat& g1 : heis.g1_samples) CHECK(rho_star(heis, g1).is_zero());

  // affine: rho*_{g1} transposes x |-> x - g1^-1 x g1, read in span{E12}
  MatCrossedModule aff = fixtures::mat_affine();
  for (const Mat& g1 : aff.g1_samples) {
    Mat g1i = *inverse(g1);
    Mat expected(2, 1);
    for (std::size_t j = 0; j < 2; ++j) expected(j, 0) = (aff.g0_basis[j] - g1i * aff.g0_basis[j] * g1)(0, 1);
    CHECK(rho_star(aff, g1) == expected);
  }

  TwoGroupElem g{aff.g0_samples[1], aff.g1_samples[2]};
  Vec xi_alpha{Scalar(1), Scalar(2), Scalar(-1)};
  CHECK(coad_2group(aff, g, xi_alpha) == coad_matrix(aff, g) * xi_alpha);
}

TEST_CASE("tangent and cotangent 2-groups") {
  for (const auto& cm : all_fixtures()) {
    TangentCotangent tc = tangent_cotangent(cm);
    CHECK_MESSAGE(tc.report.ok(), tc.report.first_failure());
    CHECK(tc.report.child("tangent")->checks() > 0);
    CHECK(tc.report.child("cotangent")->checks() > 0);
  }
  MatCrossedModule triv = trivial_linear();
  TangentCotangent tc = tangent_cotangent(triv);
  CHECK(tc.report.ok());
  TwoGroupElem e = identity_elem(triv);
  SemidirectElem a{e, {Scalar(2)}}, b{e, {Scalar(5)}};
  CHECK(sd_diamond(tc.tangent, a, b).w == Vec{Scalar(7)});
}

TEST_CASE("triangular cocycle lambda_mu") {
  MatCrossedModule lin = fixtures::mat_linear_plane();
  Multivector mu = Multivector::from_coeffs(2, 2, {Scalar(3)});
  CHECK(lambda_mu(lin, Mat::identity(2), mu).is_zero());
  CHECK(lambda_mu(lin, lin.g0_samples[2], Multivector(2, 2)).is_zero());
  // g0^-1 acts on Lambda^2 F^2 by det(g0)^-1
  for (const Mat& g0 : lin.g0_samples)
    CHECK(lambda_mu(lin, g0, mu) == (determinant(g0).inverse() - Scalar(1)) * mu);

  for (const auto& cm : all_fixtures()) {
    const std::size_t d1 = cm.g1_basis.size();
    if (d1 < 2) continue;
    Vec coeffs(d1 * (d1 - 1) / 2);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = Scalar(static_cast<long>(i) + 1);
    Report r = lambda_cocycle_check(cm, Multivector::from_coeffs(d1, 2, coeffs));
    CHECK_MESSAGE(r.ok(), r.first_failure());
  }
}

TEST_CASE("naive coadjoint action is an action exactly when the fixing conditions hold") {
  auto verdict = [](const Report& r, const std::string& key) {
    for (const auto& [k, v] : r.notes())
      if (k == key) return v;
    return std::string();
  };
  Report heis = naive_coad_iff_check(fixtures::mat_heis());
  CHECK(heis.ok());
  CHECK(verdict(heis, "conditions_hold") == "true");
  CHECK(verdict(heis, "naive_is_action") == "true");

  Report lin = naive_coad_iff_check(fixtures::mat_linear_plane());
  CHECK(lin.ok());
  CHECK(verdict(lin, "conditions_hold") == "true");

  for (const auto& cm : {fixtures::mat_affine(), fixtures::mat_affine_identity()}) {
    Report r = naive_coad_iff_check(cm);
    CHECK(r.ok());
    CHECK(verdict(r, "conditions_hold") == "false");
    CHECK(verdict(r, "naive_is_action") == "false");
  }
}
