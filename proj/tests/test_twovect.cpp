#include <doctest.h>

#include "crossmod/fixtures.hpp"
#include "generators.hpp"

using namespace crossmod;
using crossmod::testing::Gen;

namespace {

Mat scalar_mat(long k, Field f = Field::rationals()) { return Mat(1, 1, {Scalar::in(f, k)}); }

const Field f2 = Field::prime(2);
const Field f3 = Field::prime(3);

// V1 = F3^2, V0 = F3, phi = [1 0].
TwoVectSpace space_21() { return TwoVectSpace::make(Mat(1, 2, {Scalar(1), Scalar(0)}), f3); }

// Every assignment sigma0(g0) = (a0, a1) with a0, a1 nonzero and sigma1(g1) arbitrary, over F3.
std::vector<Rep> candidate_reps_z4() {
  std::vector<Rep> out;
  for (long a0 = 1; a0 < 3; ++a0)
    for (long a1 = 1; a1 < 3; ++a1)
      for (long code = 0; code < 81; ++code) {
        Rep rep;
        rep.sigma0 = {{scalar_mat(1, f3), scalar_mat(1, f3)}, {scalar_mat(a0, f3), scalar_mat(a1, f3)}};
        long c = code;
        for (int g1 = 0; g1 < 4; ++g1, c /= 3) rep.sigma1.push_back({scalar_mat(c % 3, f3)});
        out.push_back(std::move(rep));
      }
  return out;
}

// Trivial G0 acting on G1 = Z3, Phi trivial.
FinCrossedModule cm_z3_over_point() {
  FinCrossedModule cm{FinGroup::cyclic(1), FinGroup::cyclic(3), {0, 0, 0}, {0, 1, 2}};
  return cm;
}

}  // namespace

TEST_CASE("GL(V) operations on V-line") {
  TwoVectSpace v = fixtures::v_line();
  GL1Elem one{scalar_mat(1)}, two{scalar_mat(2)};
  CHECK(gl1_mul(v, one, two).gamma == scalar_mat(5));
  GL0Elem d = gl_boundary(v, one);
  CHECK(d.a0 == scalar_mat(2));
  CHECK(d.a1 == scalar_mat(2));
  CHECK(gl1_inv(v, one).gamma == Mat(1, 1, {Scalar(-1, 2)}));
  CHECK_THROWS_AS(gl1_inv(v, GL1Elem{scalar_mat(-1)}), PreconditionError);
  CHECK(gl_act(GL0Elem{scalar_mat(3), scalar_mat(3)}, two).gamma == scalar_mat(2));
  CHECK(gl1_mul(v, gl1_identity(v), two) == two);
}

TEST_CASE("GL(V) crossed module, exhaustive over F3") {
  TwoVectSpace line = fixtures::v_line(f3);
  // 1 + gamma != 0 leaves gamma in {0, 1}; A0 = A1 nonzero.
  CHECK(all_gl1(line).size() == 2);
  CHECK(all_gl0(line).size() == 2);
  Report r = validate_gl_cm(line, all_gl0(line), all_gl1(line));
  CHECK(r.ok());

  TwoVectSpace v = space_21();
  // gamma = (a, b) with 1 + a != 0: 2 * 3. A1 = [[A0, 0], [c, d]] with d != 0: 2 * 3 * 2.
  CHECK(all_gl1(v).size() == 6);
  CHECK(all_gl0(v).size() == 12);
  Report r21 = validate_gl_cm(v, all_gl0(v), all_gl1(v));
  CHECK_MESSAGE(r21.ok(), r21.first_failure());
  CHECK(r21.checks() > 1000);

  // gamma = 0 only: every identity is trivially true
  CHECK(validate_gl_cm(v, all_gl0(v), {gl1_identity(v)}).ok());
}

TEST_CASE("GL(V) crossed module on random rational samples") {
  Gen gen(7);
  for (int trial = 0; trial < 5; ++trial) {
    Mat phi = gen.mat(2, 2);
    while (!inverse(phi)) phi = gen.mat(2, 2);
    TwoVectSpace v = TwoVectSpace::make(phi);
    std::vector<GL0Elem> a;
    std::vector<GL1Elem> g;
    while (a.size() < 4) {
      Mat a1 = gen.mat(2, 2);
      if (!inverse(a1)) continue;
      a.push_back({phi * a1 * *inverse(phi), a1});
    }
    while (g.size() < 4) {
      GL1Elem c{gen.mat(2, 2)};
      if (in_gl1(v, c)) g.push_back(c);
    }
    Report r = validate_gl_cm(v, a, g);
    CHECK_MESSAGE(r.ok(), r.first_failure());
    // phi_{g.h} = phi_g o phi_h with phi_g = Id + phi g
    for (const auto& x : g)
      for (const auto& y : g)
        CHECK(Mat::identity(2) + phi * gl1_mul(v, x, y).gamma ==
              (Mat::identity(2) + phi * x.gamma) * (Mat::identity(2) + phi * y.gamma));
    CHECK(validate_identity_rep(v, a, g).ok());
  }
}

TEST_CASE("GL(V) sample membership failures are reported") {
  TwoVectSpace v = space_21();
  GL0Elem bad{scalar_mat(1, f3), Mat::identity(2) + Mat::identity(2)};  // A0 phi != phi A1
  GL1Elem singular{Mat(2, 1, {Scalar::in(f3, 2), Scalar::in(f3, 0)})};    // 1 + 2 = 0
  Report r = validate_gl_cm(v, {bad}, {singular});
  CHECK(r.failed("gl0_member"));
  CHECK(r.failed("gl1_member"));
}

TEST_CASE("representations of CM-Z4 on V-line over F3") {
  TwoVectSpace v = fixtures::v_line(f3);
  FinCrossedModule cm = fixtures::cm_z4();
  CHECK(validate_rep(v, cm, trivial_rep(v, cm)).ok());
  CHECK(validate_rep(v, cm, fixtures::sign_rep(f3)).ok());
  CHECK(validate_rep(fixtures::v_line(f2), cm, fixtures::sign_rep(f2)).ok());

  Rep broken = fixtures::sign_rep(f3);
  broken.sigma1[1] = {scalar_mat(0, f3)};
  Report r = validate_rep(v, cm, broken);
  CHECK(r.failed("boundary"));
  CHECK(r.failed("sigma1_hom"));

  CHECK(validate_rep(v, fixtures::cm_s3(), trivial_rep(v, fixtures::cm_s3())).ok());
}

TEST_CASE("linear actions and representations determine each other") {
  TwoVectSpace v = fixtures::v_line(f3);
  Fin2Group g = build_2group(fixtures::cm_z4());

  LinearAction trivial = rep_to_action(v, g, trivial_rep(v, g.cm));
  for (const Mat& m : trivial.matrices) CHECK(m == Mat::identity(2));

  int valid = 0;
  for (const Rep& rep : candidate_reps_z4()) {
    bool rep_ok = validate_rep(v, g.cm, rep).ok();
    LinearAction a = rep_to_action(v, g, rep);
    CHECK(validate_linear_action(v, g, a).ok() == rep_ok);
    if (!rep_ok) continue;
    ++valid;
    CHECK(action_to_rep(v, g, a) == rep);
    CHECK(rep_to_action(v, g, action_to_rep(v, g, a)).matrices == a.matrices);
  }
  // sigma0(1) = a with a^2 = 1 forces sigma1 = (0, a-1, 0, a-1): trivial and sign.
  CHECK(valid == 2);
}

TEST_CASE("identity representation reproduces the natural action of GL(V)") {
  for (const TwoVectSpace& v : {fixtures::v_line(f3), space_21()}) {
    GLFinite gl = gl_finite(v);
    CHECK(validate_fin_cm(gl.cm).ok());
    CHECK(validate_rep(v, gl.cm, gl.identity).ok());
    Fin2Group g = build_2group(gl.cm);
    LinearAction a = rep_to_action(v, g, gl.identity);
    for (int e = 0; e < static_cast<int>(g.order()); ++e)
      CHECK(a.matrices[static_cast<std::size_t>(e)] ==
            gl_natural_action(v, gl.gl0[static_cast<std::size_t>(g.part0(e))],
                              gl.gl1[static_cast<std::size_t>(g.part1(e))]));
    CHECK(validate_linear_action(v, g, a).ok());
  }
}

TEST_CASE("dual representation and dual 2-group action") {
  TwoVectSpace v = fixtures::v_line(f3);
  Fin2Group g = build_2group(fixtures::cm_z4());
  TwoVectSpace dv = dual_space(v);

  Rep triv = trivial_rep(v, g.cm);
  CHECK(dual_rep(v, g.cm, triv) == trivial_rep(dv, g.cm));

  for (const Rep& rep : {triv, fixtures::sign_rep(f3)}) {
    Rep d = dual_rep(v, g.cm, rep);
    CHECK(validate_rep(dv, g.cm, d).ok());
    CHECK(dual_rep(dv, g.cm, d) == rep);
    CHECK(validate_linear_action(dv, g, dual_2gp_action(v, g, rep)).ok());
  }

  for (const TwoVectSpace& w : {fixtures::v_line(f3), space_21()}) {
    GLFinite gl = gl_finite(w);
    Fin2Group gg = build_2group(gl.cm);
    Rep d = dual_rep(w, gl.cm, gl.identity);
    Report r = validate_rep(dual_space(w), gl.cm, d);
    CHECK_MESSAGE(r.ok(), r.first_failure());
    CHECK(dual_rep(dual_space(w), gl.cm, d) == gl.identity);
    CHECK(validate_linear_action(dual_space(w), gg, dual_2gp_action(w, gg, gl.identity)).ok());
  }
}

TEST_CASE("naive dual is a 2-group action exactly when the fixing conditions hold") {
  TwoVectSpace v = fixtures::v_line(f3);
  Fin2Group g = build_2group(fixtures::cm_z4());
  TwoVectSpace dv = dual_space(v);

  LinearAction sign = rep_to_action(v, g, fixtures::sign_rep(f3));
  CHECK_FALSE(naive_dual_conditions(v, g, sign).ok());
  Report bad = validate_linear_action(dv, g, naive_dual_action(v, g, sign));
  CHECK_FALSE(bad.ok());

  LinearAction triv = rep_to_action(v, g, trivial_rep(v, g.cm));
  CHECK(naive_dual_conditions(v, g, triv).ok());
  CHECK(validate_linear_action(dv, g, naive_dual_action(v, g, triv)).ok());

  // phi = 0 and sigma1(k) = k c: conditions hold with sigma1 nonzero
  TwoVectSpace flat = TwoVectSpace::make(Mat(1, 1), f3);
  Fin2Group h = build_2group(cm_z3_over_point());
  for (long c = 0; c < 3; ++c) {
    Rep rep{{{scalar_mat(1, f3), scalar_mat(1, f3)}}, {}};
    for (long k = 0; k < 3; ++k) rep.sigma1.push_back({scalar_mat(k * c, f3)});
    REQUIRE(validate_rep(flat, h.cm, rep).ok());
    LinearAction a = rep_to_action(flat, h, rep);
    CHECK(naive_dual_conditions(flat, h, a).ok());
    CHECK(validate_linear_action(dual_space(flat), h, naive_dual_action(flat, h, a)).ok());
    CHECK(validate_linear_action(dual_space(flat), h, dual_2gp_action(flat, h, rep)).ok());
  }

  for (const Rep& rep : candidate_reps_z4()) {
    if (!validate_rep(v, g.cm, rep).ok()) continue;
    LinearAction a = rep_to_action(v, g, rep);
    CHECK(validate_linear_action(dv, g, naive_dual_action(v, g, a)).ok() == naive_dual_conditions(v, g, a).ok());
  }
}

TEST_CASE("semidirect product with a 2-vector space") {
  Fin2Group g = build_2group(fixtures::cm_z4());

  for (Field f : {f2, f3}) {
    TwoVectSpace v = fixtures::v_line(f);
    FinCrossedModule sd = semidirect_2vect(v, g, fixtures::sign_rep(f));
    CHECK(sd.g1.order() == 4 * f.modulus);
    CHECK(sd.g0.order() == 2 * f.modulus);
    Report r = validate_fin_cm(sd);
    CHECK_MESSAGE(r.ok(), r.first_failure());
    Report r2 = check_2group(build_2group(sd));
    CHECK_MESSAGE(r2.ok(), r2.first_failure());
  }

  // trivial rep: direct product, codes are residues of the V-line coordinate
  TwoVectSpace v = fixtures::v_line(f3);
  FinCrossedModule sd = semidirect_2vect(v, g, trivial_rep(v, g.cm));
  for (int a = 0; a < 12; ++a) {
    CHECK(sd.phi_of(a) == g.cm.phi_of(a / 3) * 3 + a % 3);
    for (int b = 0; b < 12; ++b) CHECK(sd.g1.mul(a, b) == g.cm.g1.mul(a / 3, b / 3) * 3 + (a + b) % 3);
  }
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 12; ++b) CHECK(sd.act_on(a, b) == g.cm.act_on(a / 3, b / 3) * 3 + b % 3);

  // V = 0 recovers the crossed module
  TwoVectSpace zero = TwoVectSpace::make(Mat(0, 0), f2);
  FinCrossedModule same = semidirect_2vect(zero, g, trivial_rep(zero, g.cm));
  CHECK(same.g0.table() == g.cm.g0.table());
  CHECK(same.g1.table() == g.cm.g1.table());
  CHECK(same.phi == g.cm.phi);
  CHECK(same.act == g.cm.act);

  CHECK_THROWS_AS(semidirect_2vect(fixtures::v_line(), g, fixtures::sign_rep(Field::rationals())), PreconditionError);
}
