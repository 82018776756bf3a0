#include <doctest.h>

#include <algorithm>
#include <set>

#include "crossmod/fixtures.hpp"

using namespace crossmod;

namespace {

std::vector<std::vector<int>> all_subgroups(const FinGroup& g) {
  std::set<std::vector<int>> seen;
  for (int a = 0; a < static_cast<int>(g.order()); ++a)
    for (int b = a; b < static_cast<int>(g.order()); ++b) seen.insert(g.generated({a, b}));
  return {seen.begin(), seen.end()};
}

std::vector<TwoSubgroup> all_2subgroups(const FinCrossedModule& cm) {
  std::vector<TwoSubgroup> out;
  for (const auto& h0 : all_subgroups(cm.g0))
    for (const auto& h1 : all_subgroups(cm.g1))
      if (check_2subgroup(cm, {h0, h1}).ok()) out.push_back({h0, h1});
  return out;
}

// CM-Z4 with the nontrivial element of Z2 acting by inversion.
FinCrossedModule z4_inverting() {
  FinCrossedModule cm = fixtures::cm_z4();
  for (int b = 0; b < 4; ++b) cm.act[static_cast<std::size_t>(4 + b)] = (4 - b) % 4;
  return cm;
}

Fin2Group z4_2group() { return build_2group(fixtures::cm_z4()); }

// sigma: Z2 swaps points 0 and 1 of {0,1,2}
std::vector<Perm> swap01() { return {{0, 1, 2}, {1, 0, 2}}; }

}  // namespace

TEST_CASE("finite groups from tables and permutations") {
  FinGroup z4 = FinGroup::cyclic(4);
  CHECK(z4.order() == 4);
  CHECK(z4.mul(3, 2) == 1);
  CHECK(z4.inv(1) == 3);

  FinGroup s3 = fixtures::s3();
  CHECK(s3.order() == 6);
  CHECK(s3.label(0) == "()");
  auto a3 = fixtures::a3();
  CHECK(a3.size() == 3);
  CHECK(s3.is_normal(a3));
  std::vector<int> transposition = s3.generated({2});
  CHECK(transposition.size() == 2);
  CHECK(s3.is_subgroup(transposition));
  CHECK_FALSE(s3.is_normal(transposition));
  // products agree with composing the permutations directly
  const auto& perms = s3.permutations();
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int i = 0; i < 3; ++i)
        CHECK(perms[static_cast<std::size_t>(s3.mul(a, b))][static_cast<std::size_t>(i)] ==
              perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)])]);

  // x*y = x - y mod 3 is not associative
  std::vector<std::vector<int>> bad(3, std::vector<int>(3));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) bad[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = ((x - y) % 3 + 3) % 3;
  Report r = check_group_table(bad);
  CHECK(r.failed("associativity"));
  CHECK_THROWS_AS(FinGroup::from_table(bad), PreconditionError);
}

TEST_CASE("finite crossed module validation") {
  CHECK(validate_fin_cm(fixtures::cm_z4()).ok());
  CHECK(validate_fin_cm(fixtures::cm_s3()).ok());

  // inversion is an automorphism and Phi lands in an abelian group, so only Peiffer can break
  Report r = validate_fin_cm(z4_inverting());
  CHECK_FALSE(r.ok());
  CHECK(r.failed("peiffer"));
  CHECK_FALSE(r.failed("equivariance"));
  CHECK_FALSE(r.failed("automorphism"));
  REQUIRE_FALSE(r.failures().empty());
  CHECK(r.failures().front().witness.front() == std::pair<std::string, std::string>{"g1", "1"});

  FinCrossedModule bad_phi = fixtures::cm_z4();
  bad_phi.phi[2] = 1;
  CHECK(validate_fin_cm(bad_phi).failed("phi_hom"));

  // every single-cell mutation of the S3 action is caught
  FinCrossedModule s3 = fixtures::cm_s3();
  int caught = 0, total = 0;
  for (std::size_t cell = 0; cell < s3.act.size(); ++cell)
    for (int v = 0; v < 6; ++v) {
      if (v == s3.act[cell]) continue;
      FinCrossedModule m = s3;
      m.act[cell] = v;
      ++total;
      caught += validate_fin_cm(m).ok() ? 0 : 1;
    }
  CHECK(caught == total);
}

TEST_CASE("2-group of a crossed module") {
  Fin2Group g = z4_2group();
  CHECK(g.order() == 8);
  int e11 = g.element(1, 1);
  CHECK(g.groupoid.source[static_cast<std::size_t>(e11)] == 1);
  CHECK(g.groupoid.target[static_cast<std::size_t>(e11)] == 0);  // 1 + Phi(1) = 0 in Z2
  int e = g.element(0, 0);
  CHECK(g.group.id() == e);
  CHECK(g.groupoid.unit[0] == e);
  CHECK(check_2group(g).ok());

  Fin2Group s = build_2group(fixtures::cm_s3());
  CHECK(check_2group(s).ok());
  // for the identity crossed module, (g0, g1) -> (g0, g0 g1) identifies the group with S3 x S3
  const FinGroup& s3 = s.cm.g0;
  for (int a = 0; a < 36; ++a)
    for (int b = 0; b < 36; ++b) {
      int c = s.group.mul(a, b);
      int a0 = s.part0(a), a1 = s.part1(a), b0 = s.part0(b), b1 = s.part1(b);
      CHECK(s.part0(c) == s3.mul(a0, b0));
      CHECK(s3.mul(s.part0(c), s.part1(c)) == s3.mul(s3.mul(a0, a1), s3.mul(b0, b1)));
    }

  // ignoring the action gives a group, but the target map stops being a homomorphism
  Fin2Group broken = s;
  std::vector<std::vector<int>> direct(36, std::vector<int>(36));
  for (int a = 0; a < 36; ++a)
    for (int b = 0; b < 36; ++b)
      direct[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          s.element(s3.mul(s.part0(a), s.part0(b)), s3.mul(s.part1(a), s.part1(b)));
  broken.group = FinGroup::from_table(direct);
  Report r = check_2group(broken);
  CHECK(r.failed("target_hom"));
  CHECK(r.failed("interchange"));

  CHECK_THROWS_AS(build_2group(z4_inverting()), PreconditionError);

  FinCrossedModule big{FinGroup::cyclic(13), FinGroup::cyclic(12), std::vector<int>(12, 0), {}};
  for (int a = 0; a < 13; ++a)
    for (int b = 0; b < 12; ++b) big.act.push_back(b);
  CHECK_THROWS_AS(check_2group(build_2group(big)), GuardError);
}

TEST_CASE("groupoid constructors and validation") {
  CHECK(validate_groupoid(pair_groupoid(3)).ok());
  CHECK(validate_groupoid(discrete_groupoid(4)).ok());
  CHECK(validate_groupoid(group_as_groupoid(fixtures::s3())).ok());
  CHECK(validate_groupoid(z4_2group().groupoid).ok());

  FinGroupoid p = pair_groupoid(2);
  p.inverse[1] = 1;
  CHECK(validate_groupoid(p).failed("inverses"));
  FinGroupoid q = pair_groupoid(2);
  q.mult[1 * 4 + 2] = 1;  // (0,1)*(1,0) should be (0,0)
  CHECK_FALSE(validate_groupoid(q).ok());
}

TEST_CASE("2-group actions") {
  Fin2Group g = z4_2group();
  CHECK(validate_2group_action(g, left_translation(g)).ok());
  CHECK(validate_2group_action(g, trivial_action(g, pair_groupoid(2))).ok());
  CHECK(validate_2group_action(g, pair_groupoid_action(g, swap01())).ok());

  Fin2GroupAction broken = left_translation(g);
  std::swap(broken.table[8 * 3 + 1], broken.table[8 * 3 + 2]);
  CHECK_FALSE(validate_2group_action(g, broken).ok());

  // sigma(g0 Phi(g1)) replaced by sigma(g0) on the second point is not a groupoid map
  Fin2GroupAction wrong = pair_groupoid_action(g, swap01());
  for (int e = 0; e < 8; ++e)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Perm s = swap01()[static_cast<std::size_t>(g.part0(e))];
        wrong.table[static_cast<std::size_t>(e * 9 + i * 3 + j)] = s[static_cast<std::size_t>(i)] * 3 + s[static_cast<std::size_t>(j)];
      }
  CHECK(validate_2group_action(g, wrong).failed("target"));
}

TEST_CASE("homogeneous quotients") {
  Fin2Group g = z4_2group();
  const FinCrossedModule& cm = g.cm;

  HomogeneousSpace all = quotient_homogeneous(g, {cm.g0.all(), cm.g1.all()});
  CHECK(all.report.ok());
  CHECK(all.action.space.arrows() == 1);
  CHECK(all.action.space.objects == 1);

  HomogeneousSpace none = quotient_homogeneous(g, {{0}, {0}});
  CHECK(none.report.ok());
  CHECK(check_groupoid_iso(g.groupoid, none.action.space, none.arrow_of).ok());

  HomogeneousSpace q = quotient_homogeneous(g, {{0}, {0, 2}});
  CHECK(q.report.ok());
  CHECK(q.action.space.arrows() == 4);
  CHECK(q.action.space.objects == 2);

  CHECK_THROWS_AS(quotient_homogeneous(g, {{0}, {0, 1, 2, 3}}), PreconditionError);

  for (const FinCrossedModule& c : {fixtures::cm_z4(), fixtures::cm_s3()}) {
    Fin2Group gg = build_2group(c);
    auto subs = all_2subgroups(c);
    CHECK(subs.size() > 2);
    for (const auto& h : subs) {
      HomogeneousSpace hs = quotient_homogeneous(gg, h);
      CHECK(hs.report.ok());
      CHECK(hs.action.space.arrows() * h.h0.size() * h.h1.size() == gg.order());
    }
  }
}

TEST_CASE("associated bundle and theta") {
  Fin2Group g = z4_2group();
  AssociatedBundle b = associated_bundle(g, {{0}, {0, 2}});
  CHECK(b.report.ok());
  CHECK(b.theta.size() == 4);
  std::vector<int> sorted = b.theta;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 2, 3});

  // trivial H1: the fiber is all of G1
  Fin2Group s = build_2group(fixtures::cm_s3());
  AssociatedBundle t = associated_bundle(s, {fixtures::a3(), {0}});
  CHECK(t.report.ok());
  CHECK(t.fiber.size() == 6);
  CHECK(std::set<int>(t.fiber.begin(), t.fiber.end()).size() == 6);
  CHECK(t.space.action.space.arrows() == 36 / 3);

  for (const FinCrossedModule& c : {fixtures::cm_z4(), fixtures::cm_s3()}) {
    Fin2Group gg = build_2group(c);
    for (const auto& h : all_2subgroups(c)) CHECK(associated_bundle(gg, h).report.ok());
  }
}

TEST_CASE("groupoid quotient by a wide normal subgroupoid") {
  Fin2Group g = z4_2group();
  GammaQuotient q = gamma_quotient(g, {{0}, {0, 2}});
  CHECK(q.report.ok());
  CHECK(q.quotient.arrows() == 4);

  GammaQuotient units = gamma_quotient(g, {{0}, {0}});
  CHECK(units.report.ok());
  CHECK(units.normal.size() == units.gamma.objects);
  CHECK(units.quotient.arrows() == units.gamma.arrows());

  GammaQuotient one = gamma_quotient(g, {g.cm.g0.all(), g.cm.g1.all()});
  CHECK(one.report.ok());
  CHECK(one.quotient.arrows() == 1);
  CHECK(one.quotient.objects == 1);

  for (const FinCrossedModule& c : {fixtures::cm_z4(), fixtures::cm_s3()}) {
    Fin2Group gg = build_2group(c);
    for (const auto& h : all_2subgroups(c)) CHECK(gamma_quotient(gg, h).report.ok());
  }
}

TEST_CASE("normal quotients") {
  Fin2Group g = z4_2group();
  NormalQuotient all = normal_quotient(g, {g.cm.g0.all(), g.cm.g1.all()});
  CHECK(all.report.ok());
  CHECK(all.cm.g0.order() == 1);
  CHECK(all.cm.g1.order() == 1);

  NormalQuotient z = normal_quotient(g, {{0}, {0, 2}});
  CHECK(z.report.ok());
  CHECK(z.cm.g0.order() == 2);
  CHECK(z.cm.g1.order() == 2);
  CHECK(z.cm.phi_of(1) == 1);  // Z2 -> Z2 is the identity

  Fin2Group s = build_2group(fixtures::cm_s3());
  auto a3 = fixtures::a3();
  CHECK(check_normal_2subgroup(s.cm, {a3, a3}).ok());
  NormalQuotient sq = normal_quotient(s, {a3, a3});
  CHECK(sq.report.ok());
  CHECK(sq.cm.g0.order() == 2);

  // commutators of A3 with S3 are not trivial
  Report r = check_normal_2subgroup(s.cm, {a3, {0}});
  CHECK(r.failed("h0_acts_trivially_mod_h1"));
  CHECK_FALSE(r.failed("h0_normal"));
  CHECK_THROWS_WITH_AS(normal_quotient(s, {a3, {0}}), doctest::Contains("h0_acts_trivially_mod_h1"), PreconditionError);
  std::vector<int> t = s.cm.g0.generated({2});
  CHECK(check_normal_2subgroup(s.cm, {t, {0}}).failed("h0_normal"));

  // abelian with trivial action: every 2-subgroup is normal
  for (const auto& h : all_2subgroups(g.cm)) CHECK(normal_quotient(g, h).report.ok());
}

TEST_CASE("bisection crossed modules") {
  FinGroup s3 = fixtures::s3();
  BisectionModule one = bisection_cm(group_as_groupoid(s3));
  CHECK(validate_fin_cm(one.cm).ok());
  CHECK(one.cm.g1.order() == 6);
  CHECK(one.cm.g0.order() == 6);  // Aut(S3) = Inn(S3)
  CHECK(std::set<int>(one.cm.phi.begin(), one.cm.phi.end()).size() == 6);

  BisectionModule z4 = bisection_cm(group_as_groupoid(FinGroup::cyclic(4)));
  CHECK(validate_fin_cm(z4.cm).ok());
  CHECK(z4.cm.g1.order() == 4);
  CHECK(z4.cm.g0.order() == 2);
  for (int v : z4.cm.phi) CHECK(v == z4.cm.g0.id());  // conjugation is trivial

  BisectionModule pair2 = bisection_cm(pair_groupoid(2));
  CHECK(validate_fin_cm(pair2.cm).ok());
  CHECK(pair2.cm.g1.order() == 2);
  CHECK(pair2.cm.g0.order() == 2);
  CHECK(pair2.cm.phi_of(pair2.cm.g1.id()) == pair2.cm.g0.id());
  CHECK(pair2.cm.phi_of(1 - pair2.cm.g1.id()) != pair2.cm.g0.id());

  BisectionModule pair3 = bisection_cm(pair_groupoid(3));
  CHECK(validate_fin_cm(pair3.cm).ok());
  CHECK(pair3.cm.g1.order() == 6);
  CHECK(std::set<int>(pair3.cm.phi.begin(), pair3.cm.phi.end()).size() == 6);

  BisectionModule disc = bisection_cm(discrete_groupoid(3));
  CHECK(validate_fin_cm(disc.cm).ok());
  CHECK(disc.cm.g1.order() == 1);
  CHECK(disc.cm.phi_of(0) == disc.cm.g0.id());

  BisectionModule twogrp = bisection_cm(z4_2group().groupoid);
  CHECK(validate_fin_cm(twogrp.cm).ok());

  CHECK_THROWS_AS(bisection_cm(pair_groupoid(9)), GuardError);
}

TEST_CASE("actions and crossed-module homomorphisms correspond") {
  Fin2Group g = z4_2group();

  SUBCASE("left translation") {
    Fin2GroupAction a = left_translation(g);
    BisectionModule bis = bisection_cm(a.space);
    CMHom f = action_to_hom(g, a, bis);
    CHECK(check_cm_hom(g.cm, bis.cm, f).ok());
    CHECK(hom_to_action(g, a.space, bis, f).table == a.table);
  }
  SUBCASE("trivial action") {
    Fin2GroupAction a = trivial_action(g, pair_groupoid(2));
    BisectionModule bis = bisection_cm(a.space);
    CMHom f = action_to_hom(g, a, bis);
    for (int v : f.f0) CHECK(v == bis.cm.g0.id());
    for (int v : f.f1) CHECK(v == bis.cm.g1.id());
    CHECK(hom_to_action(g, a.space, bis, f).table == a.table);
  }
  SUBCASE("pair groupoid action") {
    Fin2GroupAction a = pair_groupoid_action(g, swap01());
    BisectionModule bis = bisection_cm(a.space);
    CMHom f = action_to_hom(g, a, bis);
    CHECK(check_cm_hom(g.cm, bis.cm, f).ok());
    CHECK(hom_to_action(g, a.space, bis, f).table == a.table);
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        if (g.cm.phi_of(b) == g.cm.phi_of(c)) CHECK(f.f1[static_cast<std::size_t>(b)] == f.f1[static_cast<std::size_t>(c)]);
    CHECK(f.f1[1] != f.f1[0]);
  }
  SUBCASE("every homomorphism into the pair groupoid on 3 points") {
    FinGroupoid p = pair_groupoid(3);
    BisectionModule bis = bisection_cm(p);
    int valid = 0;
    // Z2 and Z4 are cyclic: a homomorphism is fixed by the image of 1
    for (int d = 0; d < 6; ++d)
      for (int b = 0; b < 6; ++b) {
        CMHom f;
        for (int k = 0, x = bis.cm.g0.id(); k < 2; ++k, x = bis.cm.g0.mul(x, d)) f.f0.push_back(x);
        for (int k = 0, x = bis.cm.g1.id(); k < 4; ++k, x = bis.cm.g1.mul(x, b)) f.f1.push_back(x);
        if (!check_cm_hom(g.cm, bis.cm, f).ok()) continue;
        ++valid;
        Fin2GroupAction a = hom_to_action(g, p, bis, f);
        CHECK(validate_2group_action(g, a).ok());
        CMHom back = action_to_hom(g, a, bis);
        CHECK(back.f0 == f.f0);
        CHECK(back.f1 == f.f1);
      }
    CHECK(valid > 1);
  }
}

TEST_CASE("orbits and isotropy") {
  Fin2Group g = z4_2group();

  OrbitIsotropy lt = orbit_isotropy(g, left_translation(g), 0);
  CHECK(lt.report.ok());
  CHECK(lt.orbit_arrows.size() == 8);
  CHECK(lt.stabilizer == std::vector<int>{0});

  OrbitIsotropy triv = orbit_isotropy(g, trivial_action(g, pair_groupoid(2)), 1);
  CHECK(triv.report.ok());
  CHECK(triv.orbit_objects == std::vector<int>{1});
  CHECK(triv.stabilizer.size() == 8);

  Fin2GroupAction pa = pair_groupoid_action(g, swap01());
  OrbitIsotropy o0 = orbit_isotropy(g, pa, 0);
  CHECK(o0.report.ok());
  CHECK(o0.orbit_objects == std::vector<int>{0, 1});
  CHECK(o0.orbit_arrows.size() == 4);
  OrbitIsotropy o2 = orbit_isotropy(g, pa, 2);
  CHECK(o2.report.ok());
  CHECK(o2.orbit_arrows == std::vector<int>{8});
  CHECK(o2.stabilizer.size() == 8);

  // transitive action on a quotient: P is G / G^x
  HomogeneousSpace q = quotient_homogeneous(g, {{0}, {0, 2}});
  OrbitIsotropy oq = orbit_isotropy(g, q.action, 0);
  CHECK(oq.report.ok());
  CHECK(oq.orbit_arrows.size() == q.action.space.arrows());
  CHECK(oq.isotropy.h1 == std::vector<int>{0, 2});

  // arrow (0,1): sigma(g0) fixes 0 and sigma(g0 Phi(g1)) fixes 1
  std::vector<int> expected;
  for (int e = 0; e < 8; ++e)
    if (g.part0(e) == 0 && g.cm.phi_of(g.part1(e)) == 0) expected.push_back(e);
  CHECK(raw_isotropy(pa, g.order(), 1) == expected);
}
