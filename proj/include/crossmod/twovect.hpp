#pragma once
// 2-vector spaces V1 -phi-> V0, the general linear 2-group GL(V), representations,
// their duals, and semidirect products with finite 2-groups over F_p.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "crossmod/fin2grp.hpp"
#include "crossmod/matrix.hpp"
#include "crossmod/report.hpp"

namespace crossmod {

struct TwoVectSpace {
  std::size_t dim1 = 0, dim0 = 0;
  Mat phi;  ///< dim0 x dim1
  Field field;

  /// Dimensions come from the shape of phi; entries are moved into the field.
  static TwoVectSpace make(const Mat& phi, Field field = Field::rationals());
  /// Arrow coordinates (x, u) with x in V0 first.
  std::size_t total() const { return dim0 + dim1; }
};

/// V0* -> V1* with connecting map phi^T. Base (V*)_0 = V1*, fiber (V*)_1 = V0*.
TwoVectSpace dual_space(const TwoVectSpace& v);

struct GL0Elem {
  Mat a0, a1;
  friend bool operator==(const GL0Elem&, const GL0Elem&) = default;
};

struct GL1Elem {
  Mat gamma;  ///< dim1 x dim0
  friend bool operator==(const GL1Elem&, const GL1Elem&) = default;
};

/// Representation of a finite crossed module, indexed by group elements.
struct Rep {
  std::vector<GL0Elem> sigma0;
  std::vector<GL1Elem> sigma1;
  friend bool operator==(const Rep&, const Rep&) = default;
};

bool in_gl0(const TwoVectSpace& v, const GL0Elem& a);
bool in_gl1(const TwoVectSpace& v, const GL1Elem& g);

GL1Elem gl1_identity(const TwoVectSpace& v);
/// g + h + g phi h.
GL1Elem gl1_mul(const TwoVectSpace& v, const GL1Elem& g, const GL1Elem& h);
/// Solves g . h = 0. Throws PreconditionError when Id + gamma phi is singular.
GL1Elem gl1_inv(const TwoVectSpace& v, const GL1Elem& g);

GL0Elem gl0_identity(const TwoVectSpace& v);
GL0Elem gl0_compose(const GL0Elem& a, const GL0Elem& b);
GL0Elem gl0_inverse(const GL0Elem& a);

/// (Id + phi gamma, Id + gamma phi).
GL0Elem gl_boundary(const TwoVectSpace& v, const GL1Elem& g);
/// A1 gamma A0^-1.
GL1Elem gl_act(const GL0Elem& a, const GL1Elem& g);

/// Matrix of (A, gamma) |> (x, u) = (A0 x, A1 (u + gamma x + gamma phi u)) in (x, u) coordinates.
Mat gl_natural_action(const TwoVectSpace& v, const GL0Elem& a, const GL1Elem& g);

/// All elements over a prime field. Throws GuardError past the enumeration guard.
std::vector<GL0Elem> all_gl0(const TwoVectSpace& v);
std::vector<GL1Elem> all_gl1(const TwoVectSpace& v);

/// GL(V) over F_p as a finite crossed module, with the identity representation on V.
struct GLFinite {
  std::vector<GL0Elem> gl0;
  std::vector<GL1Elem> gl1;
  FinCrossedModule cm;
  Rep identity;
};

GLFinite gl_finite(const TwoVectSpace& v);

/// Crossed-module identities of GL(V) on the given samples: closure, associativity,
/// boundary a homomorphism and equivariant, action by automorphisms, Peiffer.
Report validate_gl_cm(const TwoVectSpace& v, const std::vector<GL0Elem>& gl0, const std::vector<GL1Elem>& gl1);

/// Operations of a crossed module whose elements have types E0, E1.
template <class E0, class E1>
struct CMOps {
  std::function<E0(const E0&, const E0&)> mul0;
  std::function<E1(const E1&, const E1&)> mul1;
  std::function<E0(const E1&)> phi;
  std::function<E1(const E0&, const E1&)> act;
};

/// Representation laws over sample elements; sampled pairs cover every law.
template <class E0, class E1>
Report validate_rep_on(const TwoVectSpace& v, const CMOps<E0, E1>& ops,
                       const std::function<GL0Elem(const E0&)>& sigma0,
                       const std::function<GL1Elem(const E1&)>& sigma1, const std::vector<E0>& g0s,
                       const std::vector<E1>& g1s, const std::function<std::string(const E0&)>& label0,
                       const std::function<std::string(const E1&)>& label1) {
  Report r("representation");
  for (const auto& a : g0s) {
    r.expect(in_gl0(v, sigma0(a)), "sigma0_in_gl0", [&] { return Fields{{"g0", label0(a)}}; });
    for (const auto& b : g0s)
      r.expect(sigma0(ops.mul0(a, b)) == gl0_compose(sigma0(a), sigma0(b)), "sigma0_hom",
               [&] { return Fields{{"g0", label0(a)}, {"h0", label0(b)}}; });
  }
  for (const auto& a : g1s) {
    r.expect(in_gl1(v, sigma1(a)), "sigma1_in_gl1", [&] { return Fields{{"g1", label1(a)}}; });
    r.expect(gl_boundary(v, sigma1(a)) == sigma0(ops.phi(a)), "boundary",
             [&] { return Fields{{"g1", label1(a)}}; });
    for (const auto& b : g1s)
      r.expect(sigma1(ops.mul1(a, b)) == gl1_mul(v, sigma1(a), sigma1(b)), "sigma1_hom",
               [&] { return Fields{{"g1", label1(a)}, {"h1", label1(b)}}; });
  }
  for (const auto& a : g0s)
    for (const auto& b : g1s)
      r.expect(sigma1(ops.act(a, b)) == gl_act(sigma0(a), sigma1(b)), "equivariant",
               [&] { return Fields{{"g0", label0(a)}, {"g1", label1(b)}}; });
  return r;
}

Report validate_rep(const TwoVectSpace& v, const FinCrossedModule& cm, const Rep& rep);
/// Identity representation of GL(V) checked on the samples.
Report validate_identity_rep(const TwoVectSpace& v, const std::vector<GL0Elem>& gl0, const std::vector<GL1Elem>& gl1);

Rep trivial_rep(const TwoVectSpace& v, const FinCrossedModule& cm);

/// Linear 2-group action: one matrix on (x, u) per element of G0 |x G1.
struct LinearAction {
  std::vector<Mat> matrices;
};

namespace detail {
Vec concat(const Vec& a, const Vec& b);
Vec slice(const Vec& v, std::size_t from, std::size_t count);
}  // namespace detail

/// Elements of G0 |x G1 for an action check, with the structure the check needs.
template <class E>
struct ActionSamples {
  E identity;
  std::vector<E> elements;
  std::vector<std::array<E, 3>> composable;  ///< (g, g', g * g')
  std::function<E(const E&, const E&)> mul;
  std::function<E(const E&)> source_unit, target_unit;  ///< (g0, e) and (g0 Phi(g1), e)
  std::function<std::string(const E&)> label;
};

/// Identity, group law on sample pairs, s and t equivariance, units to units and the
/// groupoid homomorphism law on the composable samples. The laws are linear in the
/// arrows, so basis arrows suffice.
template <class E>
Report validate_linear_action_on(const TwoVectSpace& v, const ActionSamples<E>& s,
                                 const std::function<Mat(const E&)>& m) {
  using detail::concat;
  using detail::slice;
  Report r("linear_action");
  const std::size_t n = v.total();
  auto x_of = [&](const Vec& p) { return slice(p, 0, v.dim0); };
  auto u_of = [&](const Vec& p) { return slice(p, v.dim0, v.dim1); };
  auto target = [&](const Vec& p) { return x_of(p) + v.phi * u_of(p); };
  auto unit_at = [&](const Vec& x) { return concat(x, zero_vec(v.dim1)); };

  r.expect(m(s.identity) == Mat::identity(n), "identity");
  for (const E& e : s.elements)
    for (const E& f : s.elements)
      r.expect(m(s.mul(e, f)) == m(e) * m(f), "group_law",
               [&] { return Fields{{"g", s.label(e)}, {"h", s.label(f)}}; });

  for (const E& e : s.elements) {
    const Mat me = m(e), ms = m(s.source_unit(e)), mt = m(s.target_unit(e));
    for (std::size_t i = 0; i < n; ++i) {
      Vec p = unit_vec(n, i);
      Vec gp = me * p;
      if (i < v.dim0)
        r.expect(is_zero(u_of(ms * p)), "units_to_units",
                 [&] { return Fields{{"g", s.label(s.source_unit(e))}, {"basis", std::to_string(i)}}; });
      r.expect(x_of(gp) == x_of(ms * unit_at(x_of(p))), "source",
               [&] { return Fields{{"g", s.label(e)}, {"basis", std::to_string(i)}}; });
      r.expect(target(gp) == x_of(mt * unit_at(target(p))), "target",
               [&] { return Fields{{"g", s.label(e)}, {"basis", std::to_string(i)}}; });
    }
  }

  // composable arrows (x,u) * (x + phi u, w) = (x, u + w)
  const std::size_t m_dim = v.dim0 + 2 * v.dim1;
  for (const auto& [e, f, ef] : s.composable) {
    const Mat me = m(e), mf = m(f), mef = m(ef);
    for (std::size_t i = 0; i < m_dim; ++i) {
      Vec basis = unit_vec(m_dim, i);
      Vec x = slice(basis, 0, v.dim0), u = slice(basis, v.dim0, v.dim1), w = slice(basis, v.dim0 + v.dim1, v.dim1);
      Vec gp = me * concat(x, u), fq = mf * concat(x + v.phi * u, w);
      auto witness = [&] { return Fields{{"g", s.label(e)}, {"g'", s.label(f)}, {"basis", std::to_string(i)}}; };
      if (!r.expect(target(gp) == x_of(fq), "composable_images", witness)) continue;
      r.expect(mef * concat(x, u + w) == concat(x_of(gp), u_of(gp) + u_of(fq)), "groupoid_hom", witness);
    }
  }
  return r;
}

/// validate_linear_action_on over every element and composable pair of a finite 2-group.
Report validate_linear_action(const TwoVectSpace& v, const Fin2Group& g, const LinearAction& a);

/// (x, u) |-> (s0.a0 x, s0.a1 s1 x + s0_target.a1 u).
Mat rep_action_matrix(const TwoVectSpace& v, const GL0Elem& s0, const GL1Elem& s1, const GL0Elem& s0_target);
/// Matrix of the per-element dual on dual_space(v), given the matrix of g^-1 on v.
Mat naive_dual_matrix(const TwoVectSpace& v, const Mat& inverse_action);

/// (g0,g1) |> (x,u) = (s0 x, s0 s1 x + s0' u) with s0 = sigma0(g0), s0' = sigma0(g0 Phi(g1)).
LinearAction rep_to_action(const TwoVectSpace& v, const Fin2Group& g, const Rep& rep);
/// sigma0(g0) = action of (g0,e); sigma1(g1) x = V1 part of (e,g1) |> (x,0).
Rep action_to_rep(const TwoVectSpace& v, const Fin2Group& g, const LinearAction& a);

/// sigma*0(g0) = sigma0(g0^-1)^T, sigma*1(g1) = sigma1(g1^-1)^T, on dual_space(v).
Rep dual_rep(const TwoVectSpace& v, const FinCrossedModule& cm, const Rep& rep);
/// rep_to_action of the dual representation, on dual_space(v).
LinearAction dual_2gp_action(const TwoVectSpace& v, const Fin2Group& g, const Rep& rep);
/// Per-element dual <g |>* w, x> = <w, g^-1 |> x>, on dual_space(v). Not a 2-group action in general.
LinearAction naive_dual_action(const TwoVectSpace& v, const Fin2Group& g, const LinearAction& a);
/// Conditions under which the naive dual is a 2-group action: (e,g1) fixes every (0,u)
/// and (Phi(g1),e) fixes every (x,0).
Report naive_dual_conditions(const TwoVectSpace& v, const Fin2Group& g, const LinearAction& a);

/// G1 x| V1 -> G0 x| V0 over F_p. Element (g1, u) has index g1 * p^dim1 + code(u), code little-endian in residues.
/// Throws PreconditionError over the rationals, GuardError when too large.
FinCrossedModule semidirect_2vect(const TwoVectSpace& v, const Fin2Group& g, const Rep& rep);

}  // namespace crossmod
