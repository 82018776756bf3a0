#pragma once
// Matrix-presented crossed modules and their adjoint and coadjoint 2-group actions.
// Derivatives are exact: exp(eps x) = I + eps x in matrices over Scalar[eps]/(eps^2).

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "crossmod/exterior.hpp"
#include "crossmod/lie2.hpp"
#include "crossmod/twovect.hpp"

namespace crossmod {

/// a + eps b with eps^2 = 0.
struct DualMat {
  Mat a, b;

  static DualMat constant(const Mat& a);
  /// a^-1 - eps a^-1 b a^-1. Throws PreconditionError when a is singular.
  DualMat inverse() const;

  friend DualMat operator+(const DualMat& p, const DualMat& q) { return {p.a + q.a, p.b + q.b}; }
  friend DualMat operator-(const DualMat& p) { return {-p.a, -p.b}; }
  friend DualMat operator*(const DualMat& p, const DualMat& q) { return {p.a * q.a, p.a * q.b + p.b * q.a}; }
  friend bool operator==(const DualMat&, const DualMat&) = default;
};

enum class MatMode {
  conjugation,  ///< G1, G0 inside GL_n, Phi the inclusion, g0 |> g1 = g0 g1 g0^-1
  linear,       ///< G0 inside GL_m acting on G1 = (F^m, +), Phi trivial
};

std::string to_string(MatMode mode);

struct MatCrossedModule {
  MatMode mode = MatMode::conjugation;
  std::size_t size = 0;
  std::vector<Mat> g0_basis;  ///< Lie algebra of G0 inside gl(size)
  std::vector<Mat> g1_basis;  ///< conjugation: inside gl(size); linear: columns, the standard basis
  std::vector<Mat> g0_samples, g1_samples;  ///< linear mode: G1 samples are size x 1 columns

  static MatCrossedModule conjugation(std::size_t n, std::vector<Mat> g0_basis, std::vector<Mat> g1_basis,
                                      std::vector<Mat> g0_samples, std::vector<Mat> g1_samples);
  static MatCrossedModule linear(std::size_t m, std::vector<Mat> g0_basis, std::vector<Mat> g0_samples,
                                 std::vector<Mat> g1_samples);
};

struct TwoGroupElem {
  Mat g0, g1;
  friend bool operator==(const TwoGroupElem&, const TwoGroupElem&) = default;
};

/// (x, u) in g0 (+) g1, as matrices (u a column in linear mode).
struct AlgElem {
  Mat x, u;
  friend bool operator==(const AlgElem&, const AlgElem&) = default;
};

// Group operations, written once over dual matrices.
DualMat g1_mul(const MatCrossedModule& cm, const DualMat& a, const DualMat& b);
DualMat g1_inv(const MatCrossedModule& cm, const DualMat& a);
Mat g1_unit(const MatCrossedModule& cm);
DualMat phi_of(const MatCrossedModule& cm, const DualMat& g1);
DualMat act_on(const MatCrossedModule& cm, const DualMat& g0, const DualMat& g1);
/// exp(eps u) in G1.
DualMat exp_eps_g1(const MatCrossedModule& cm, const Mat& u);

TwoGroupElem identity_elem(const MatCrossedModule& cm);
/// (g0 l0, (l0^-1 |> g1) l1).
TwoGroupElem diamond(const MatCrossedModule& cm, const TwoGroupElem& g, const TwoGroupElem& l);
TwoGroupElem inverse(const MatCrossedModule& cm, const TwoGroupElem& g);
Mat target_of(const MatCrossedModule& cm, const TwoGroupElem& g);
/// (g0, g1) * (g0 Phi(g1), h1) = (g0, g1 h1); empty when not composable.
std::optional<TwoGroupElem> compose(const MatCrossedModule& cm, const TwoGroupElem& g, const TwoGroupElem& l);

/// Sample elements of G0 |x G1, identity first, and composable pairs built from them.
struct MatSamples {
  std::vector<TwoGroupElem> elements;
  std::vector<std::array<TwoGroupElem, 3>> composable;  ///< (g, (t g, h1), g * (t g, h1))
};

MatSamples samples(const MatCrossedModule& cm);
std::string label(const TwoGroupElem& g);

/// Crossed-module identities on the samples and closure of the Lie algebra data.
Report validate_mat_cm(const MatCrossedModule& cm);

/// The Lie 2-algebra g1 -> g0 in the given bases.
LieCrossedModule lie_cm(const MatCrossedModule& cm);
/// g1 -> g0 as a 2-vector space; coordinates (x, u).
TwoVectSpace algebra_space(const MatCrossedModule& cm);
Vec alg_coords(const MatCrossedModule& cm, const AlgElem& e);
AlgElem alg_from_coords(const MatCrossedModule& cm, const Vec& c);

/// eps-part of (I + eps x) |> g1.
Mat hat_vector(const MatCrossedModule& cm, const Mat& x, const Mat& g1);

/// (g0 x g0^-1, g0 |> (Ad_{g1} u - R_{g1^-1 *} hat_x)), each derivative from its own operation.
AlgElem ad_2group(const MatCrossedModule& cm, const TwoGroupElem& g, const AlgElem& xu);
/// eps-part of g <> (exp eps x, exp eps u) <> g^-1.
AlgElem ad_2group_oracle(const MatCrossedModule& cm, const TwoGroupElem& g, const AlgElem& xu);

using AdFormula = std::function<AlgElem(const MatCrossedModule&, const TwoGroupElem&, const AlgElem&)>;

/// Matrix of a formula on algebra_space coordinates.
Mat ad_matrix(const MatCrossedModule& cm, const TwoGroupElem& g, const AdFormula& f = ad_2group);

/// Formula against the oracle on samples x basis, and preservation of the semidirect bracket.
Report ad_oracle_check(const MatCrossedModule& cm);
/// Ad(x,u) * Ad'(x + phi u, v) = Ad_{g * g'}(x, u + v) on composable samples and basis arrows.
Report ad_groupoid_check(const MatCrossedModule& cm, const AdFormula& f = ad_2group);
/// The full 2-group action axioms for Ad on the samples.
Report ad_action_check(const MatCrossedModule& cm);

/// Ad0(g0) = (Ad g0, g0 |> .), Ad1(g1) = -R_{g1^-1 *} hat_(.) on algebra_space(cm).
struct MatRep {
  TwoVectSpace space;
  std::function<GL0Elem(const Mat&)> sigma0;
  std::function<GL1Elem(const Mat&)> sigma1;
};

MatRep adjoint_rep(const MatCrossedModule& cm);
/// Representation laws on the samples, and the induced action against ad_matrix.
Report validate_adjoint_rep(const MatCrossedModule& cm);

/// (g0 |>* xi, -Ad*_{g0} rho*_{g1} xi + Ad*_{g0 Phi(g1)} alpha) with (xi, alpha) in g1* (+) g0*.
Vec coad_2group(const MatCrossedModule& cm, const TwoGroupElem& g, const Vec& xi_alpha);
Mat coad_matrix(const MatCrossedModule& cm, const TwoGroupElem& g);
/// <rho*_{g1} xi, x> = <xi, R_{g1 *} hat_x at g1^-1>; matrix g1* -> g0*.
Mat rho_star(const MatCrossedModule& cm, const Mat& g1);
/// Formula against the dual of the adjoint representation, and the 2-group action axioms.
Report coad_check(const MatCrossedModule& cm);

/// Group law (g,w) <> (g',w') = (g <> g', w + g |> w'); groupoid law componentwise.
struct LinearSemidirect {
  MatCrossedModule cm;
  TwoVectSpace space;
  std::function<Mat(const TwoGroupElem&)> action;
};

struct SemidirectElem {
  TwoGroupElem g;
  Vec w;
  friend bool operator==(const SemidirectElem&, const SemidirectElem&) = default;
};

SemidirectElem sd_diamond(const LinearSemidirect& s, const SemidirectElem& a, const SemidirectElem& b);
std::optional<SemidirectElem> sd_compose(const LinearSemidirect& s, const SemidirectElem& a, const SemidirectElem& b);

struct TangentCotangent {
  LinearSemidirect tangent, cotangent;
  Report report;  ///< interchange law on sampled composable quadruples, one child each
};

TangentCotangent tangent_cotangent(const MatCrossedModule& cm);
Report semidirect_interchange_check(const LinearSemidirect& s);

/// g0^-1 |> mu - mu with g0 acting diagonally on Lambda^2 g1.
Multivector lambda_mu(const MatCrossedModule& cm, const Mat& g0, const Multivector& mu);
/// lambda(g0 g0') = g0'^-1 |> lambda(g0) + lambda(g0') on sample pairs.
Report lambda_cocycle_check(const MatCrossedModule& cm, const Multivector& mu);

/// Whether Ad_{g1} u = u and Ad_{Phi(g1)} x = x on the samples, and whether the
/// per-element dual of Ad passes the action axioms; condition "iff" ties the two.
Report naive_coad_iff_check(const MatCrossedModule& cm);

}  // namespace crossmod
