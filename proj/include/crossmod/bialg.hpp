#pragma once
// Lie bialgebras, their doubles, and Lie 2-bialgebras (pairs of crossed modules).

#include "crossmod/lie2.hpp"

namespace crossmod {

/// g together with a bracket on g*, both in dual coordinates: e_i pairs with the i-th dual basis vector.
struct LieBialgebra {
  LieAlg g;
  LieAlg gdual;
};

/// d_* x, defined by <d_* x, xi ^ eta> = -<x, [xi, eta]_*>.
Multivector cobracket(const LieBialgebra& b, const Vec& x);

/// Cocycle condition d_*[x,y] = ad_x d_*y - ad_y d_*x on basis pairs.
Report check_bialgebra(const LieBialgebra& b);

/// g (+) g* with the split pairing; coordinates (x, xi), first half g.
struct DoubleAlg {
  LieAlg algebra;
  std::size_t half = 0;

  /// <x + xi, y + eta> = <x, eta> + <y, xi>.
  Scalar pairing(const Vec& a, const Vec& b) const;
  Vec embed_g(const Vec& x) const;
  Vec embed_dual(const Vec& xi) const;
};

/// Manin double. Throws PreconditionError when the cocycle condition fails.
DoubleAlg manin_double(const LieBialgebra& b);
/// Same bracket formula without the cocycle precondition (negative controls).
DoubleAlg manin_double_unchecked(const LieBialgebra& b);

/// <[a,b],c> + <b,[a,c]> = 0 on all basis triples.
Report check_pairing_invariance(const DoubleAlg& d);

/// Crossed modules g1 -> g0 and g0* -> g1*. cmdual.g0() is g1*, cmdual.g1() is g0*.
struct Lie2Bialgebra {
  LieCrossedModule cm;
  LieCrossedModule cmdual;
};

/// (g0 |x g1, g1* |x g0*) with dual coordinates reordered to (alpha, xi) so that
/// <(x,u),(alpha,xi)> = <x,alpha> + <u,xi> is coefficientwise.
LieBialgebra big_bialgebra(const Lie2Bialgebra& tb);
/// (g_i, g_i*) for i = 0, 1.
LieBialgebra component_bialgebra(const Lie2Bialgebra& tb, int degree);

Report check_2bialgebra(const Lie2Bialgebra& tb);

/// The g1 part of [x, alpha] in the big double: <[x,alpha], xi> = -<x, xi |> alpha>.
Vec mixed_bracket_component(const Lie2Bialgebra& tb, const Vec& x, const Vec& alpha);

/// x |> [mu, mu] = 0 for every basis x of g0.
Report check_r_matrix(const LieCrossedModule& cm, const Bivector& mu);

struct Coboundary {
  Lie2Bialgebra tb;
  bool triangular = false;  ///< [mu, mu] = 0
};

/// Dual structure induced by an r-matrix mu in Lambda^2 g1: <[xi,eta],u> = <xi^eta, ad_u mu>,
/// <xi |> alpha, x> = <xi ^ phi^T alpha, x |> mu>, dual phi = -phi^T,
/// [alpha,beta] = (-phi^T alpha) |> beta.
/// Throws PreconditionError naming the first basis x with x |> [mu,mu] != 0.
Coboundary coboundary_2bialgebra(const LieCrossedModule& cm, const Bivector& mu);

/// Bracket on g* from r: <[xi,eta], u> = <xi ^ eta, [r, u]>. No cocycle check.
LieAlg coboundary_dual(const LieAlg& g, const Bivector& r);

}  // namespace crossmod
