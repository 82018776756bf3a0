#pragma once
// Named example structures shared by tests, the acceptance suite and docs.

#include "crossmod/bialg.hpp"
#include "crossmod/fin2grp.hpp"
#include "crossmod/mat2grp.hpp"
#include "crossmod/twovect.hpp"

namespace crossmod::fixtures {

/// [e1, e2] = e2.
LieAlg l_sol2();
/// Basis (H, E, F): [H,E] = 2E, [H,F] = -2F, [E,F] = H.
LieAlg sl2();
/// g0 = span{x}, g1 = span{u, v}, x|>u = v, x|>v = 0, phi = 0.
LieCrossedModule x_flow();
/// (L-sol2, abelian dual).
LieBialgebra b_sol2();
/// sl2 with the coboundary dual of r = H^E.
LieBialgebra b_sl2();
/// Coboundary 2-bialgebra of X-flow with mu = u^v.
Coboundary x_flow_coboundary();
/// Identity crossed module g -> g with the adjoint action.
LieCrossedModule identity_cm(const LieAlg& g);

/// S3 on {0,1,2} generated by (0 1 2) and (0 1).
FinGroup s3();
/// A3 inside s3().
std::vector<int> a3();
/// Z4 -> Z2 by reduction mod 2, trivial action.
FinCrossedModule cm_z4();
/// S3 -> S3 identity, action by conjugation.
FinCrossedModule cm_s3();

/// V1 = V0 = one-dimensional, phi = identity.
TwoVectSpace v_line(Field field = Field::rationals());
/// Rep of cm_z4() on v_line: sigma0(g0) = (-1)^g0, sigma1(g1) = (-1)^g1 - 1.
Rep sign_rep(Field field);

/// Unitriangular 3x3 matrices with their center {I + t E13}, conjugation.
MatCrossedModule mat_heis();
/// Affine group {[[a, b], [0, 1]]} with its translation subgroup, conjugation.
MatCrossedModule mat_affine();
/// Affine group mapped identically to itself, conjugation.
MatCrossedModule mat_affine_identity();
/// GL_2 samples acting on (Q^2, +), algebra gl_2.
MatCrossedModule mat_linear_plane();

}  // namespace crossmod::fixtures
