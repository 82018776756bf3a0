#pragma once
// Dirac structures of Lie bialgebras through characteristic pairs, and the
// verdicts for homogeneous spaces of Poisson 2-groups.

#include <variant>

#include "crossmod/bialg.hpp"

namespace crossmod {

/// L = h (+) Graph(omega restricted to h^perp); omega only matters mod h ^ g.
struct CharPair {
  Subspace h;
  Bivector omega;
};

/// Maximal isotropic subspace of g (+) g*, coordinates (x, xi).
class LagSubspace {
 public:
  /// Throws PreconditionError unless the subspace is maximal isotropic.
  LagSubspace(Subspace space, std::size_t half);
  const Subspace& space() const { return space_; }
  std::size_t half() const { return half_; }
  friend bool operator==(const LagSubspace&, const LagSubspace&) = default;

 private:
  Subspace space_;
  std::size_t half_;
};

/// <a,b> = 0 on a basis, using the split pairing on a (2*half)-dimensional space.
Report check_isotropic(const Subspace& l, std::size_t half);

/// omega pushed onto Lambda^2 of the coordinate complement of h (non-pivot coordinates).
Bivector canonical_omega(const Subspace& h, const Bivector& omega);

LagSubspace char_to_lagrangian(const LieBialgebra& b, const CharPair& cp);
/// h = L cap g, omega canonical.
CharPair lagrangian_to_char(const LagSubspace& l);

/// Isotropic, dim n, closed under the double bracket.
Report check_dirac_direct(const LieBialgebra& b, const Subspace& l);
/// (1) h subalgebra, (2) 2 d_* omega + [omega,omega] in h ^ Lambda^2 g,
/// (3) [xi,eta]_* + ad*_{omega#xi} eta - ad*_{omega#eta} xi in h^perp.
/// Throws PreconditionError in characteristic 2.
Report check_dirac_charpair(const LieBialgebra& b, const CharPair& cp);

/// Derivations of g1 spanning the action of h0 (connected H0).
struct InfinitesimalBackend {
  std::vector<Mat> derivations;
};
/// Invertible matrices on g1 generating the action of H0.
struct GeneratorBackend {
  std::vector<Mat> generators;
};
using InvarianceBackend = std::variant<InfinitesimalBackend, GeneratorBackend>;

/// Action matrices of a basis of h0.
InfinitesimalBackend infinitesimal_backend(const LieCrossedModule& cm, const Subspace& h0);

Report check_h0_invariance(const InvarianceBackend& backend, const Subspace& h1, const Bivector& r);

/// The four conditions on (h0, h1, r) for a Dirac structure of the big bialgebra
/// with r in Lambda^2 g1. Throws PreconditionError unless (h0, h1) is a 2-subalgebra.
Report check_2bialgebra_dirac(const Lie2Bialgebra& tb, const Subspace& h0, const Subspace& h1,
                              const Bivector& r);

struct Homog2Verdict {
  bool h0_poisson_subgroup = false;
  bool two_subalgebra = false;
  bool dirac_g1 = false;
  bool h0_invariance = false;
  bool overall = false;
  Report report;  ///< one child per condition, carrying the witnesses
};

Homog2Verdict classify_homogeneous(const Lie2Bialgebra& tb, const Subspace& h0, const Subspace& h1,
                                   const Bivector& r, const InvarianceBackend& backend);

/// Poisson-subgroup side condition of the triangular case: apply phi to one slot of x |> mu
/// and ask for membership in h0 (x) g1.
enum class PhiSlot {
  second,  ///< (1 ^ phi) applied to x |> mu
  first,   ///< (phi ^ 1), the mirrored slot
};

/// Conditions h1 subalgebra, [mu+r,mu+r] = 0 mod h1, [u, mu+r] = 0 mod h1 (u in h1), and the
/// side condition for every basis x of h0. Throws PreconditionError unless mu is an r-matrix.
Report triangular_check(const LieCrossedModule& cm, const Bivector& mu, const Subspace& h0, const Subspace& h1,
                        const Bivector& r, PhiSlot slot = PhiSlot::second);

/// All canonical omega with coefficients in `coeffs` (on Lambda^2 of the complement of h)
/// such that (h, omega) is Dirac, sorted lexicographically by coefficient vector.
/// Throws GuardError when the grid exceeds the enumeration guard.
std::vector<Bivector> enumerate_dirac(const LieBialgebra& b, const Subspace& h, const std::vector<Scalar>& coeffs);

}  // namespace crossmod
