#pragma once
// Finite crossed modules, their 2-groups, finite groupoids, homogeneous spaces,
// bisection crossed modules and the action/homomorphism correspondence.
// Elements are table indices; every law is checked by enumeration.

#include <map>
#include <string>
#include <vector>

#include "crossmod/report.hpp"
#include "crossmod/scalar.hpp"

namespace crossmod {

using Perm = std::vector<int>;

class FinGroup {
 public:
  FinGroup() = default;
  /// table[a][b] = a*b. Throws PreconditionError naming the failed law.
  static FinGroup from_table(const std::vector<std::vector<int>>& table, std::vector<std::string> labels = {});
  /// Closure of the generators; element 0 is the identity, the rest in breadth-first order.
  static FinGroup from_permutations(const std::vector<Perm>& generators, std::size_t degree);
  static FinGroup cyclic(std::size_t n);

  std::size_t order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int id() const { return id_; }
  const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  /// Underlying permutations when built from generators, else empty.
  const std::vector<Perm>& permutations() const { return perms_; }
  std::vector<std::vector<int>> table() const;

  /// Sorted subgroup generated by the given elements.
  std::vector<int> generated(const std::vector<int>& gens) const;
  std::vector<int> all() const;
  bool is_subgroup(const std::vector<int>& s) const;
  bool is_normal(const std::vector<int>& s) const;

 private:
  std::size_t n_ = 0;
  std::vector<int> table_, inv_;
  int id_ = 0;
  std::vector<std::string> labels_;
  std::vector<Perm> perms_;
};

/// Associativity, two-sided identity and inverses of a square table.
Report check_group_table(const std::vector<std::vector<int>>& table);

struct FinCrossedModule {
  FinGroup g0, g1;
  std::vector<int> phi;  ///< G1 -> G0
  std::vector<int> act;  ///< act[a * |G1| + b] = a |> b

  int phi_of(int b) const { return phi[static_cast<std::size_t>(b)]; }
  int act_on(int a, int b) const { return act[static_cast<std::size_t>(a) * g1.order() + static_cast<std::size_t>(b)]; }
};

/// Phi a homomorphism, an action by automorphisms, equivariance and Peiffer, exhaustively.
Report validate_fin_cm(const FinCrossedModule& cm);

/// Arrow a * b is defined when target(a) == source(b).
struct FinGroupoid {
  std::size_t objects = 0;
  std::vector<int> source, target;  ///< per arrow
  std::vector<int> unit;            ///< per object
  std::vector<int> inverse;         ///< per arrow
  std::vector<int> mult;            ///< arrows x arrows, -1 when not composable
  std::vector<std::string> object_labels, arrow_labels;

  std::size_t arrows() const { return source.size(); }
  int compose(int a, int b) const { return mult[static_cast<std::size_t>(a) * arrows() + static_cast<std::size_t>(b)]; }
};

/// Category axioms and invertibility, exhaustively.
Report validate_groupoid(const FinGroupoid& p);

FinGroupoid pair_groupoid(std::size_t points);
FinGroupoid discrete_groupoid(std::size_t points);
FinGroupoid group_as_groupoid(const FinGroup& g);

/// Strict 2-group of a finite crossed module. Element (g0, g1) has index g0 * |G1| + g1.
struct Fin2Group {
  FinCrossedModule cm;
  FinGroup group;        ///< (g0,g1) <> (l0,l1) = (g0 l0, (l0^-1 |> g1) l1)
  FinGroupoid groupoid;  ///< over G0: s = g0, t = g0 Phi(g1), (g0,g1) * (g0 Phi(g1), k) = (g0, g1 k)

  std::size_t order() const { return group.order(); }
  int element(int g0, int g1) const { return g0 * static_cast<int>(cm.g1.order()) + g1; }
  int part0(int e) const { return e / static_cast<int>(cm.g1.order()); }
  int part1(int e) const { return e % static_cast<int>(cm.g1.order()); }
};

/// Throws PreconditionError when the crossed module is invalid.
Fin2Group build_2group(const FinCrossedModule& cm);

/// s, t, unit and groupoid inverse are group homomorphisms; interchange law on all composable quadruples.
/// Throws GuardError when |G0 x G1| exceeds the guard (144).
Report check_2group(const Fin2Group& g);

/// Action table over G0 |x G1: table[g * arrows + p] = g |> p.
struct Fin2GroupAction {
  FinGroupoid space;
  std::vector<int> table;

  int apply(int g, int p) const { return table[static_cast<std::size_t>(g) * space.arrows() + static_cast<std::size_t>(p)]; }
};

/// Group action law and groupoid homomorphism law, exhaustively.
Report validate_2group_action(const Fin2Group& g, const Fin2GroupAction& a);

Fin2GroupAction left_translation(const Fin2Group& g);
Fin2GroupAction trivial_action(const Fin2Group& g, FinGroupoid space);
/// (g0,g1) |> (m1,m2) = (sigma(g0) m1, sigma(g0 Phi(g1)) m2) on the pair groupoid; sigma[g0] is a permutation.
Fin2GroupAction pair_groupoid_action(const Fin2Group& g, const std::vector<Perm>& sigma);

/// arrow_map sends arrows of `from` to arrows of `to`: bijective, compatible with s, t and *.
Report check_groupoid_iso(const FinGroupoid& from, const FinGroupoid& to, const std::vector<int>& arrow_map);
/// map(g |> p) = g |> map(p) for all g, p.
Report check_equivariant(const Fin2GroupAction& from, const Fin2GroupAction& to, const std::vector<int>& arrow_map,
                         std::size_t group_order);

struct TwoSubgroup {
  std::vector<int> h0, h1;
};

/// Subgroups with Phi(H1) in H0 and H0 |> H1 in H1.
Report check_2subgroup(const FinCrossedModule& cm, const TwoSubgroup& h);

struct HomogeneousSpace {
  Fin2GroupAction action;
  std::vector<int> arrow_of;  ///< representative -> arrow; representatives depend on the construction
  Report report;              ///< well-definedness and homogeneity checks
};

/// G/H with classes g <> H. arrow_of is indexed by elements of G0 |x G1.
/// Throws PreconditionError unless H is a 2-subgroup.
HomogeneousSpace quotient_homogeneous(const Fin2Group& g, const TwoSubgroup& h);

struct AssociatedBundle {
  HomogeneousSpace space;   ///< G0 x_{H0} (G1/H1); arrow_of[g0 * |G1| + g1] = [g0, [g1]]
  std::vector<int> fiber;   ///< G1 -> G1/H1
  std::vector<int> theta;   ///< quotient arrow [g0,g1] -> [g0,[g1]]
  std::vector<int> tau;     ///< inverse of theta
  Report report;            ///< theta, tau well defined, mutually inverse, iso, equivariant
};

AssociatedBundle associated_bundle(const Fin2Group& g, const TwoSubgroup& h);

struct GammaQuotient {
  FinGroupoid gamma;          ///< G0 x_{H0} G1 over G0/H0
  std::vector<int> gamma_of;  ///< element of G0 |x G1 -> arrow of gamma
  std::vector<int> normal;    ///< arrows of G0 x_{H0} H1 inside gamma
  FinGroupoid quotient;       ///< gamma // normal
  std::vector<int> quotient_of;  ///< gamma arrow -> quotient arrow
  std::vector<int> theta;     ///< quotient arrow -> arrow of G/H
  Report report;
};

GammaQuotient gamma_quotient(const Fin2Group& g, const TwoSubgroup& h);

/// H0 normal, H1 a G0-submodule, (h0 |> g1) g1^-1 in H1.
Report check_normal_2subgroup(const FinCrossedModule& cm, const TwoSubgroup& h);

struct NormalQuotient {
  FinCrossedModule cm;           ///< G1/H1 -> G0/H0
  std::vector<int> proj0, proj1;
  std::vector<int> iso;          ///< arrow of G/H -> element of the quotient 2-group
  Report report;                 ///< quotient crossed module valid, iso and equivariance
};

/// Throws PreconditionError naming the violated normality condition.
NormalQuotient normal_quotient(const Fin2Group& g, const TwoSubgroup& h);

/// Bis(P) -> Aut(P). Bisections map objects to arrows; automorphisms map arrows to arrows.
struct BisectionModule {
  FinCrossedModule cm;
  std::vector<std::vector<int>> bisections, automorphisms;

  /// -1 when absent.
  int bisection_index(const std::vector<int>& b) const;
  int automorphism_index(const std::vector<int>& d) const;

 private:
  friend BisectionModule bisection_cm(const FinGroupoid& p);
  std::map<std::vector<int>, int> bis_index_, aut_index_;
};

/// Throws GuardError above 64 arrows or when Bis/Aut grows past the enumeration guard.
BisectionModule bisection_cm(const FinGroupoid& p);

struct CMHom {
  std::vector<int> f0, f1;
};

/// Homomorphisms commuting with the boundary maps and intertwining the actions.
Report check_cm_hom(const FinCrossedModule& from, const FinCrossedModule& to, const CMHom& f);

/// F0(g0)(p) = (g0,e) |> p, F1(g1)(x) = (e,g1) |> 1_x. Throws PreconditionError on an invalid action.
CMHom action_to_hom(const Fin2Group& g, const Fin2GroupAction& a, const BisectionModule& bis);
/// (g0,g1) |> p = F0(g0)(p * F1(g1)(t p)).
Fin2GroupAction hom_to_action(const Fin2Group& g, const FinGroupoid& p, const BisectionModule& bis, const CMHom& f);

struct OrbitIsotropy {
  std::vector<int> orbit_arrows, orbit_objects;  ///< sorted, as arrows/objects of P
  Fin2GroupAction orbit;                         ///< restricted action on the reindexed orbit
  TwoSubgroup isotropy;                          ///< G0^x and G1^x
  std::vector<int> stabilizer;                   ///< elements of G0 |x G1 fixing 1_x
  HomogeneousSpace quotient;                     ///< G / G^x
  std::vector<int> iso;                          ///< orbit arrow (reindexed) -> quotient arrow
  Report report;
};

OrbitIsotropy orbit_isotropy(const Fin2Group& g, const Fin2GroupAction& a, int object);

/// Elements of G0 |x G1 fixing an arbitrary arrow. No 2-subgroup structure is claimed.
std::vector<int> raw_isotropy(const Fin2GroupAction& a, std::size_t group_order, int arrow);

}  // namespace crossmod
