#pragma once
// Lie algebra crossed modules g1 -> g0 and their semidirect products.

#include "crossmod/exterior.hpp"
#include "crossmod/liealg.hpp"

namespace crossmod {

class LieCrossedModule {
 public:
  LieCrossedModule() = default;
  /// phi is dim(g0) x dim(g1); act has size dim0*dim1*dim1 with act[(a*dim1+b)*dim1+c]
  /// the e_c coefficient of x_a |> u_b.
  LieCrossedModule(LieAlg g0, LieAlg g1, Mat phi, std::vector<Scalar> act);

  const LieAlg& g0() const { return g0_; }
  const LieAlg& g1() const { return g1_; }
  const Mat& phi() const { return phi_; }
  const std::vector<Scalar>& act_tensor() const { return act_; }
  std::size_t dim0() const { return g0_.dim(); }
  std::size_t dim1() const { return g1_.dim(); }

  /// Matrix of x |> (.) on g1.
  Mat action_matrix(const Vec& x) const;
  Vec act(const Vec& x, const Vec& u) const;
  /// x |> P for P in Lambda^k g1, acting as a derivation.
  Multivector act(const Vec& x, const Multivector& p) const;

  LieCrossedModule with_action_entry(std::size_t a, std::size_t b, std::size_t c, Scalar v) const;
  LieCrossedModule with_phi(Mat phi) const;

  friend bool operator==(const LieCrossedModule&, const LieCrossedModule&) = default;

 private:
  LieAlg g0_, g1_;
  Mat phi_;
  std::vector<Scalar> act_;
};

Report validate_lie_cm(const LieCrossedModule& cm);

/// g0 (+) g1 with [(x,u),(y,v)] = ([x,y], x|>v - y|>u + [u,v]); coordinates (x, u).
LieAlg semidirect(const LieCrossedModule& cm);

Report check_2subalgebra(const LieCrossedModule& cm, const Subspace& h0, const Subspace& h1);

/// Embeds u in g1 as (0, u) in g0 (+) g1.
Vec embed_g1(const LieCrossedModule& cm, const Vec& u);
Vec embed_g0(const LieCrossedModule& cm, const Vec& x);
/// Bivector on g1 pushed into Lambda^2 (g0 (+) g1).
Multivector embed_g1(const LieCrossedModule& cm, const Multivector& w);

}  // namespace crossmod
