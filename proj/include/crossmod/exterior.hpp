#pragma once
// Exterior powers of a coordinate space, the Schouten bracket and the
// differential induced by a dual Lie algebra.

#include <vector>

#include "crossmod/liealg.hpp"

namespace crossmod {

using IndexSet = std::vector<std::size_t>;

/// Increasing k-subsets of {0..n-1} in lexicographic order.
const std::vector<IndexSet>& index_sets(std::size_t n, std::size_t k);
/// Position of an increasing index set in index_sets(n, k).
std::size_t index_rank(std::size_t n, const IndexSet& set);

/// Homogeneous element of the exterior algebra, coefficients on e_I for increasing I.
class Multivector {
 public:
  Multivector() = default;
  Multivector(std::size_t dim, std::size_t grade);

  static Multivector from_vector(const Vec& v);
  /// Bivector sum_{i<j} w_ij e_i^e_j from an antisymmetric matrix.
  static Multivector from_matrix(const Mat& w);
  static Multivector from_coeffs(std::size_t dim, std::size_t grade, Vec coeffs);
  /// e_{i1}^...^e_{ik} for arbitrary (not necessarily sorted) indices.
  static Multivector basis(std::size_t dim, const IndexSet& indices);

  std::size_t dim() const { return dim_; }
  std::size_t grade() const { return grade_; }
  const Vec& coeffs() const { return coeffs_; }
  const Scalar& coeff(const IndexSet& increasing) const;
  bool is_zero() const { return crossmod::is_zero(coeffs_); }

  /// Adds c * e_{seq} where seq may be unsorted; repeated indices contribute nothing.
  void add_term(IndexSet seq, const Scalar& c);

  Mat to_matrix() const;
  /// (Omega^sharp xi)_j = sum_i xi_i w_ij.
  Vec sharp(const Vec& xi) const;

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a);
  friend Multivector operator*(const Scalar& s, Multivector a);
  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  std::size_t dim_ = 0, grade_ = 0;
  Vec coeffs_;
};

using Bivector = Multivector;

Multivector wedge(const Multivector& a, const Multivector& b);
/// Determinant pairing of Lambda^k V with Lambda^k V*: coefficientwise on e_I / e^I.
Scalar pair(const Multivector& a, const Multivector& b);

/// Algebraic Schouten bracket on decomposables:
/// [x1^..^xp, y1^..^yq] = sum (-1)^(a+b) [xa,yb] ^ x1..^xa..xp ^ y1..^yb..yq.
Multivector schouten(const LieAlg& l, const Multivector& p, const Multivector& q);

/// d_* induced by the dual bracket: <d_* x, xi^eta> = -<x, [xi,eta]>, extended as a derivation.
Multivector ce_diff(const LieAlg& dual, const Multivector& p);

/// Linear map D acting as a derivation on Lambda^k.
Multivector derivation_action(const Mat& d, const Multivector& p);
/// Linear map A acting diagonally on Lambda^k.
Multivector diagonal_action(const Mat& a, const Multivector& p);

/// span{h_a ^ e_I : |I| = grade-1} inside Lambda^grade.
Subspace wedge_span(const Subspace& h, std::size_t grade);

/// Image of a bivector on g1 under (1 ^ phi) in g1 (x) g0, as a dim1 x dim0 matrix
/// M with M = sum w_ab (u_a (x) phi u_b - u_b (x) phi u_a).
Mat one_wedge_phi(const Multivector& w, const Mat& phi);
/// (phi ^ 1) in g0 (x) g1, as a dim0 x dim1 matrix.
Mat phi_wedge_one(const Multivector& w, const Mat& phi);

}  // namespace crossmod
