#pragma once
// Subspaces stored by their canonical RREF basis.

#include <optional>
#include <vector>

#include "crossmod/matrix.hpp"

namespace crossmod {

class Subspace {
 public:
  /// The zero subspace of F^ambient.
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);
  static Subspace row_space(const Mat& m);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vec> vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Canonical representative of v modulo this subspace: pivot coordinates zeroed.
  Vec reduce(const Vec& v) const;
  /// Coordinates of v in the canonical basis; empty when v is not a member.
  std::optional<Vec> coordinates(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Mat& m);
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
/// Annihilator in the dual space under the coordinate pairing.
Subspace annihilator(const Subspace& u);
/// Image of u under the linear map m (columns indexed by u's ambient).
Subspace image(const Mat& m, const Subspace& u);
/// Direct sum placed in ambient u.ambient() + v.ambient().
Subspace direct_sum(const Subspace& u, const Subspace& v);

struct Solution {
  Vec particular;
  Subspace homogeneous;
};

/// Solves A x = b exactly; empty when b is outside the column space.
std::optional<Solution> solve(const Mat& a, const Vec& b);

/// Canonical subspaces of F^n of every dimension whose RREF free entries lie in coeffs.
std::vector<Subspace> canonical_subspaces(std::size_t n, const std::vector<Scalar>& coeffs);

}  // namespace crossmod
