#pragma once
// Lie algebras given by structure constants.

#include <string>
#include <tuple>
#include <vector>

#include "crossmod/report.hpp"
#include "crossmod/subspace.hpp"

namespace crossmod {

/// [e_i, e_j] = sum_k c(i,j,k) e_k.
class LieAlg {
 public:
  struct Entry {
    std::size_t i, j;
    Vec value;  ///< coefficients of [e_i, e_j]
  };

  LieAlg() = default;
  /// Abelian algebra of the given dimension.
  explicit LieAlg(std::size_t dim, std::vector<std::string> labels = {});
  /// Brackets for i<j; the antisymmetric completion is filled in.
  static LieAlg from_brackets(std::size_t dim, const std::vector<Entry>& entries,
                              std::vector<std::string> labels = {});
  /// Raw tensor of size dim^3, no completion (used to build deliberately broken algebras).
  static LieAlg from_tensor(std::size_t dim, std::vector<Scalar> tensor,
                            std::vector<std::string> labels = {});
  /// Structure constants read off a bilinear map on basis vectors.
  template <class Bracket>
  static LieAlg from_basis_bracket(std::size_t dim, Bracket&& br, std::vector<std::string> labels = {}) {
    std::vector<Scalar> t(dim * dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        Vec v = br(i, j);
        for (std::size_t k = 0; k < dim; ++k) t[(i * dim + j) * dim + k] = v.at(k);
      }
    return from_tensor(dim, std::move(t), std::move(labels));
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return tensor_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Scalar>& tensor() const { return tensor_; }
  /// Copy with one structure constant replaced (mutant fixtures).
  LieAlg with_constant(std::size_t i, std::size_t j, std::size_t k, Scalar v) const;

  Vec bracket_basis(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& v, const Vec& w) const;
  /// Matrix of ad_x, columns indexed by the argument.
  Mat ad(const Vec& x) const;
  bool is_abelian() const;

  /// Basis reordered so that new index a is old index perm[a].
  LieAlg permuted(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const LieAlg&, const LieAlg&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Scalar> tensor_;
};

Report validate_lie(const LieAlg& l);
bool is_subalgebra(const LieAlg& l, const Subspace& s);
bool is_ideal(const LieAlg& l, const Subspace& s);
/// <coad(x, xi), y> = -<xi, [x, y]>.
Vec coad(const LieAlg& l, const Vec& x, const Vec& xi);

}  // namespace crossmod
