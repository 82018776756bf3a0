#include "crossmod/liealg.hpp"

namespace crossmod {

namespace {

std::vector<std::string> default_labels(std::size_t dim, std::vector<std::string> labels) {
  if (labels.empty())
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  if (labels.size() != dim) throw DimensionError("label count differs from dimension");
  return labels;
}

}  // namespace

LieAlg::LieAlg(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), labels_(default_labels(dim, std::move(labels))), tensor_(dim * dim * dim) {}

LieAlg LieAlg::from_brackets(std::size_t dim, const std::vector<Entry>& entries,
                             std::vector<std::string> labels) {
  LieAlg l(dim, std::move(labels));
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.value.size() != dim)
      throw DimensionError("bracket entry out of range");
    if (e.i >= e.j) throw Error("bracket entries must have i < j");
    for (std::size_t k = 0; k < dim; ++k) {
      l.tensor_[(e.i * dim + e.j) * dim + k] = e.value[k];
      l.tensor_[(e.j * dim + e.i) * dim + k] = -e.value[k];
    }
  }
  return l;
}

LieAlg LieAlg::from_tensor(std::size_t dim, std::vector<Scalar> tensor, std::vector<std::string> labels) {
  LieAlg l(dim, std::move(labels));
  if (tensor.size() != dim * dim * dim) throw DimensionError("structure tensor size mismatch");
  l.tensor_ = std::move(tensor);
  return l;
}

LieAlg LieAlg::with_constant(std::size_t i, std::size_t j, std::size_t k, Scalar v) const {
  LieAlg l = *this;
  l.tensor_.at((i * dim_ + j) * dim_ + k) = std::move(v);
  return l;
}

Vec LieAlg::bracket_basis(std::size_t i, std::size_t j) const {
  auto first = tensor_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
  return Vec(first, first + static_cast<std::ptrdiff_t>(dim_));
}

Vec LieAlg::bracket(const Vec& v, const Vec& w) const {
  if (v.size() != dim_ || w.size() != dim_) throw DimensionError("bracket arguments have wrong dimension");
  Vec r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (w[j].is_zero()) continue;
      Scalar f = v[i] * w[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!c(i, j, k).is_zero()) r[k] += f * c(i, j, k);
    }
  }
  return r;
}

Mat LieAlg::ad(const Vec& x) const {
  Mat m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec col = bracket(x, unit_vec(dim_, j));
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

bool LieAlg::is_abelian() const {
  for (const auto& s : tensor_)
    if (!s.is_zero()) return false;
  return true;
}

LieAlg LieAlg::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != dim_) throw DimensionError("permutation length mismatch");
  std::vector<std::size_t> inv(dim_);
  for (std::size_t a = 0; a < dim_; ++a) inv.at(perm[a]) = a;
  std::vector<std::string> labels;
  for (auto p : perm) labels.push_back(labels_[p]);
  std::vector<Scalar> t(tensor_.size());
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b)
      for (std::size_t k = 0; k < dim_; ++k)
        t[(a * dim_ + b) * dim_ + inv[k]] = c(perm[a], perm[b], k);
  return from_tensor(dim_, std::move(t), std::move(labels));
}

Report validate_lie(const LieAlg& l) {
  Report rep("validate_lie");
  std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        rep.expect((l.c(i, j, k) + l.c(j, i, k)).is_zero(), "antisymmetry", [&] {
          return Fields{{"i", std::to_string(i)}, {"j", std::to_string(j)}, {"k", std::to_string(k)},
                        {"c_ij^k", l.c(i, j, k).str()}, {"c_ji^k", l.c(j, i, k).str()}};
        });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
        Vec jac = l.bracket(ei, l.bracket_basis(j, k)) + l.bracket(ej, l.bracket_basis(k, i)) +
                  l.bracket(ek, l.bracket_basis(i, j));
        rep.expect(is_zero(jac), "jacobi", [&] {
          return Fields{{"i", std::to_string(i)}, {"j", std::to_string(j)}, {"k", std::to_string(k)},
                        {"jacobiator", to_string(jac)}};
        });
      }
  return rep;
}

bool is_subalgebra(const LieAlg& l, const Subspace& s) {
  if (s.ambient() != l.dim()) throw DimensionError("subspace ambient differs from algebra dimension");
  auto b = s.vectors();
  for (std::size_t a = 0; a < b.size(); ++a)
    for (std::size_t c = a + 1; c < b.size(); ++c)
      if (!s.contains(l.bracket(b[a], b[c]))) return false;
  return true;
}

bool is_ideal(const LieAlg& l, const Subspace& s) {
  if (s.ambient() != l.dim()) throw DimensionError("subspace ambient differs from algebra dimension");
  for (const auto& v : s.vectors())
    for (std::size_t i = 0; i < l.dim(); ++i)
      if (!s.contains(l.bracket(unit_vec(l.dim(), i), v))) return false;
  return true;
}

Vec coad(const LieAlg& l, const Vec& x, const Vec& xi) {
  if (x.size() != l.dim() || xi.size() != l.dim()) throw DimensionError("coad argument dimension");
  Vec r(l.dim());
  for (std::size_t j = 0; j < l.dim(); ++j) r[j] = -dot(xi, l.bracket(x, unit_vec(l.dim(), j)));
  return r;
}

}  // namespace crossmod
