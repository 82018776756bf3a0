#include "crossmod/subspace.hpp"

#include <algorithm>
#include <functional>

namespace crossmod {

Subspace Subspace::row_space(const Mat& m) {
  Subspace s(m.cols());
  auto red = rref(m);
  s.basis_ = std::move(red.reduced);
  s.pivots_ = std::move(red.pivots);
  return s;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
  return row_space(Mat::from_rows(vectors, ambient));
}

Subspace Subspace::full(std::size_t ambient) { return row_space(Mat::identity(ambient)); }

std::vector<Vec> Subspace::vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionError("vector does not live in the ambient space");
  Vec r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar f = r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      if (!basis_(i, j).is_zero()) r[j] -= f * basis_(i, j);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("subspace ambient dimensions differ");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(dim());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace kernel(const Mat& m) {
  auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = -red.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, m.cols());
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw DimensionError("subspace ambient dimensions differ");
  auto rows = u.vectors();
  for (auto& r : v.vectors()) rows.push_back(std::move(r));
  return Subspace::span(rows, u.ambient());
}

Subspace annihilator(const Subspace& u) { return kernel(u.basis()); }

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw DimensionError("subspace ambient dimensions differ");
  return annihilator(sum(annihilator(u), annihilator(v)));
}

Subspace image(const Mat& m, const Subspace& u) {
  if (m.cols() != u.ambient()) throw DimensionError("map does not act on the subspace");
  std::vector<Vec> rows;
  for (const auto& b : u.vectors()) rows.push_back(m * b);
  return Subspace::span(rows, m.rows());
}

Subspace direct_sum(const Subspace& u, const Subspace& v) {
  std::size_t n = u.ambient() + v.ambient();
  std::vector<Vec> rows;
  for (const auto& b : u.vectors()) {
    Vec w(n);
    std::copy(b.begin(), b.end(), w.begin());
    rows.push_back(std::move(w));
  }
  for (const auto& b : v.vectors()) {
    Vec w(n);
    std::copy(b.begin(), b.end(), w.begin() + static_cast<std::ptrdiff_t>(u.ambient()));
    rows.push_back(std::move(w));
  }
  return Subspace::span(rows, n);
}

std::optional<Solution> solve(const Mat& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionError("right-hand side length mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t i = 0; i < red.pivots.size(); ++i) x[red.pivots[i]] = red.reduced(i, a.cols());
  return Solution{std::move(x), kernel(a)};
}

std::vector<Subspace> canonical_subspaces(std::size_t n, const std::vector<Scalar>& coeffs) {
  std::vector<Subspace> out;
  for (std::size_t k = 0; k <= n; ++k) {
    // choose pivot columns, then fill the free slots right of each pivot
    std::vector<std::size_t> piv(k);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t idx, std::size_t start) {
      if (idx == k) {
        std::vector<std::pair<std::size_t, std::size_t>> free_slots;
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = piv[i] + 1; j < n; ++j)
            if (std::find(piv.begin(), piv.end(), j) == piv.end()) free_slots.emplace_back(i, j);
        std::vector<std::size_t> digit(free_slots.size(), 0);
        while (true) {
          Mat m(k, n);
          for (std::size_t i = 0; i < k; ++i) m(i, piv[i]) = 1;
          for (std::size_t s = 0; s < free_slots.size(); ++s)
            m(free_slots[s].first, free_slots[s].second) = coeffs[digit[s]];
          out.push_back(Subspace::row_space(m));
          std::size_t s = free_slots.size();
          bool done = true;
          while (s > 0) {
            --s;
            if (++digit[s] < coeffs.size()) {
              done = false;
              break;
            }
            digit[s] = 0;
          }
          if (done) return;
        }
      }
      for (std::size_t c = start; c < n; ++c) {
        piv[idx] = c;
        choose(idx + 1, c + 1);
      }
    };
    choose(0, 0);
  }
  return out;
}

}  // namespace crossmod
