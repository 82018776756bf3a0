#include "crossmod/exterior.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace crossmod {

namespace {

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

const std::vector<IndexSet>& index_sets(std::size_t n, std::size_t k) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<std::vector<IndexSet>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, k}];
  if (!slot) {
    slot = std::make_unique<std::vector<IndexSet>>();
    IndexSet cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (cur.size() == k) {
        slot->push_back(cur);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
  }
  return *slot;
}

std::size_t index_rank(std::size_t n, const IndexSet& set) {
  std::size_t rank = 0, offset = 0, k = set.size();
  for (std::size_t a = 0; a < set.size(); ++a, --k) {
    std::size_t i = set[a] - offset;
    rank += binom(n, k) - binom(n - i, k);
    n -= i + 1;
    offset = set[a] + 1;
  }
  return rank;
}

Multivector::Multivector(std::size_t dim, std::size_t grade)
    : dim_(dim), grade_(grade), coeffs_(binom(dim, grade)) {}

Multivector Multivector::from_vector(const Vec& v) { return from_coeffs(v.size(), 1, v); }

Multivector Multivector::from_matrix(const Mat& w) {
  if (!w.is_antisymmetric()) throw Error("bivector matrix is not antisymmetric");
  Multivector m(w.rows(), 2);
  const auto& sets = index_sets(w.rows(), 2);
  for (std::size_t r = 0; r < sets.size(); ++r) m.coeffs_[r] = w(sets[r][0], sets[r][1]);
  return m;
}

Multivector Multivector::from_coeffs(std::size_t dim, std::size_t grade, Vec coeffs) {
  Multivector m(dim, grade);
  if (coeffs.size() != m.coeffs_.size()) throw DimensionError("multivector coefficient count mismatch");
  m.coeffs_ = std::move(coeffs);
  return m;
}

Multivector Multivector::basis(std::size_t dim, const IndexSet& indices) {
  Multivector m(dim, indices.size());
  m.add_term(indices, Scalar(1));
  return m;
}

const Scalar& Multivector::coeff(const IndexSet& increasing) const {
  return coeffs_.at(index_rank(dim_, increasing));
}

void Multivector::add_term(IndexSet seq, const Scalar& c) {
  if (seq.size() != grade_) throw DimensionError("term grade mismatch");
  if (c.is_zero()) return;
  bool negative = false;
  for (std::size_t a = 1; a < seq.size(); ++a)
    for (std::size_t b = a; b > 0 && seq[b - 1] >= seq[b]; --b) {
      if (seq[b - 1] == seq[b]) return;
      std::swap(seq[b - 1], seq[b]);
      negative = !negative;
    }
  for (auto i : seq)
    if (i >= dim_) throw DimensionError("index out of range in multivector term");
  Scalar& slot = coeffs_[index_rank(dim_, seq)];
  if (negative) slot -= c;
  else slot += c;
}

Mat Multivector::to_matrix() const {
  if (grade_ != 2) throw Error("to_matrix needs a bivector");
  Mat w(dim_, dim_);
  const auto& sets = index_sets(dim_, 2);
  for (std::size_t r = 0; r < sets.size(); ++r) {
    w(sets[r][0], sets[r][1]) = coeffs_[r];
    w(sets[r][1], sets[r][0]) = -coeffs_[r];
  }
  return w;
}

Vec Multivector::sharp(const Vec& xi) const {
  if (xi.size() != dim_) throw DimensionError("sharp argument dimension");
  return to_matrix().transpose() * xi;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  if (dim_ != o.dim_ || grade_ != o.grade_) throw DimensionError("multivector shapes differ");
  for (std::size_t r = 0; r < coeffs_.size(); ++r) coeffs_[r] += o.coeffs_[r];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  if (dim_ != o.dim_ || grade_ != o.grade_) throw DimensionError("multivector shapes differ");
  for (std::size_t r = 0; r < coeffs_.size(); ++r) coeffs_[r] -= o.coeffs_[r];
  return *this;
}

Multivector operator-(Multivector a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

Multivector operator*(const Scalar& s, Multivector a) {
  for (auto& c : a.coeffs_) c *= s;
  return a;
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) throw DimensionError("wedge of different dimensions");
  Multivector out(a.dim(), a.grade() + b.grade());
  const auto& sa = index_sets(a.dim(), a.grade());
  const auto& sb = index_sets(b.dim(), b.grade());
  for (std::size_t r = 0; r < sa.size(); ++r) {
    if (a.coeffs()[r].is_zero()) continue;
    for (std::size_t s = 0; s < sb.size(); ++s) {
      if (b.coeffs()[s].is_zero()) continue;
      IndexSet seq = sa[r];
      seq.insert(seq.end(), sb[s].begin(), sb[s].end());
      out.add_term(std::move(seq), a.coeffs()[r] * b.coeffs()[s]);
    }
  }
  return out;
}

Scalar pair(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim() || a.grade() != b.grade()) throw DimensionError("pairing of mismatched multivectors");
  return dot(a.coeffs(), b.coeffs());
}

Multivector schouten(const LieAlg& l, const Multivector& p, const Multivector& q) {
  if (p.dim() != l.dim() || q.dim() != l.dim()) throw DimensionError("schouten arguments over another algebra");
  if (p.grade() == 0 || q.grade() == 0 || p.grade() > 2 || q.grade() > 2)
    throw Error("schouten bracket supports grades 1 and 2 only");
  std::size_t n = l.dim();
  Multivector out(n, p.grade() + q.grade() - 1);
  const auto& sp = index_sets(n, p.grade());
  const auto& sq = index_sets(n, q.grade());
  for (std::size_t r = 0; r < sp.size(); ++r) {
    if (p.coeffs()[r].is_zero()) continue;
    for (std::size_t s = 0; s < sq.size(); ++s) {
      if (q.coeffs()[s].is_zero()) continue;
      Scalar coef = p.coeffs()[r] * q.coeffs()[s];
      const IndexSet& xs = sp[r];
      const IndexSet& ys = sq[s];
      for (std::size_t a = 0; a < xs.size(); ++a)
        for (std::size_t b = 0; b < ys.size(); ++b) {
          Scalar sign_coef = ((a + b) % 2 == 0) ? coef : -coef;
          for (std::size_t k = 0; k < n; ++k) {
            const Scalar& ck = l.c(xs[a], ys[b], k);
            if (ck.is_zero()) continue;
            IndexSet seq{k};
            for (std::size_t t = 0; t < xs.size(); ++t)
              if (t != a) seq.push_back(xs[t]);
            for (std::size_t t = 0; t < ys.size(); ++t)
              if (t != b) seq.push_back(ys[t]);
            out.add_term(std::move(seq), sign_coef * ck);
          }
        }
    }
  }
  return out;
}

namespace {

Multivector ce_diff_basis(const LieAlg& dual, std::size_t k) {
  std::size_t n = dual.dim();
  Multivector d(n, 2);
  const auto& sets = index_sets(n, 2);
  Vec coeffs(sets.size());
  for (std::size_t r = 0; r < sets.size(); ++r) coeffs[r] = -dual.c(sets[r][0], sets[r][1], k);
  return Multivector::from_coeffs(n, 2, std::move(coeffs));
}

}  // namespace

Multivector ce_diff(const LieAlg& dual, const Multivector& p) {
  std::size_t n = dual.dim();
  if (p.dim() != n) throw DimensionError("ce_diff argument over another space");
  switch (p.grade()) {
    case 0:
      return Multivector(n, 1);
    case 1: {
      Multivector out(n, 2);
      for (std::size_t k = 0; k < n; ++k)
        if (!p.coeffs()[k].is_zero()) out += p.coeffs()[k] * ce_diff_basis(dual, k);
      return out;
    }
    case 2: {
      Multivector out(n, 3);
      const auto& sets = index_sets(n, 2);
      for (std::size_t r = 0; r < sets.size(); ++r) {
        if (p.coeffs()[r].is_zero()) continue;
        std::size_t i = sets[r][0], j = sets[r][1];
        Multivector ei = Multivector::basis(n, {i}), ej = Multivector::basis(n, {j});
        Multivector term = wedge(ce_diff_basis(dual, i), ej) - wedge(ei, ce_diff_basis(dual, j));
        out += p.coeffs()[r] * term;
      }
      return out;
    }
    default:
      throw Error("ce_diff supports grades 0 to 2");
  }
}

Multivector derivation_action(const Mat& d, const Multivector& p) {
  if (!d.square() || d.rows() != p.dim()) throw DimensionError("derivation does not act on this space");
  Multivector out(p.dim(), p.grade());
  const auto& sets = index_sets(p.dim(), p.grade());
  for (std::size_t r = 0; r < sets.size(); ++r) {
    if (p.coeffs()[r].is_zero()) continue;
    for (std::size_t a = 0; a < sets[r].size(); ++a)
      for (std::size_t k = 0; k < p.dim(); ++k) {
        const Scalar& dk = d(k, sets[r][a]);
        if (dk.is_zero()) continue;
        IndexSet seq = sets[r];
        seq[a] = k;
        out.add_term(std::move(seq), p.coeffs()[r] * dk);
      }
  }
  return out;
}

Multivector diagonal_action(const Mat& a, const Multivector& p) {
  if (!a.square() || a.rows() != p.dim()) throw DimensionError("map does not act on this space");
  Multivector out(p.dim(), p.grade());
  const auto& sets = index_sets(p.dim(), p.grade());
  for (std::size_t r = 0; r < sets.size(); ++r) {
    if (p.coeffs()[r].is_zero()) continue;
    IndexSet seq(sets[r].size());
    auto rec = [&](auto&& self, std::size_t slot, Scalar coef) -> void {
      if (slot == seq.size()) {
        out.add_term(seq, coef);
        return;
      }
      for (std::size_t k = 0; k < p.dim(); ++k) {
        const Scalar& ak = a(k, sets[r][slot]);
        if (ak.is_zero()) continue;
        seq[slot] = k;
        self(self, slot + 1, coef * ak);
      }
    };
    rec(rec, 0, p.coeffs()[r]);
  }
  return out;
}

Subspace wedge_span(const Subspace& h, std::size_t grade) {
  std::size_t n = h.ambient();
  if (grade == 0) throw Error("wedge_span needs grade >= 1");
  std::vector<Vec> rows;
  for (const auto& v : h.vectors()) {
    Multivector hv = Multivector::from_vector(v);
    for (const auto& set : index_sets(n, grade - 1)) {
      Multivector w = wedge(hv, Multivector::basis(n, set));
      if (!w.is_zero()) rows.push_back(w.coeffs());
    }
  }
  return Subspace::span(rows, binom(n, grade));
}

Mat one_wedge_phi(const Multivector& w, const Mat& phi) {
  if (w.grade() != 2 || phi.cols() != w.dim()) throw DimensionError("one_wedge_phi shape");
  Mat m(w.dim(), phi.rows());
  const auto& sets = index_sets(w.dim(), 2);
  for (std::size_t r = 0; r < sets.size(); ++r) {
    const Scalar& c = w.coeffs()[r];
    if (c.is_zero()) continue;
    std::size_t i = sets[r][0], j = sets[r][1];
    for (std::size_t k = 0; k < phi.rows(); ++k) {
      m(i, k) += c * phi(k, j);
      m(j, k) -= c * phi(k, i);
    }
  }
  return m;
}

Mat phi_wedge_one(const Multivector& w, const Mat& phi) {
  if (w.grade() != 2 || phi.cols() != w.dim()) throw DimensionError("phi_wedge_one shape");
  Mat m(phi.rows(), w.dim());
  const auto& sets = index_sets(w.dim(), 2);
  for (std::size_t r = 0; r < sets.size(); ++r) {
    const Scalar& c = w.coeffs()[r];
    if (c.is_zero()) continue;
    std::size_t i = sets[r][0], j = sets[r][1];
    for (std::size_t k = 0; k < phi.rows(); ++k) {
      m(k, j) += c * phi(k, i);
      m(k, i) -= c * phi(k, j);
    }
  }
  return m;
}

}  // namespace crossmod
