#include "crossmod/fin2grp.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>

namespace crossmod {

namespace {

using std::to_string;

std::size_t sz(int v) { return static_cast<std::size_t>(v); }
int idx(std::size_t v) { return static_cast<int>(v); }

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int a) {
    while (parent_[sz(a)] != a) {
      parent_[sz(a)] = parent_[sz(parent_[sz(a)])];
      a = parent_[sz(a)];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[sz(b)] = a;
  }
  /// Class ids numbered in order of each class's smallest member.
  std::vector<int> classes(std::size_t& count) {
    std::vector<int> id(parent_.size(), -1), out(parent_.size());
    count = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      int r = find(idx(i));
      if (id[sz(r)] < 0) id[sz(r)] = idx(count++);
      out[i] = id[sz(r)];
    }
    return out;
  }

 private:
  std::vector<int> parent_;
};

std::vector<int> first_members(const std::vector<int>& cls, std::size_t count) {
  std::vector<int> rep(count, -1);
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (rep[sz(cls[i])] < 0) rep[sz(cls[i])] = idx(i);
  return rep;
}

std::vector<char> mask(std::size_t n, const std::vector<int>& members) {
  std::vector<char> m(n, 0);
  for (int a : members) m[sz(a)] = 1;
  return m;
}

std::string cycles(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == idx(i)) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = sz(p[j])) {
      seen[j] = 1;
      if (j != i) out += " ";
      out += to_string(j);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::string join(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + "]";
}

// Quotient groupoid assembled from representative-level data. Every value is
// recorded per representative; disagreements inside a class are failures.
class Assembler {
 public:
  Assembler(std::size_t arrows, std::size_t objects, Report& rep)
      : n_(arrows), objects_(objects), rep_(rep), src_(arrows, -1), tgt_(arrows, -1), mult_(arrows * arrows, -1) {}

  void source(int a, int x) { record(src_[sz(a)], x, "source_well_defined", a); }
  void target(int a, int x) { record(tgt_[sz(a)], x, "target_well_defined", a); }
  void product(int a, int b, int c) {
    int& slot = mult_[sz(a) * n_ + sz(b)];
    if (slot >= 0 && slot != c) {
      rep_.fail("product_well_defined", {{"a", to_string(a)}, {"b", to_string(b)}, {"first", to_string(slot)},
                                         {"other", to_string(c)}});
      return;
    }
    slot = c;
  }

  FinGroupoid finish() {
    FinGroupoid p;
    p.objects = objects_;
    p.source = src_;
    p.target = tgt_;
    for (std::size_t a = 0; a < n_; ++a)
      if (src_[a] < 0 || tgt_[a] < 0) {
        rep_.fail("endpoints_defined", {{"arrow", to_string(a)}});
        return p;
      }
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        bool composable = tgt_[a] == src_[b];
        int c = mult_[a * n_ + b];
        rep_.expect(composable == (c >= 0), composable ? "product_defined" : "product_composable", [&] {
          return Fields{{"a", to_string(a)}, {"b", to_string(b)}};
        });
        if (!composable) mult_[a * n_ + b] = -1;
      }
    p.mult = mult_;
    p.unit.assign(objects_, -1);
    for (std::size_t a = 0; a < n_; ++a)
      if (src_[a] == tgt_[a] && p.compose(idx(a), idx(a)) == idx(a)) p.unit[sz(src_[a])] = idx(a);
    for (std::size_t x = 0; x < objects_; ++x)
      rep_.expect(p.unit[x] >= 0, "unit_exists", [&] { return Fields{{"object", to_string(x)}}; });
    p.inverse.assign(n_, -1);
    if (!rep_.ok()) return p;
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b)
        if (p.compose(idx(a), idx(b)) == p.unit[sz(src_[a])]) p.inverse[a] = idx(b);
      rep_.expect(p.inverse[a] >= 0, "inverse_exists", [&] { return Fields{{"arrow", to_string(a)}}; });
    }
    if (rep_.ok()) rep_.add(validate_groupoid(p));
    return p;
  }

 private:
  void record(int& slot, int x, const char* cond, int a) {
    if (slot >= 0 && slot != x) {
      rep_.fail(cond, {{"arrow", to_string(a)}, {"first", to_string(slot)}, {"other", to_string(x)}});
      return;
    }
    slot = x;
  }

  std::size_t n_, objects_;
  Report& rep_;
  std::vector<int> src_, tgt_, mult_;
};

void require_2subgroup(const FinCrossedModule& cm, const TwoSubgroup& h) {
  Report r = check_2subgroup(cm, h);
  if (!r.ok()) throw PreconditionError("not a 2-subgroup: " + r.first_failure());
}

// Right cosets g <> (H0 |x H1) in G0 |x G1, and g0 H0 in G0.
std::vector<int> coset_classes(const Fin2Group& g, const TwoSubgroup& h, std::size_t& count) {
  UnionFind uf(g.order());
  for (std::size_t e = 0; e < g.order(); ++e)
    for (int h0 : h.h0)
      for (int h1 : h.h1) uf.unite(idx(e), g.group.mul(idx(e), g.element(h0, h1)));
  return uf.classes(count);
}

std::vector<int> g0_classes(const FinGroup& g0, const std::vector<int>& h0, std::size_t& count) {
  UnionFind uf(g0.order());
  for (std::size_t a = 0; a < g0.order(); ++a)
    for (int k : h0) uf.unite(idx(a), g0.mul(idx(a), k));
  return uf.classes(count);
}

std::vector<std::string> class_labels(const std::vector<int>& cls, std::size_t count,
                                      const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (int r : first_members(cls, count)) out.push_back("[" + labels[sz(r)] + "]");
  return out;
}

std::vector<std::string> group_labels(const FinGroup& g) {
  std::vector<std::string> out;
  for (std::size_t a = 0; a < g.order(); ++a) out.push_back(g.label(idx(a)));
  return out;
}

// Composable arrow pairs of a groupoid.
std::vector<std::pair<int, int>> composable_pairs(const FinGroupoid& p) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < p.arrows(); ++a)
    for (std::size_t b = 0; b < p.arrows(); ++b)
      if (p.compose(idx(a), idx(b)) >= 0) out.emplace_back(idx(a), idx(b));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- groups

Report check_group_table(const std::vector<std::vector<int>>& table) {
  Report rep("group");
  std::size_t n = table.size();
  for (std::size_t a = 0; a < n; ++a) {
    bool ok = table[a].size() == n;
    for (int v : table[a]) ok = ok && v >= 0 && sz(v) < n;
    rep.expect(ok, "closed", [&] { return Fields{{"row", to_string(a)}}; });
  }
  if (!rep.ok() || n == 0) {
    rep.expect(n > 0, "nonempty");
    return rep;
  }
  auto m = [&](int a, int b) { return table[sz(a)][sz(b)]; };
  for (int a = 0; a < idx(n); ++a)
    for (int b = 0; b < idx(n); ++b)
      for (int c = 0; c < idx(n); ++c)
        rep.expect(m(m(a, b), c) == m(a, m(b, c)), "associativity", [&] {
          return Fields{{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)}};
        });
  int e = -1;
  for (int c = 0; c < idx(n) && e < 0; ++c) {
    bool ok = true;
    for (int a = 0; a < idx(n) && ok; ++a) ok = m(c, a) == a && m(a, c) == a;
    if (ok) e = c;
  }
  rep.expect(e >= 0, "identity");
  if (e < 0) return rep;
  for (int a = 0; a < idx(n); ++a) {
    bool found = false;
    for (int b = 0; b < idx(n) && !found; ++b) found = m(a, b) == e && m(b, a) == e;
    rep.expect(found, "inverses", [&] { return Fields{{"a", to_string(a)}}; });
  }
  return rep;
}

FinGroup FinGroup::from_table(const std::vector<std::vector<int>>& table, std::vector<std::string> labels) {
  Report r = check_group_table(table);
  if (!r.ok()) throw PreconditionError("not a group: " + r.first_failure());
  FinGroup g;
  g.n_ = table.size();
  for (const auto& row : table) g.table_.insert(g.table_.end(), row.begin(), row.end());
  for (std::size_t c = 0; c < g.n_; ++c)
    if (table[c][c] == idx(c)) g.id_ = idx(c);  // the only idempotent
  g.inv_.assign(g.n_, 0);
  for (std::size_t a = 0; a < g.n_; ++a)
    for (std::size_t b = 0; b < g.n_; ++b)
      if (table[a][b] == g.id_) g.inv_[a] = idx(b);
  if (labels.size() != g.n_) {
    labels.clear();
    for (std::size_t a = 0; a < g.n_; ++a) labels.push_back(to_string(a));
  }
  g.labels_ = std::move(labels);
  return g;
}

FinGroup FinGroup::from_permutations(const std::vector<Perm>& generators, std::size_t degree) {
  for (const auto& p : generators) {
    Perm sorted = p;
    std::sort(sorted.begin(), sorted.end());
    Perm expect(degree);
    std::iota(expect.begin(), expect.end(), 0);
    if (sorted != expect) throw PreconditionError("generator " + join(p) + " is not a permutation of " + to_string(degree) + " points");
  }
  Perm e(degree);
  std::iota(e.begin(), e.end(), 0);
  auto compose = [](const Perm& a, const Perm& b) {  // apply b, then a
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[sz(b[i])];
    return c;
  };
  std::vector<Perm> elems{e};
  std::map<Perm, int> index{{e, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& gen : generators) {
      Perm next = compose(elems[i], gen);
      if (index.emplace(next, idx(elems.size())).second) elems.push_back(next);
    }
  std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::string> labels;
  for (const auto& p : elems) labels.push_back(cycles(p));
  FinGroup g = from_table(table, labels);
  g.perms_ = elems;
  return g;
}

FinGroup FinGroup::cyclic(std::size_t n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = idx((a + b) % n);
  return from_table(table);
}

std::vector<std::vector<int>> FinGroup::table() const {
  std::vector<std::vector<int>> t(n_);
  for (std::size_t a = 0; a < n_; ++a) t[a].assign(table_.begin() + idx(a * n_), table_.begin() + idx((a + 1) * n_));
  return t;
}

std::vector<int> FinGroup::all() const {
  std::vector<int> v(n_);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::vector<int> FinGroup::generated(const std::vector<int>& gens) const {
  std::vector<char> in(n_, 0);
  std::vector<int> out{id_};
  in[sz(id_)] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int g : gens) {
      int c = mul(out[i], g);
      if (!in[sz(c)]) {
        in[sz(c)] = 1;
        out.push_back(c);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool FinGroup::is_subgroup(const std::vector<int>& s) const {
  for (int a : s)
    if (a < 0 || sz(a) >= n_) return false;
  auto in = mask(n_, s);
  if (!in[sz(id_)]) return false;
  for (int a : s) {
    if (!in[sz(inv(a))]) return false;
    for (int b : s)
      if (!in[sz(mul(a, b))]) return false;
  }
  return true;
}

bool FinGroup::is_normal(const std::vector<int>& s) const {
  if (!is_subgroup(s)) return false;
  auto in = mask(n_, s);
  for (std::size_t g = 0; g < n_; ++g)
    for (int a : s)
      if (!in[sz(mul(mul(idx(g), a), inv(idx(g))))]) return false;
  return true;
}

// ---------------------------------------------------------------- crossed modules

Report validate_fin_cm(const FinCrossedModule& cm) {
  Report rep("validate_fin_cm");
  const FinGroup &g0 = cm.g0, &g1 = cm.g1;
  std::size_t n0 = g0.order(), n1 = g1.order();
  bool shape = cm.phi.size() == n1 && cm.act.size() == n0 * n1;
  for (int v : cm.phi) shape = shape && v >= 0 && sz(v) < n0;
  for (int v : cm.act) shape = shape && v >= 0 && sz(v) < n1;
  rep.expect(shape, "shape");
  if (!shape) return rep;
  auto l0 = [&](int a) { return g0.label(a); };
  auto l1 = [&](int b) { return g1.label(b); };
  for (int b = 0; b < idx(n1); ++b)
    for (int c = 0; c < idx(n1); ++c)
      rep.expect(cm.phi_of(g1.mul(b, c)) == g0.mul(cm.phi_of(b), cm.phi_of(c)), "phi_hom", [&] {
        return Fields{{"g1", l1(b)}, {"g1'", l1(c)}};
      });
  for (int b = 0; b < idx(n1); ++b)
    rep.expect(cm.act_on(g0.id(), b) == b, "action_identity", [&] { return Fields{{"g1", l1(b)}}; });
  for (int a = 0; a < idx(n0); ++a)
    for (int a2 = 0; a2 < idx(n0); ++a2)
      for (int b = 0; b < idx(n1); ++b)
        rep.expect(cm.act_on(g0.mul(a, a2), b) == cm.act_on(a, cm.act_on(a2, b)), "action_law", [&] {
          return Fields{{"g0", l0(a)}, {"g0'", l0(a2)}, {"g1", l1(b)}};
        });
  for (int a = 0; a < idx(n0); ++a)
    for (int b = 0; b < idx(n1); ++b)
      for (int c = 0; c < idx(n1); ++c)
        rep.expect(cm.act_on(a, g1.mul(b, c)) == g1.mul(cm.act_on(a, b), cm.act_on(a, c)), "automorphism", [&] {
          return Fields{{"g0", l0(a)}, {"g1", l1(b)}, {"g1'", l1(c)}};
        });
  for (int a = 0; a < idx(n0); ++a)
    for (int b = 0; b < idx(n1); ++b) {
      int lhs = cm.phi_of(cm.act_on(a, b)), rhs = g0.mul(g0.mul(a, cm.phi_of(b)), g0.inv(a));
      rep.expect(lhs == rhs, "equivariance", [&] {
        return Fields{{"g0", l0(a)}, {"g1", l1(b)}, {"Phi(g0|>g1)", l0(lhs)}, {"g0 Phi(g1) g0^-1", l0(rhs)}};
      });
    }
  for (int b = 0; b < idx(n1); ++b)
    for (int c = 0; c < idx(n1); ++c) {
      int lhs = cm.act_on(cm.phi_of(b), c), rhs = g1.mul(g1.mul(b, c), g1.inv(b));
      rep.expect(lhs == rhs, "peiffer", [&] {
        return Fields{{"g1", l1(b)}, {"g1'", l1(c)}, {"Phi(g1)|>g1'", l1(lhs)}, {"g1 g1' g1^-1", l1(rhs)}};
      });
    }
  return rep;
}

// ---------------------------------------------------------------- groupoids

Report validate_groupoid(const FinGroupoid& p) {
  Report rep("groupoid");
  std::size_t n = p.arrows(), m = p.objects;
  bool shape = p.target.size() == n && p.inverse.size() == n && p.unit.size() == m && p.mult.size() == n * n;
  if (shape) {
    for (std::size_t a = 0; a < n; ++a)
      shape = shape && p.source[a] >= 0 && sz(p.source[a]) < m && p.target[a] >= 0 && sz(p.target[a]) < m &&
              p.inverse[a] >= 0 && sz(p.inverse[a]) < n;
    for (int u : p.unit) shape = shape && u >= 0 && sz(u) < n;
    for (int c : p.mult) shape = shape && c >= -1 && c < idx(n);
  }
  rep.expect(shape, "shape");
  if (!shape) return rep;
  for (int a = 0; a < idx(n); ++a)
    for (int b = 0; b < idx(n); ++b) {
      int c = p.compose(a, b);
      bool composable = p.target[sz(a)] == p.source[sz(b)];
      rep.expect(composable == (c >= 0), "composable_defined", [&] { return Fields{{"a", to_string(a)}, {"b", to_string(b)}}; });
      if (c >= 0)
        rep.expect(p.source[sz(c)] == p.source[sz(a)] && p.target[sz(c)] == p.target[sz(b)], "source_target_of_product",
                   [&] { return Fields{{"a", to_string(a)}, {"b", to_string(b)}}; });
    }
  if (!rep.ok()) return rep;
  for (int a = 0; a < idx(n); ++a)
    for (int b = 0; b < idx(n); ++b) {
      int ab = p.compose(a, b);
      if (ab < 0) continue;
      for (int c = 0; c < idx(n); ++c) {
        int bc = p.compose(b, c);
        if (bc < 0) continue;
        rep.expect(p.compose(ab, c) == p.compose(a, bc), "associativity", [&] {
          return Fields{{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)}};
        });
      }
    }
  for (std::size_t x = 0; x < m; ++x) {
    int u = p.unit[x];
    rep.expect(p.source[sz(u)] == idx(x) && p.target[sz(u)] == idx(x), "units", [&] { return Fields{{"object", to_string(x)}}; });
  }
  for (int a = 0; a < idx(n); ++a) {
    int s = p.source[sz(a)], t = p.target[sz(a)], i = p.inverse[sz(a)];
    rep.expect(p.compose(p.unit[sz(s)], a) == a && p.compose(a, p.unit[sz(t)]) == a, "units",
               [&] { return Fields{{"arrow", to_string(a)}}; });
    rep.expect(p.compose(a, i) == p.unit[sz(s)] && p.compose(i, a) == p.unit[sz(t)], "inverses",
               [&] { return Fields{{"arrow", to_string(a)}}; });
  }
  return rep;
}

FinGroupoid pair_groupoid(std::size_t points) {
  FinGroupoid p;
  p.objects = points;
  std::size_t n = points * points;
  p.mult.assign(n * n, -1);
  for (std::size_t i = 0; i < points; ++i) {
    p.object_labels.push_back(to_string(i));
    p.unit.push_back(idx(i * points + i));
    for (std::size_t j = 0; j < points; ++j) {
      p.source.push_back(idx(i));
      p.target.push_back(idx(j));
      p.inverse.push_back(idx(j * points + i));
      p.arrow_labels.push_back("(" + to_string(i) + "," + to_string(j) + ")");
      for (std::size_t k = 0; k < points; ++k) p.mult[(i * points + j) * n + j * points + k] = idx(i * points + k);
    }
  }
  return p;
}

FinGroupoid discrete_groupoid(std::size_t points) {
  FinGroupoid p;
  p.objects = points;
  p.mult.assign(points * points, -1);
  for (std::size_t i = 0; i < points; ++i) {
    p.source.push_back(idx(i));
    p.target.push_back(idx(i));
    p.unit.push_back(idx(i));
    p.inverse.push_back(idx(i));
    p.mult[i * points + i] = idx(i);
    p.object_labels.push_back(to_string(i));
    p.arrow_labels.push_back("1_" + to_string(i));
  }
  return p;
}

FinGroupoid group_as_groupoid(const FinGroup& g) {
  FinGroupoid p;
  p.objects = 1;
  p.unit = {g.id()};
  p.object_labels = {"*"};
  for (std::size_t a = 0; a < g.order(); ++a) {
    p.source.push_back(0);
    p.target.push_back(0);
    p.inverse.push_back(g.inv(idx(a)));
    p.arrow_labels.push_back(g.label(idx(a)));
    for (std::size_t b = 0; b < g.order(); ++b) p.mult.push_back(g.mul(idx(a), idx(b)));
  }
  return p;
}

// ---------------------------------------------------------------- 2-groups

Fin2Group build_2group(const FinCrossedModule& cm) {
  Report r = validate_fin_cm(cm);
  if (!r.ok()) throw PreconditionError("invalid crossed module: " + r.first_failure());
  Fin2Group g;
  g.cm = cm;
  std::size_t n0 = cm.g0.order(), n1 = cm.g1.order(), n = n0 * n1;
  auto el = [&](int a, int b) { return a * idx(n1) + b; };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int g0 = 0; g0 < idx(n0); ++g0)
    for (int g1 = 0; g1 < idx(n1); ++g1) {
      labels.push_back("(" + cm.g0.label(g0) + "," + cm.g1.label(g1) + ")");
      for (int l0 = 0; l0 < idx(n0); ++l0)
        for (int l1 = 0; l1 < idx(n1); ++l1)
          table[sz(el(g0, g1))][sz(el(l0, l1))] =
              el(cm.g0.mul(g0, l0), cm.g1.mul(cm.act_on(cm.g0.inv(l0), g1), l1));
    }
  g.group = FinGroup::from_table(table, labels);

  FinGroupoid& p = g.groupoid;
  p.objects = n0;
  p.mult.assign(n * n, -1);
  p.arrow_labels = labels;
  p.object_labels = group_labels(cm.g0);
  for (int g0 = 0; g0 < idx(n0); ++g0) p.unit.push_back(el(g0, cm.g1.id()));
  for (int g0 = 0; g0 < idx(n0); ++g0)
    for (int g1 = 0; g1 < idx(n1); ++g1) {
      int t = cm.g0.mul(g0, cm.phi_of(g1));
      p.source.push_back(g0);
      p.target.push_back(t);
      p.inverse.push_back(el(t, cm.g1.inv(g1)));
      for (int k = 0; k < idx(n1); ++k) p.mult[sz(el(g0, g1)) * n + sz(el(t, k))] = el(g0, cm.g1.mul(g1, k));
    }
  return g;
}

Report check_2group(const Fin2Group& g) {
  std::size_t n = g.order();
  if (n > enumeration_guard(144))
    throw GuardError("2-group has " + to_string(n) + " elements; exhaustive checks are limited to " +
                     to_string(enumeration_guard(144)));
  Report rep("check_2group");
  rep.add(check_group_table(g.group.table()));
  rep.add(validate_groupoid(g.groupoid));
  if (!rep.ok()) return rep;
  const FinGroupoid& p = g.groupoid;
  const FinGroup& G = g.group;
  const FinGroup& g0 = g.cm.g0;
  auto lab = [&](int e) { return G.label(e); };
  for (int e = 0; e < idx(n); ++e)
    for (int f = 0; f < idx(n); ++f) {
      int ef = G.mul(e, f);
      auto w = [&] { return Fields{{"g", lab(e)}, {"g'", lab(f)}}; };
      rep.expect(p.source[sz(ef)] == g0.mul(p.source[sz(e)], p.source[sz(f)]), "source_hom", w);
      rep.expect(p.target[sz(ef)] == g0.mul(p.target[sz(e)], p.target[sz(f)]), "target_hom", w);
      rep.expect(p.inverse[sz(ef)] == G.mul(p.inverse[sz(e)], p.inverse[sz(f)]), "inverse_hom", w);
    }
  for (int x = 0; x < idx(g0.order()); ++x)
    for (int y = 0; y < idx(g0.order()); ++y)
      rep.expect(p.unit[sz(g0.mul(x, y))] == G.mul(p.unit[sz(x)], p.unit[sz(y)]), "unit_hom",
                 [&] { return Fields{{"x", g0.label(x)}, {"y", g0.label(y)}}; });
  auto pairs = composable_pairs(p);
  for (auto [a, b] : pairs)
    for (auto [c, d] : pairs) {
      int lhs = p.compose(G.mul(a, c), G.mul(b, d));
      int rhs = G.mul(p.compose(a, b), p.compose(c, d));
      rep.expect(lhs >= 0 && lhs == rhs, "interchange", [&] {
        return Fields{{"g", lab(a)}, {"l", lab(b)}, {"g'", lab(c)}, {"l'", lab(d)}};
      });
    }
  return rep;
}

// ---------------------------------------------------------------- actions

Report validate_2group_action(const Fin2Group& g, const Fin2GroupAction& a) {
  Report rep("2group_action");
  const FinGroupoid& P = a.space;
  std::size_t n = g.order(), m = P.arrows();
  bool shape = a.table.size() == n * m;
  for (int v : a.table) shape = shape && v >= 0 && sz(v) < m;
  rep.expect(shape, "shape");
  if (!shape) return rep;
  auto lab = [&](int p) { return p < idx(P.arrow_labels.size()) ? P.arrow_labels[sz(p)] : to_string(p); };
  const FinGroup& G = g.group;
  for (int p = 0; p < idx(m); ++p)
    rep.expect(a.apply(G.id(), p) == p, "identity", [&] { return Fields{{"p", lab(p)}}; });
  for (int e = 0; e < idx(n); ++e)
    for (int f = 0; f < idx(n); ++f)
      for (int p = 0; p < idx(m); ++p)
        rep.expect(a.apply(G.mul(e, f), p) == a.apply(e, a.apply(f, p)), "group_action", [&] {
          return Fields{{"g", G.label(e)}, {"g'", G.label(f)}, {"p", lab(p)}};
        });
  // Groupoid homomorphism G x P -> P: units to units, s and t compatible, products preserved.
  const FinGroupoid& GG = g.groupoid;
  auto object_image = [&](int x0, int y) { return a.apply(GG.unit[sz(x0)], P.unit[sz(y)]); };
  for (int x0 = 0; x0 < idx(GG.objects); ++x0)
    for (int y = 0; y < idx(P.objects); ++y) {
      int u = object_image(x0, y);
      rep.expect(P.source[sz(u)] == P.target[sz(u)] && P.unit[sz(P.source[sz(u)])] == u, "units_to_units",
                 [&] { return Fields{{"g0", g.cm.g0.label(x0)}, {"x", to_string(y)}}; });
    }
  if (!rep.ok()) return rep;
  for (int e = 0; e < idx(n); ++e)
    for (int p = 0; p < idx(m); ++p) {
      int q = a.apply(e, p);
      auto w = [&] { return Fields{{"g", G.label(e)}, {"p", lab(p)}}; };
      rep.expect(P.source[sz(q)] == P.source[sz(object_image(GG.source[sz(e)], P.source[sz(p)]))], "source", w);
      rep.expect(P.target[sz(q)] == P.target[sz(object_image(GG.target[sz(e)], P.target[sz(p)]))], "target", w);
    }
  auto gpairs = composable_pairs(GG);
  auto ppairs = composable_pairs(P);
  for (auto [e, f] : gpairs)
    for (auto [p, q] : ppairs) {
      int lhs = a.apply(GG.compose(e, f), P.compose(p, q));
      int rhs = P.compose(a.apply(e, p), a.apply(f, q));
      rep.expect(lhs == rhs, "groupoid_hom", [&] {
        return Fields{{"g", G.label(e)}, {"g'", G.label(f)}, {"p", lab(p)}, {"p'", lab(q)}};
      });
    }
  return rep;
}

Fin2GroupAction left_translation(const Fin2Group& g) {
  Fin2GroupAction a{g.groupoid, {}};
  for (int e = 0; e < idx(g.order()); ++e)
    for (int f = 0; f < idx(g.order()); ++f) a.table.push_back(g.group.mul(e, f));
  return a;
}

Fin2GroupAction trivial_action(const Fin2Group& g, FinGroupoid space) {
  Fin2GroupAction a{std::move(space), {}};
  for (std::size_t e = 0; e < g.order(); ++e)
    for (std::size_t p = 0; p < a.space.arrows(); ++p) a.table.push_back(idx(p));
  return a;
}

Fin2GroupAction pair_groupoid_action(const Fin2Group& g, const std::vector<Perm>& sigma) {
  if (sigma.size() != g.cm.g0.order()) throw DimensionError("sigma must give one permutation per element of G0");
  std::size_t n = sigma.empty() ? 0 : sigma.front().size();
  Fin2GroupAction a{pair_groupoid(n), {}};
  for (int e = 0; e < idx(g.order()); ++e) {
    const Perm& s1 = sigma[sz(g.part0(e))];
    const Perm& s2 = sigma[sz(g.groupoid.target[sz(e)])];
    if (s1.size() != n) throw DimensionError("sigma permutations must act on the same set");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a.table.push_back(s1[i] * idx(n) + s2[j]);
  }
  return a;
}

Report check_groupoid_iso(const FinGroupoid& from, const FinGroupoid& to, const std::vector<int>& map) {
  Report rep("groupoid_iso");
  std::size_t n = from.arrows();
  bool shape = map.size() == n && to.arrows() == n && from.objects == to.objects;
  for (int v : map) shape = shape && v >= 0 && sz(v) < to.arrows();
  rep.expect(shape, "shape", [&] {
    return Fields{{"arrows", to_string(n) + " -> " + to_string(to.arrows())},
                  {"objects", to_string(from.objects) + " -> " + to_string(to.objects)}};
  });
  if (!shape) return rep;
  std::vector<int> hit(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    int b = map[a];
    rep.expect(hit[sz(b)] < 0, "bijective", [&] { return Fields{{"arrow", to_string(a)}, {"image", to_string(b)}}; });
    hit[sz(b)] = idx(a);
  }
  std::vector<int> obj(from.objects, -1);
  auto record = [&](int x, int y, std::size_t a) {
    rep.expect(obj[sz(x)] < 0 || obj[sz(x)] == y, "object_map", [&] { return Fields{{"arrow", to_string(a)}}; });
    obj[sz(x)] = y;
  };
  for (std::size_t a = 0; a < n; ++a) {
    record(from.source[a], to.source[sz(map[a])], a);
    record(from.target[a], to.target[sz(map[a])], a);
  }
  for (int a = 0; a < idx(n); ++a)
    for (int b = 0; b < idx(n); ++b) {
      int c = from.compose(a, b);
      if (c < 0) continue;
      rep.expect(to.compose(map[sz(a)], map[sz(b)]) == map[sz(c)], "multiplicative",
                 [&] { return Fields{{"a", to_string(a)}, {"b", to_string(b)}}; });
    }
  return rep;
}

Report check_equivariant(const Fin2GroupAction& from, const Fin2GroupAction& to, const std::vector<int>& map,
                         std::size_t group_order) {
  Report rep("equivariant");
  for (int e = 0; e < idx(group_order); ++e)
    for (int p = 0; p < idx(from.space.arrows()); ++p)
      rep.expect(map[sz(from.apply(e, p))] == to.apply(e, map[sz(p)]), "equivariance",
                 [&] { return Fields{{"g", to_string(e)}, {"p", to_string(p)}}; });
  return rep;
}

// ---------------------------------------------------------------- homogeneous spaces

Report check_2subgroup(const FinCrossedModule& cm, const TwoSubgroup& h) {
  Report rep("two_subgroup");
  bool s0 = cm.g0.is_subgroup(h.h0), s1 = cm.g1.is_subgroup(h.h1);
  rep.expect(s0, "h0_subgroup", [&] { return Fields{{"h0", join(h.h0)}}; });
  rep.expect(s1, "h1_subgroup", [&] { return Fields{{"h1", join(h.h1)}}; });
  if (!s0 || !s1) return rep;
  auto in0 = mask(cm.g0.order(), h.h0), in1 = mask(cm.g1.order(), h.h1);
  for (int b : h.h1)
    rep.expect(in0[sz(cm.phi_of(b))], "phi_h1_in_h0", [&] { return Fields{{"h1", cm.g1.label(b)}}; });
  for (int a : h.h0)
    for (int b : h.h1)
      rep.expect(in1[sz(cm.act_on(a, b))], "h0_acts_on_h1",
                 [&] { return Fields{{"h0", cm.g0.label(a)}, {"h1", cm.g1.label(b)}}; });
  return rep;
}

HomogeneousSpace quotient_homogeneous(const Fin2Group& g, const TwoSubgroup& h) {
  require_2subgroup(g.cm, h);
  HomogeneousSpace out;
  out.report = Report("quotient_homogeneous");
  std::size_t na = 0, no = 0;
  out.arrow_of = coset_classes(g, h, na);
  std::vector<int> ocls = g0_classes(g.cm.g0, h.h0, no);
  out.report.expect(na * h.h0.size() * h.h1.size() == g.order(), "class_sizes", [&] {
    return Fields{{"classes", to_string(na)}, {"|H|", to_string(h.h0.size() * h.h1.size())}, {"|G|", to_string(g.order())}};
  });

  Report groupoid_rep("groupoid");
  Assembler as(na, no, groupoid_rep);
  const FinGroupoid& G = g.groupoid;
  for (std::size_t e = 0; e < g.order(); ++e) {
    as.source(out.arrow_of[e], ocls[sz(G.source[e])]);
    as.target(out.arrow_of[e], ocls[sz(G.target[e])]);
  }
  for (auto [e, f] : composable_pairs(G)) as.product(out.arrow_of[sz(e)], out.arrow_of[sz(f)], out.arrow_of[sz(G.compose(e, f))]);
  FinGroupoid quotient = as.finish();
  quotient.arrow_labels = class_labels(out.arrow_of, na, group_labels(g.group));
  quotient.object_labels = class_labels(ocls, no, group_labels(g.cm.g0));
  out.report.add(std::move(groupoid_rep));

  out.action.space = std::move(quotient);
  out.action.table.assign(g.order() * na, -1);
  for (int e = 0; e < idx(g.order()); ++e)
    for (int f = 0; f < idx(g.order()); ++f) {
      int& slot = out.action.table[sz(e) * na + sz(out.arrow_of[sz(f)])];
      int c = out.arrow_of[sz(g.group.mul(e, f))];
      out.report.expect(slot < 0 || slot == c, "action_well_defined", [&] {
        return Fields{{"g", g.group.label(e)}, {"g'", g.group.label(f)}};
      });
      slot = c;
    }
  if (!out.report.ok()) return out;
  out.report.add(validate_2group_action(g, out.action));
  std::vector<char> reached(na, 0);
  for (int e = 0; e < idx(g.order()); ++e) reached[sz(out.action.apply(e, out.arrow_of[sz(g.group.id())]))] = 1;
  out.report.expect(std::all_of(reached.begin(), reached.end(), [](char c) { return c != 0; }), "transitive");
  return out;
}

AssociatedBundle associated_bundle(const Fin2Group& g, const TwoSubgroup& h) {
  require_2subgroup(g.cm, h);
  const FinCrossedModule& cm = g.cm;
  const FinGroup &g0 = cm.g0, &g1 = cm.g1;
  std::size_t n0 = g0.order(), n1 = g1.order();
  AssociatedBundle out;
  out.report = Report("associated_bundle");
  HomogeneousSpace q = quotient_homogeneous(g, h);

  // fiber G1/H1 and the H0-action on it
  std::size_t nf = 0;
  {
    UnionFind uf(n1);
    for (int b = 0; b < idx(n1); ++b)
      for (int k : h.h1) uf.unite(b, g1.mul(b, k));
    out.fiber = uf.classes(nf);
  }
  for (int a : h.h0)
    for (int b = 0; b < idx(n1); ++b)
      for (int k : h.h1)
        out.report.expect(out.fiber[sz(cm.act_on(a, b))] == out.fiber[sz(cm.act_on(a, g1.mul(b, k)))],
                          "h0_action_on_fiber_well_defined",
                          [&] { return Fields{{"h0", g0.label(a)}, {"g1", g1.label(b)}}; });

  // pairs (g0, [g1]) modulo (g0 h0, h0^-1 |> [g1])
  std::size_t nb = 0;
  UnionFind uf(n0 * nf);
  for (int a = 0; a < idx(n0); ++a)
    for (int b = 0; b < idx(n1); ++b)
      for (int k : h.h0)
        uf.unite(a * idx(nf) + out.fiber[sz(b)], g0.mul(a, k) * idx(nf) + out.fiber[sz(cm.act_on(g0.inv(k), b))]);
  std::vector<int> bcls = uf.classes(nb);
  auto cls = [&](int a, int b) { return bcls[sz(a * idx(nf) + out.fiber[sz(b)])]; };

  std::size_t no = 0;
  std::vector<int> ocls = g0_classes(g0, h.h0, no);
  Report groupoid_rep("groupoid");
  Assembler as(nb, no, groupoid_rep);
  for (int a = 0; a < idx(n0); ++a)
    for (int b = 0; b < idx(n1); ++b) {
      int t = g0.mul(a, cm.phi_of(b));
      as.source(cls(a, b), ocls[sz(a)]);
      as.target(cls(a, b), ocls[sz(t)]);
      for (int c = 0; c < idx(n1); ++c) as.product(cls(a, b), cls(t, c), cls(a, g1.mul(b, c)));
    }
  FinGroupoid bundle = as.finish();
  HomogeneousSpace& space = out.space;
  space.report = Report("bundle");
  space.report.add(std::move(groupoid_rep));
  space.arrow_of.resize(g.order());
  for (int a = 0; a < idx(n0); ++a)
    for (int b = 0; b < idx(n1); ++b) space.arrow_of[sz(g.element(a, b))] = cls(a, b);
  {
    std::vector<std::string> labels;
    for (int r : first_members(bcls, nb)) {
      int a = r / idx(nf), f = r % idx(nf);
      int b = first_members(out.fiber, nf)[sz(f)];
      labels.push_back("[" + g0.label(a) + ",[" + g1.label(b) + "]]");
    }
    bundle.arrow_labels = labels;
    bundle.object_labels = class_labels(ocls, no, group_labels(g0));
  }

  // (l0,l1) |> [g0,[g1]] = [l0 g0, [(g0^-1 |> l1) g1]]
  space.action.space = std::move(bundle);
  space.action.table.assign(g.order() * nb, -1);
  for (int l0 = 0; l0 < idx(n0); ++l0)
    for (int l1 = 0; l1 < idx(n1); ++l1)
      for (int a = 0; a < idx(n0); ++a)
        for (int b = 0; b < idx(n1); ++b) {
          int e = g.element(l0, l1);
          int& slot = space.action.table[sz(e) * nb + sz(cls(a, b))];
          int c = cls(g0.mul(l0, a), g1.mul(cm.act_on(g0.inv(a), l1), b));
          space.report.expect(slot < 0 || slot == c, "action_well_defined", [&] {
            return Fields{{"l", g.group.label(e)}, {"g0", g0.label(a)}, {"g1", g1.label(b)}};
          });
          slot = c;
        }
  if (space.report.ok()) space.report.add(validate_2group_action(g, space.action));
  out.report.add(space.report);
  out.report.add_as("quotient", q.report);
  if (!out.report.ok()) return out;

  // theta [g0,g1] -> [g0,[g1]] and tau back, checked over every representative
  std::size_t nq = q.action.space.arrows();
  out.theta.assign(nq, -1);
  out.tau.assign(nb, -1);
  for (int e = 0; e < idx(g.order()); ++e) {
    int A = q.arrow_of[sz(e)], B = space.arrow_of[sz(e)];
    out.report.expect(out.theta[sz(A)] < 0 || out.theta[sz(A)] == B, "theta_well_defined",
                      [&] { return Fields{{"g", g.group.label(e)}}; });
    out.report.expect(out.tau[sz(B)] < 0 || out.tau[sz(B)] == A, "tau_well_defined",
                      [&] { return Fields{{"g", g.group.label(e)}}; });
    out.theta[sz(A)] = B;
    out.tau[sz(B)] = A;
  }
  if (!out.report.ok()) return out;
  for (std::size_t A = 0; A < nq; ++A)
    out.report.expect(out.tau[sz(out.theta[A])] == idx(A), "tau_theta_identity", [&] { return Fields{{"class", to_string(A)}}; });
  for (std::size_t B = 0; B < nb; ++B)
    out.report.expect(out.theta[sz(out.tau[B])] == idx(B), "theta_tau_identity", [&] { return Fields{{"class", to_string(B)}}; });
  out.report.add_as("theta_iso", check_groupoid_iso(q.action.space, space.action.space, out.theta));
  out.report.add_as("theta_equivariant", check_equivariant(q.action, space.action, out.theta, g.order()));
  return out;
}

GammaQuotient gamma_quotient(const Fin2Group& g, const TwoSubgroup& h) {
  require_2subgroup(g.cm, h);
  const FinCrossedModule& cm = g.cm;
  const FinGroup &g0 = cm.g0, &g1 = cm.g1;
  std::size_t n0 = g0.order(), n1 = g1.order();
  GammaQuotient out;
  out.report = Report("gamma_quotient");

  // Gamma = G0 x_{H0} G1: (g0, g1) ~ (g0 h0, h0^-1 |> g1)
  std::size_t ng = 0, no = 0;
  {
    UnionFind uf(g.order());
    for (int a = 0; a < idx(n0); ++a)
      for (int b = 0; b < idx(n1); ++b)
        for (int k : h.h0) uf.unite(g.element(a, b), g.element(g0.mul(a, k), cm.act_on(g0.inv(k), b)));
    out.gamma_of = uf.classes(ng);
  }
  std::vector<int> ocls = g0_classes(g0, h.h0, no);
  Report gamma_rep("gamma");
  {
    Assembler as(ng, no, gamma_rep);
    for (int a = 0; a < idx(n0); ++a)
      for (int b = 0; b < idx(n1); ++b) {
        int t = g0.mul(a, cm.phi_of(b)), c = out.gamma_of[sz(g.element(a, b))];
        as.source(c, ocls[sz(a)]);
        as.target(c, ocls[sz(t)]);
        for (int l = 0; l < idx(n1); ++l)
          as.product(c, out.gamma_of[sz(g.element(t, l))], out.gamma_of[sz(g.element(a, g1.mul(b, l)))]);
      }
    out.gamma = as.finish();
    out.gamma.arrow_labels = class_labels(out.gamma_of, ng, group_labels(g.group));
    out.gamma.object_labels = class_labels(ocls, no, group_labels(g0));
  }
  out.report.add(std::move(gamma_rep));
  if (!out.report.ok()) return out;
  const FinGroupoid& Gm = out.gamma;

  // N = G0 x_{H0} H1: a wide normal group bundle
  std::vector<char> inN(ng, 0);
  for (int a = 0; a < idx(n0); ++a)
    for (int k : h.h1) inN[sz(out.gamma_of[sz(g.element(a, k))])] = 1;
  for (std::size_t c = 0; c < ng; ++c)
    if (inN[c]) out.normal.push_back(idx(c));
  for (int n : out.normal)
    out.report.expect(Gm.source[sz(n)] == Gm.target[sz(n)], "group_bundle", [&] { return Fields{{"n", Gm.arrow_labels[sz(n)]}}; });
  for (int u : Gm.unit) out.report.expect(inN[sz(u)] != 0, "wide", [&] { return Fields{{"unit", Gm.arrow_labels[sz(u)]}}; });
  for (int n : out.normal) {
    out.report.expect(inN[sz(Gm.inverse[sz(n)])] != 0, "subgroupoid", [&] { return Fields{{"n", Gm.arrow_labels[sz(n)]}}; });
    for (int m : out.normal)
      if (int c = Gm.compose(n, m); c >= 0)
        out.report.expect(inN[sz(c)] != 0, "subgroupoid", [&] { return Fields{{"n", Gm.arrow_labels[sz(n)]}}; });
  }
  for (std::size_t c = 0; c < ng; ++c)
    for (int n : out.normal) {
      if (Gm.source[sz(n)] != Gm.source[c]) continue;
      int conj = Gm.compose(Gm.compose(Gm.inverse[c], n), idx(c));
      out.report.expect(conj >= 0 && inN[sz(conj)] != 0, "wide_normal",
                        [&] { return Fields{{"gamma", Gm.arrow_labels[c]}, {"n", Gm.arrow_labels[sz(n)]}}; });
    }
  if (!out.report.ok()) return out;

  // gamma ~ n * gamma * n'
  std::size_t nq = 0;
  {
    UnionFind uf(ng);
    for (std::size_t c = 0; c < ng; ++c)
      for (int n : out.normal) {
        if (Gm.target[sz(n)] != Gm.source[c]) continue;
        int left = Gm.compose(n, idx(c));
        for (int m : out.normal)
          if (Gm.source[sz(m)] == Gm.target[c]) uf.unite(idx(c), Gm.compose(left, m));
      }
    out.quotient_of = uf.classes(nq);
  }
  Report quotient_rep("quotient");
  {
    Assembler as(nq, no, quotient_rep);
    for (std::size_t c = 0; c < ng; ++c) {
      as.source(out.quotient_of[c], Gm.source[c]);
      as.target(out.quotient_of[c], Gm.target[c]);
    }
    for (auto [a, b] : composable_pairs(Gm))
      as.product(out.quotient_of[sz(a)], out.quotient_of[sz(b)], out.quotient_of[sz(Gm.compose(a, b))]);
    out.quotient = as.finish();
    out.quotient.arrow_labels = class_labels(out.quotient_of, nq, Gm.arrow_labels);
    out.quotient.object_labels = Gm.object_labels;
  }
  out.report.add(std::move(quotient_rep));
  if (!out.report.ok()) return out;

  HomogeneousSpace q = quotient_homogeneous(g, h);
  out.theta.assign(nq, -1);
  for (int e = 0; e < idx(g.order()); ++e) {
    int A = out.quotient_of[sz(out.gamma_of[sz(e)])], B = q.arrow_of[sz(e)];
    out.report.expect(out.theta[sz(A)] < 0 || out.theta[sz(A)] == B, "theta_well_defined",
                      [&] { return Fields{{"g", g.group.label(e)}}; });
    out.theta[sz(A)] = B;
  }
  out.report.add_as("theta_iso", check_groupoid_iso(out.quotient, q.action.space, out.theta));
  return out;
}

Report check_normal_2subgroup(const FinCrossedModule& cm, const TwoSubgroup& h) {
  Report rep("normal_2subgroup");
  rep.add(check_2subgroup(cm, h));
  if (!rep.ok()) return rep;
  rep.expect(cm.g0.is_normal(h.h0), "h0_normal", [&] { return Fields{{"h0", join(h.h0)}}; });
  auto in1 = mask(cm.g1.order(), h.h1);
  for (int a = 0; a < idx(cm.g0.order()); ++a)
    for (int b : h.h1)
      rep.expect(in1[sz(cm.act_on(a, b))] != 0, "h1_submodule",
                 [&] { return Fields{{"g0", cm.g0.label(a)}, {"h1", cm.g1.label(b)}}; });
  for (int a : h.h0)
    for (int b = 0; b < idx(cm.g1.order()); ++b)
      rep.expect(in1[sz(cm.g1.mul(cm.act_on(a, b), cm.g1.inv(b)))] != 0, "h0_acts_trivially_mod_h1",
                 [&] { return Fields{{"h0", cm.g0.label(a)}, {"g1", cm.g1.label(b)}}; });
  return rep;
}

NormalQuotient normal_quotient(const Fin2Group& g, const TwoSubgroup& h) {
  Report nr = check_normal_2subgroup(g.cm, h);
  if (!nr.ok()) throw PreconditionError("not a normal 2-subgroup: " + nr.first_failure());
  const FinCrossedModule& cm = g.cm;
  NormalQuotient out;
  out.report = Report("normal_quotient");

  auto quotient_group = [&](const FinGroup& G, const std::vector<int>& H, std::vector<int>& proj, const char* cond) {
    std::size_t k = 0;
    proj = g0_classes(G, H, k);
    std::vector<std::vector<int>> table(k, std::vector<int>(k, -1));
    for (int a = 0; a < idx(G.order()); ++a)
      for (int b = 0; b < idx(G.order()); ++b) {
        int& slot = table[sz(proj[sz(a)])][sz(proj[sz(b)])];
        int c = proj[sz(G.mul(a, b))];
        out.report.expect(slot < 0 || slot == c, cond, [&] { return Fields{{"a", G.label(a)}, {"b", G.label(b)}}; });
        slot = c;
      }
    return FinGroup::from_table(table, class_labels(proj, k, group_labels(G)));
  };
  out.cm.g0 = quotient_group(cm.g0, h.h0, out.proj0, "g0_product_well_defined");
  out.cm.g1 = quotient_group(cm.g1, h.h1, out.proj1, "g1_product_well_defined");
  std::size_t q0 = out.cm.g0.order(), q1 = out.cm.g1.order();
  out.cm.phi.assign(q1, -1);
  out.cm.act.assign(q0 * q1, -1);
  for (int b = 0; b < idx(cm.g1.order()); ++b) {
    int& slot = out.cm.phi[sz(out.proj1[sz(b)])];
    int c = out.proj0[sz(cm.phi_of(b))];
    out.report.expect(slot < 0 || slot == c, "phi_well_defined", [&] { return Fields{{"g1", cm.g1.label(b)}}; });
    slot = c;
    for (int a = 0; a < idx(cm.g0.order()); ++a) {
      int& s2 = out.cm.act[sz(out.proj0[sz(a)]) * q1 + sz(out.proj1[sz(b)])];
      int c2 = out.proj1[sz(cm.act_on(a, b))];
      out.report.expect(s2 < 0 || s2 == c2, "action_well_defined",
                        [&] { return Fields{{"g0", cm.g0.label(a)}, {"g1", cm.g1.label(b)}}; });
      s2 = c2;
    }
  }
  if (!out.report.ok()) return out;
  Report vr = validate_fin_cm(out.cm);
  out.report.add(vr);
  if (!vr.ok()) return out;

  // G/H against the quotient 2-group acted on through the projection
  Fin2Group qg = build_2group(out.cm);
  HomogeneousSpace qh = quotient_homogeneous(g, h);
  out.report.add_as("quotient_homogeneous", qh.report);
  std::size_t na = qh.action.space.arrows();
  out.iso.assign(na, -1);
  auto project = [&](int e) { return qg.element(out.proj0[sz(g.part0(e))], out.proj1[sz(g.part1(e))]); };
  for (int e = 0; e < idx(g.order()); ++e) {
    int& slot = out.iso[sz(qh.arrow_of[sz(e)])];
    out.report.expect(slot < 0 || slot == project(e), "iso_well_defined", [&] { return Fields{{"g", g.group.label(e)}}; });
    slot = project(e);
  }
  Fin2GroupAction via{qg.groupoid, {}};
  for (int e = 0; e < idx(g.order()); ++e)
    for (int x = 0; x < idx(qg.order()); ++x) via.table.push_back(qg.group.mul(project(e), x));
  out.report.add_as("iso", check_groupoid_iso(qh.action.space, qg.groupoid, out.iso));
  out.report.add_as("iso_equivariant", check_equivariant(qh.action, via, out.iso, g.order()));
  return out;
}

// ---------------------------------------------------------------- bisections

namespace {

std::vector<std::vector<int>> enumerate_bisections(const FinGroupoid& p, std::size_t limit) {
  std::vector<std::vector<int>> out;
  std::vector<int> gamma(p.objects, -1);
  std::vector<char> used(p.objects, 0);
  std::vector<std::vector<int>> outgoing(p.objects);
  for (std::size_t a = 0; a < p.arrows(); ++a) outgoing[sz(p.source[a])].push_back(idx(a));
  auto rec = [&](auto&& self, std::size_t x) -> void {
    if (x == p.objects) {
      out.push_back(gamma);
      if (out.size() > limit) throw GuardError("more than " + to_string(limit) + " bisections");
      return;
    }
    for (int a : outgoing[x]) {
      int t = p.target[sz(a)];
      if (used[sz(t)]) continue;
      used[sz(t)] = 1;
      gamma[x] = a;
      self(self, x + 1);
      used[sz(t)] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

// Groupoid automorphisms by backtracking; every assignment is closed under
// products and inverses before branching again.
class AutSearch {
 public:
  AutSearch(const FinGroupoid& p, std::size_t limit) : p_(p), limit_(limit), img_(p.arrows(), -1), pre_(p.arrows(), -1) {
    is_unit_.assign(p.arrows(), 0);
    for (int u : p.unit) is_unit_[sz(u)] = 1;
  }

  std::vector<std::vector<int>> run() {
    search(0);
    std::sort(found_.begin(), found_.end());
    return found_;
  }

 private:
  bool assign(int a, int b) {
    if (img_[sz(a)] == b) return true;
    if (img_[sz(a)] >= 0 || pre_[sz(b)] >= 0 || is_unit_[sz(a)] != is_unit_[sz(b)]) return false;
    img_[sz(a)] = b;
    pre_[sz(b)] = a;
    trail_.push_back(a);
    queue_.push_back(a);
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      int a = queue_.front();
      queue_.pop_front();
      int da = img_[sz(a)];
      if (!assign(p_.inverse[sz(a)], p_.inverse[sz(da)])) return false;
      for (std::size_t c = 0; c < p_.arrows(); ++c) {
        int dc = img_[c];
        if (dc < 0) continue;
        for (auto [x, y, dx, dy] : {std::array{a, idx(c), da, dc}, std::array{idx(c), a, dc, da}}) {
          int xy = p_.compose(x, y), dxy = p_.compose(dx, dy);
          if ((xy < 0) != (dxy < 0)) return false;
          if (xy >= 0 && !assign(xy, dxy)) return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      int a = trail_.back();
      trail_.pop_back();
      pre_[sz(img_[sz(a)])] = -1;
      img_[sz(a)] = -1;
    }
    queue_.clear();
  }

  void search(std::size_t from) {
    std::size_t a = from;
    while (a < p_.arrows() && img_[a] >= 0) ++a;
    if (a == p_.arrows()) {
      found_.push_back(img_);
      if (found_.size() > limit_) throw GuardError("more than " + to_string(limit_) + " groupoid automorphisms");
      return;
    }
    for (std::size_t b = 0; b < p_.arrows(); ++b) {
      if (pre_[b] >= 0) continue;
      std::size_t mark = trail_.size();
      if (assign(idx(a), idx(b)) && propagate()) search(a + 1);
      undo(mark);
    }
  }

  const FinGroupoid& p_;
  std::size_t limit_;
  std::vector<int> img_, pre_;
  std::vector<char> is_unit_;
  std::vector<int> trail_;
  std::deque<int> queue_;
  std::vector<std::vector<int>> found_;
};

}  // namespace

int BisectionModule::bisection_index(const std::vector<int>& b) const {
  auto it = bis_index_.find(b);
  return it == bis_index_.end() ? -1 : it->second;
}

int BisectionModule::automorphism_index(const std::vector<int>& d) const {
  auto it = aut_index_.find(d);
  return it == aut_index_.end() ? -1 : it->second;
}

BisectionModule bisection_cm(const FinGroupoid& p) {
  std::size_t guard = enumeration_guard(64);
  if (p.arrows() > guard)
    throw GuardError("groupoid has " + to_string(p.arrows()) + " arrows; bisection enumeration is limited to " + to_string(guard));
  Report vr = validate_groupoid(p);
  if (!vr.ok()) throw PreconditionError("not a groupoid: " + vr.first_failure());
  std::size_t limit = enumeration_guard(256);
  BisectionModule out;
  out.bisections = enumerate_bisections(p, limit);
  out.automorphisms = AutSearch(p, limit).run();
  for (std::size_t i = 0; i < out.bisections.size(); ++i) out.bis_index_[out.bisections[i]] = idx(i);
  for (std::size_t i = 0; i < out.automorphisms.size(); ++i) out.aut_index_[out.automorphisms[i]] = idx(i);
  std::size_t nb = out.bisections.size(), na = out.automorphisms.size();
  auto arrow_label = [&](int a) { return sz(a) < p.arrow_labels.size() ? p.arrow_labels[sz(a)] : to_string(a); };
  auto find = [](const std::map<std::vector<int>, int>& m, const std::vector<int>& v, const char* what) {
    auto it = m.find(v);
    if (it == m.end()) throw PreconditionError(std::string("enumeration is not closed: missing ") + what);
    return it->second;
  };

  // (gamma . gamma')(x) = gamma'(x) * gamma(t gamma'(x))
  std::vector<std::vector<int>> bt(nb, std::vector<int>(nb));
  std::vector<std::string> blabels;
  for (std::size_t i = 0; i < nb; ++i) {
    const auto& g = out.bisections[i];
    std::string l = "{";
    for (std::size_t x = 0; x < p.objects; ++x) l += (x ? "," : "") + arrow_label(g[x]);
    blabels.push_back(l + "}");
    for (std::size_t j = 0; j < nb; ++j) {
      const auto& h = out.bisections[j];
      std::vector<int> prod(p.objects);
      for (std::size_t x = 0; x < p.objects; ++x) prod[x] = p.compose(h[x], g[sz(p.target[sz(h[x])])]);
      bt[i][j] = find(out.bis_index_, prod, "bisection product");
    }
  }
  std::vector<std::vector<int>> at(na, std::vector<int>(na));
  std::vector<std::string> alabels;
  for (std::size_t i = 0; i < na; ++i) {
    const auto& d = out.automorphisms[i];
    alabels.push_back("D" + join(d));
    for (std::size_t j = 0; j < na; ++j) {
      std::vector<int> comp(p.arrows());
      for (std::size_t a = 0; a < p.arrows(); ++a) comp[a] = d[sz(out.automorphisms[j][a])];
      at[i][j] = find(out.aut_index_, comp, "automorphism composite");
    }
  }
  out.cm.g1 = FinGroup::from_table(bt, blabels);
  out.cm.g0 = FinGroup::from_table(at, alabels);

  // Psi(gamma)(p) = gamma(s p)^-1 * p * gamma(t p)
  for (const auto& g : out.bisections) {
    std::vector<int> psi(p.arrows());
    for (std::size_t a = 0; a < p.arrows(); ++a)
      psi[a] = p.compose(p.compose(p.inverse[sz(g[sz(p.source[a])])], idx(a)), g[sz(p.target[a])]);
    out.cm.phi.push_back(find(out.aut_index_, psi, "Psi(gamma)"));
  }
  // (D |> gamma)(x) = D(gamma(D0^-1 x))
  for (const auto& d : out.automorphisms) {
    std::vector<int> d0_inv(p.objects);
    for (std::size_t x = 0; x < p.objects; ++x) d0_inv[sz(p.source[sz(d[sz(p.unit[x])])])] = idx(x);
    for (const auto& g : out.bisections) {
      std::vector<int> moved(p.objects);
      for (std::size_t x = 0; x < p.objects; ++x) moved[x] = d[sz(g[sz(d0_inv[x])])];
      out.cm.act.push_back(find(out.bis_index_, moved, "D |> gamma"));
    }
  }
  return out;
}

Report check_cm_hom(const FinCrossedModule& from, const FinCrossedModule& to, const CMHom& f) {
  Report rep("cm_hom");
  std::size_t n0 = from.g0.order(), n1 = from.g1.order();
  bool shape = f.f0.size() == n0 && f.f1.size() == n1;
  for (int v : f.f0) shape = shape && v >= 0 && sz(v) < to.g0.order();
  for (int v : f.f1) shape = shape && v >= 0 && sz(v) < to.g1.order();
  rep.expect(shape, "shape");
  if (!shape) return rep;
  auto F0 = [&](int a) { return f.f0[sz(a)]; };
  auto F1 = [&](int b) { return f.f1[sz(b)]; };
  for (int a = 0; a < idx(n0); ++a)
    for (int c = 0; c < idx(n0); ++c)
      rep.expect(F0(from.g0.mul(a, c)) == to.g0.mul(F0(a), F0(c)), "f0_hom",
                 [&] { return Fields{{"g0", from.g0.label(a)}, {"g0'", from.g0.label(c)}}; });
  for (int b = 0; b < idx(n1); ++b)
    for (int c = 0; c < idx(n1); ++c)
      rep.expect(F1(from.g1.mul(b, c)) == to.g1.mul(F1(b), F1(c)), "f1_hom",
                 [&] { return Fields{{"g1", from.g1.label(b)}, {"g1'", from.g1.label(c)}}; });
  for (int b = 0; b < idx(n1); ++b)
    rep.expect(F0(from.phi_of(b)) == to.phi_of(F1(b)), "boundary", [&] { return Fields{{"g1", from.g1.label(b)}}; });
  for (int a = 0; a < idx(n0); ++a)
    for (int b = 0; b < idx(n1); ++b)
      rep.expect(F1(from.act_on(a, b)) == to.act_on(F0(a), F1(b)), "equivariant",
                 [&] { return Fields{{"g0", from.g0.label(a)}, {"g1", from.g1.label(b)}}; });
  return rep;
}

CMHom action_to_hom(const Fin2Group& g, const Fin2GroupAction& a, const BisectionModule& bis) {
  Report vr = validate_2group_action(g, a);
  if (!vr.ok()) throw PreconditionError("invalid 2-group action: " + vr.first_failure());
  const FinGroupoid& P = a.space;
  CMHom f;
  for (int g0 = 0; g0 < idx(g.cm.g0.order()); ++g0) {
    std::vector<int> d(P.arrows());
    for (std::size_t p = 0; p < P.arrows(); ++p) d[p] = a.apply(g.element(g0, g.cm.g1.id()), idx(p));
    int i = bis.automorphism_index(d);
    if (i < 0) throw PreconditionError("F0(" + g.cm.g0.label(g0) + ") is not a groupoid automorphism");
    f.f0.push_back(i);
  }
  for (int g1 = 0; g1 < idx(g.cm.g1.order()); ++g1) {
    std::vector<int> gamma(P.objects);
    for (std::size_t x = 0; x < P.objects; ++x) gamma[x] = a.apply(g.element(g.cm.g0.id(), g1), P.unit[x]);
    int i = bis.bisection_index(gamma);
    if (i < 0) throw PreconditionError("F1(" + g.cm.g1.label(g1) + ") is not a bisection");
    f.f1.push_back(i);
  }
  return f;
}

Fin2GroupAction hom_to_action(const Fin2Group& g, const FinGroupoid& p, const BisectionModule& bis, const CMHom& f) {
  if (f.f0.size() != g.cm.g0.order() || f.f1.size() != g.cm.g1.order()) throw DimensionError("homomorphism tables have the wrong size");
  Fin2GroupAction a{p, {}};
  for (int e = 0; e < idx(g.order()); ++e) {
    const auto& d = bis.automorphisms[sz(f.f0[sz(g.part0(e))])];
    const auto& gamma = bis.bisections[sz(f.f1[sz(g.part1(e))])];
    for (std::size_t q = 0; q < p.arrows(); ++q) a.table.push_back(d[sz(p.compose(idx(q), gamma[sz(p.target[q])]))]);
  }
  return a;
}

// ---------------------------------------------------------------- orbits

OrbitIsotropy orbit_isotropy(const Fin2Group& g, const Fin2GroupAction& a, int object) {
  const FinGroupoid& P = a.space;
  if (object < 0 || sz(object) >= P.objects) throw DimensionError("object out of range");
  OrbitIsotropy out;
  out.report = Report("orbit_isotropy");
  int ux = P.unit[sz(object)];
  std::vector<char> in(P.arrows(), 0), in_obj(P.objects, 0);
  for (int e = 0; e < idx(g.order()); ++e) in[sz(a.apply(e, ux))] = 1;
  for (int g0 = 0; g0 < idx(g.cm.g0.order()); ++g0) in_obj[sz(P.source[sz(a.apply(g.element(g0, g.cm.g1.id()), ux))])] = 1;
  for (std::size_t p = 0; p < P.arrows(); ++p)
    if (in[p]) out.orbit_arrows.push_back(idx(p));
  for (std::size_t x = 0; x < P.objects; ++x)
    if (in_obj[x]) out.orbit_objects.push_back(idx(x));
  for (int p : out.orbit_arrows)
    out.report.expect(in_obj[sz(P.source[sz(p)])] && in_obj[sz(P.target[sz(p)])], "orbit_objects",
                      [&] { return Fields{{"p", to_string(p)}}; });
  for (int p : out.orbit_arrows) {
    out.report.expect(in[sz(P.inverse[sz(p)])] != 0, "closed", [&] { return Fields{{"p", to_string(p)}}; });
    for (int q : out.orbit_arrows)
      if (int c = P.compose(p, q); c >= 0)
        out.report.expect(in[sz(c)] != 0, "closed", [&] { return Fields{{"p", to_string(p)}, {"q", to_string(q)}}; });
  }
  for (int x : out.orbit_objects) out.report.expect(in[sz(P.unit[sz(x)])] != 0, "closed", [&] { return Fields{{"x", to_string(x)}}; });
  if (!out.report.ok()) return out;

  // reindexed subgroupoid with the restricted action
  std::vector<int> new_arrow(P.arrows(), -1), new_obj(P.objects, -1);
  for (std::size_t i = 0; i < out.orbit_arrows.size(); ++i) new_arrow[sz(out.orbit_arrows[i])] = idx(i);
  for (std::size_t i = 0; i < out.orbit_objects.size(); ++i) new_obj[sz(out.orbit_objects[i])] = idx(i);
  FinGroupoid& O = out.orbit.space;
  std::size_t m = out.orbit_arrows.size();
  O.objects = out.orbit_objects.size();
  for (int x : out.orbit_objects) {
    O.unit.push_back(new_arrow[sz(P.unit[sz(x)])]);
    O.object_labels.push_back(sz(x) < P.object_labels.size() ? P.object_labels[sz(x)] : to_string(x));
  }
  for (int p : out.orbit_arrows) {
    O.source.push_back(new_obj[sz(P.source[sz(p)])]);
    O.target.push_back(new_obj[sz(P.target[sz(p)])]);
    O.inverse.push_back(new_arrow[sz(P.inverse[sz(p)])]);
    O.arrow_labels.push_back(sz(p) < P.arrow_labels.size() ? P.arrow_labels[sz(p)] : to_string(p));
    for (int q : out.orbit_arrows) {
      int c = P.compose(p, q);
      O.mult.push_back(c < 0 ? -1 : new_arrow[sz(c)]);
    }
  }
  for (int e = 0; e < idx(g.order()); ++e)
    for (int p : out.orbit_arrows) {
      int q = new_arrow[sz(a.apply(e, p))];
      out.report.expect(q >= 0, "orbit_invariant", [&] { return Fields{{"g", g.group.label(e)}, {"p", to_string(p)}}; });
      out.orbit.table.push_back(std::max(q, 0));
    }
  out.report.add(validate_groupoid(O));

  // isotropy
  for (int g0 = 0; g0 < idx(g.cm.g0.order()); ++g0)
    if (a.apply(g.element(g0, g.cm.g1.id()), ux) == ux) out.isotropy.h0.push_back(g0);
  for (int g1 = 0; g1 < idx(g.cm.g1.order()); ++g1)
    if (a.apply(g.element(g.cm.g0.id(), g1), ux) == ux) out.isotropy.h1.push_back(g1);
  out.stabilizer = raw_isotropy(a, g.order(), ux);
  std::vector<int> product;
  for (int h0 : out.isotropy.h0)
    for (int h1 : out.isotropy.h1) product.push_back(g.element(h0, h1));
  std::sort(product.begin(), product.end());
  out.report.expect(product == out.stabilizer, "stabilizer_is_product", [&] {
    return Fields{{"stabilizer", join(out.stabilizer)}, {"G0^x x G1^x", join(product)}};
  });
  Report sub = check_2subgroup(g.cm, out.isotropy);
  out.report.add(sub);
  if (!out.report.ok()) return out;

  out.quotient = quotient_homogeneous(g, out.isotropy);
  out.report.add_as("quotient", out.quotient.report);
  std::size_t nq = out.quotient.action.space.arrows();
  out.report.expect(nq == m, "sizes_match", [&] { return Fields{{"orbit", to_string(m)}, {"G/G^x", to_string(nq)}}; });
  if (nq != m) return out;
  out.iso.assign(m, -1);
  for (int e = 0; e < idx(g.order()); ++e) {
    int i = new_arrow[sz(a.apply(e, ux))], c = out.quotient.arrow_of[sz(e)];
    out.report.expect(out.iso[sz(i)] < 0 || out.iso[sz(i)] == c, "F_well_defined",
                      [&] { return Fields{{"g", g.group.label(e)}}; });
    out.iso[sz(i)] = c;
  }
  out.report.add_as("F_iso", check_groupoid_iso(O, out.quotient.action.space, out.iso));
  out.report.add_as("F_equivariant", check_equivariant(out.orbit, out.quotient.action, out.iso, g.order()));
  return out;
}

std::vector<int> raw_isotropy(const Fin2GroupAction& a, std::size_t group_order, int arrow) {
  std::vector<int> out;
  for (int e = 0; e < idx(group_order); ++e)
    if (a.apply(e, arrow) == arrow) out.push_back(e);
  return out;
}

}  // namespace crossmod
