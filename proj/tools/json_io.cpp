#include "json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace crossmod::cli {

namespace {

std::string key_path(const std::string& base, std::string_view key) { return base + "." + std::string(key); }

std::string index_path(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

// Rethrows a library error raised while building an object as a schema error at n.
template <class F>
auto building(const Node& n, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    n.fail(e.what());
  }
}

}  // namespace

bool Node::has(std::string_view key) const { return value_->is_object() && value_->contains(key); }

Node Node::at(std::string_view key) const {
  if (!value_->is_object()) fail("expected an object");
  auto it = value_->find(key);
  if (it == value_->end()) throw SchemaError(key_path(path_, key), "missing required field");
  return Node(*it, key_path(path_, key));
}

std::optional<Node> Node::find(std::string_view key) const {
  if (!has(key)) return std::nullopt;
  return at(key);
}

Node Node::operator[](std::size_t i) const {
  if (!value_->is_array()) fail("expected an array");
  if (i >= value_->size()) fail("index " + std::to_string(i) + " out of range");
  return Node((*value_)[i], index_path(path_, i));
}

std::size_t Node::size() const {
  if (!value_->is_array()) fail("expected an array");
  return value_->size();
}

long Node::integer() const {
  if (!value_->is_number_integer()) fail("expected an integer");
  return value_->get<long>();
}

int Node::index(std::size_t bound) const {
  long v = integer();
  if (v < 0 || static_cast<std::size_t>(v) >= bound)
    fail("index " + std::to_string(v) + " outside [0, " + std::to_string(bound) + ")");
  return static_cast<int>(v);
}

std::size_t Node::count() const {
  long v = integer();
  if (v < 0) fail("expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

std::string Node::string() const {
  if (!value_->is_string()) fail("expected a string");
  return value_->get<std::string>();
}

Scalar Node::scalar(Field f) const {
  if (!value_->is_string()) fail("expected a rational string such as \"-3/4\"");
  try {
    return Scalar::parse(value_->get<std::string>(), f);
  } catch (const std::exception& e) {
    fail(std::string("bad scalar: ") + e.what());
  }
}

Vec Node::vec(Field f, std::optional<std::size_t> length) const {
  const std::size_t n = size();
  if (length && n != *length) fail("expected " + std::to_string(*length) + " entries, got " + std::to_string(n));
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back((*this)[i].scalar(f));
  return v;
}

Mat Node::mat(Field f, std::optional<std::size_t> rows, std::optional<std::size_t> cols) const {
  const std::size_t r = size();
  if (rows && r != *rows) fail("expected " + std::to_string(*rows) + " rows, got " + std::to_string(r));
  if (r == 0) return Mat(0, cols.value_or(0));
  const std::size_t c = (*this)[0].size();
  if (cols && c != *cols) fail("expected " + std::to_string(*cols) + " columns, got " + std::to_string(c));
  std::vector<Scalar> entries;
  for (std::size_t i = 0; i < r; ++i) {
    Vec row = (*this)[i].vec(f, c);
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Mat(r, c, std::move(entries));
}

std::vector<int> Node::indices(std::size_t bound) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i].index(bound));
  return out;
}

void Node::expect_schema(std::string_view name) const {
  if (!value_->is_object()) fail("expected an object");
  if (auto s = find("schema")) {
    std::string tag = s->string();
    std::string want = std::string(name) + "/1";
    if (tag != want) s->fail("expected schema \"" + want + "\", got \"" + tag + "\"");
  }
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("$", "cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  Document doc;
  doc.bytes = buf.str();
  doc.name = path;
  try {
    doc.json = Json::parse(doc.bytes);
  } catch (const Json::parse_error& e) {
    throw SchemaError("$", std::string("malformed JSON: ") + e.what());
  }
  return doc;
}

Field field_of(const Node& n) {
  auto f = n.find("field");
  if (!f) return Field::rationals();
  return building(*f, [&] { return Field::parse(f->string()); });
}

// ---- Lie algebras and crossed modules ----

namespace {

std::vector<std::string> labels_of(const Node& n, std::size_t dim) {
  std::vector<std::string> out;
  auto l = n.find("labels");
  if (!l) return out;
  if (l->size() != dim) l->fail("expected " + std::to_string(dim) + " labels");
  for (std::size_t i = 0; i < dim; ++i) out.push_back((*l)[i].string());
  return out;
}

}  // namespace

LieAlg parse_lie_algebra(const Node& n, Field f) {
  n.expect_schema("lie_algebra");
  const std::size_t dim = n.at("dim").count();
  std::vector<LieAlg::Entry> entries;
  if (auto br = n.find("brackets")) {
    for (std::size_t t = 0; t < br->size(); ++t) {
      Node triple = (*br)[t];
      if (triple.size() != 3) triple.fail("expected [i, j, [coefficients]]");
      std::size_t i = static_cast<std::size_t>(triple[0].index(dim));
      std::size_t j = static_cast<std::size_t>(triple[1].index(dim));
      if (i >= j) triple.fail("bracket pairs must have i < j");
      for (const auto& e : entries)
        if (e.i == i && e.j == j) triple.fail("duplicate bracket pair");
      entries.push_back({i, j, triple[2].vec(f, dim)});
    }
  }
  return building(n, [&] { return LieAlg::from_brackets(dim, entries, labels_of(n, dim)); });
}

LieCrossedModule parse_lie_cm(const Node& n, Field f) {
  n.expect_schema("crossed_module");
  if (auto k = n.find("kind"); k && k->string() != "lie") k->fail("expected kind \"lie\"");
  LieAlg g0 = parse_lie_algebra(n.at("g0"), f);
  LieAlg g1 = parse_lie_algebra(n.at("g1"), f);
  const std::size_t d0 = g0.dim(), d1 = g1.dim();
  Mat phi(d0, d1);
  if (auto p = n.find("phi")) phi = p->mat(f, d0, d1);
  std::vector<Scalar> act(d0 * d1 * d1);
  if (auto a = n.find("action")) {
    std::vector<bool> seen(d0 * d1, false);
    for (std::size_t t = 0; t < a->size(); ++t) {
      Node triple = (*a)[t];
      if (triple.size() != 3) triple.fail("expected [a, b, [coefficients of x_a |> u_b]]");
      std::size_t x = static_cast<std::size_t>(triple[0].index(d0));
      std::size_t u = static_cast<std::size_t>(triple[1].index(d1));
      if (seen[x * d1 + u]) triple.fail("duplicate action pair");
      seen[x * d1 + u] = true;
      Vec v = triple[2].vec(f, d1);
      for (std::size_t c = 0; c < d1; ++c) act[(x * d1 + u) * d1 + c] = v[c];
    }
  }
  return building(n, [&] { return LieCrossedModule(g0, g1, phi, act); });
}

// ---- finite groups and crossed modules ----

FinGroup parse_group(const Node& n) {
  n.expect_schema("group");
  if (auto c = n.find("cyclic")) {
    std::size_t order = c->count();
    if (order == 0) c->fail("order must be positive");
    return FinGroup::cyclic(order);
  }
  if (auto p = n.find("permutations")) {
    if (p->size() == 0) p->fail("expected at least one generator");
    const std::size_t degree = (*p)[0].size();
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < p->size(); ++i) {
      Perm perm = (*p)[i].indices(degree);
      if ((*p)[i].size() != degree) (*p)[i].fail("generators must have equal degree");
      std::vector<bool> hit(degree, false);
      for (int v : perm) hit[static_cast<std::size_t>(v)] = true;
      for (bool b : hit)
        if (!b) (*p)[i].fail("not a permutation");
      gens.push_back(perm);
    }
    return building(*p, [&] { return FinGroup::from_permutations(gens, degree); });
  }
  Node t = n.at("table");
  const std::size_t order = t.size();
  std::vector<std::vector<int>> table;
  for (std::size_t i = 0; i < order; ++i) {
    if (t[i].size() != order) t[i].fail("expected " + std::to_string(order) + " entries");
    table.push_back(t[i].indices(order));
  }
  return building(t, [&] { return FinGroup::from_table(table, labels_of(n, order)); });
}

FinCrossedModule parse_fin_cm(const Node& n) {
  n.expect_schema("crossed_module");
  if (auto k = n.find("kind"); k && k->string() != "finite") k->fail("expected kind \"finite\"");
  FinCrossedModule cm;
  cm.g0 = parse_group(n.at("g0"));
  cm.g1 = parse_group(n.at("g1"));
  const std::size_t n0 = cm.g0.order(), n1 = cm.g1.order();
  Node phi = n.at("phi");
  if (phi.size() != n1) phi.fail("expected " + std::to_string(n1) + " entries (one per element of g1)");
  cm.phi = phi.indices(n0);
  if (auto a = n.find("action")) {
    if (a->size() != n0) a->fail("expected " + std::to_string(n0) + " rows (one per element of g0)");
    for (std::size_t i = 0; i < n0; ++i) {
      if ((*a)[i].size() != n1) (*a)[i].fail("expected " + std::to_string(n1) + " entries");
      auto row = (*a)[i].indices(n1);
      cm.act.insert(cm.act.end(), row.begin(), row.end());
    }
  } else {
    for (std::size_t i = 0; i < n0; ++i)
      for (std::size_t j = 0; j < n1; ++j) cm.act.push_back(static_cast<int>(j));
  }
  return cm;
}

// ---- matrix crossed modules ----

namespace {

std::vector<Mat> mat_list(const Node& n, std::size_t rows, std::size_t cols) {
  std::vector<Mat> out;
  for (std::size_t i = 0; i < n.size(); ++i) out.push_back(n[i].mat(Field::rationals(), rows, cols));
  return out;
}

}  // namespace

MatCrossedModule parse_mat_cm(const Node& n) {
  n.expect_schema("crossed_module");
  if (auto k = n.find("kind"); k && k->string() != "matrix") k->fail("expected kind \"matrix\"");
  Node mode = n.at("mode");
  const std::size_t size = n.at("size").count();
  if (size == 0) n.at("size").fail("size must be positive");
  std::vector<Mat> g0_basis = mat_list(n.at("g0_basis"), size, size);
  Node samples = n.at("samples");
  std::vector<Mat> g0s = mat_list(samples.at("g0"), size, size);
  std::string m = mode.string();
  if (m == "conjugation") {
    std::vector<Mat> g1_basis = mat_list(n.at("g1_basis"), size, size);
    return MatCrossedModule::conjugation(size, g0_basis, g1_basis, g0s, mat_list(samples.at("g1"), size, size));
  }
  if (m == "linear") {
    if (n.has("g1_basis")) n.at("g1_basis").fail("linear mode uses the standard basis; omit g1_basis");
    return MatCrossedModule::linear(size, g0_basis, g0s, mat_list(samples.at("g1"), size, 1));
  }
  mode.fail("expected \"conjugation\" or \"linear\"");
}

void apply_sample_set(const Node& n, MatCrossedModule& cm) {
  n.expect_schema("sample_set");
  cm.g0_samples = mat_list(n.at("g0"), cm.size, cm.size);
  cm.g1_samples = mat_list(n.at("g1"), cm.size, cm.mode == MatMode::linear ? 1 : cm.size);
}

// ---- bivectors, subspaces, bialgebras ----

Bivector parse_bivector(const Node& n, Field f, std::optional<std::size_t> dim) {
  n.expect_schema("bivector");
  const std::size_t d = n.at("dim").count();
  if (dim && d != *dim) n.at("dim").fail("expected dimension " + std::to_string(*dim));
  Bivector out(d, 2);
  Node terms = n.at("terms");
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    Node term = terms[t];
    if (term.size() != 3) term.fail("expected [i, j, \"coefficient\"]");
    std::size_t i = static_cast<std::size_t>(term[0].index(d));
    std::size_t j = static_cast<std::size_t>(term[1].index(d));
    if (i >= j) term.fail("bivector pairs must have i < j");
    for (const auto& p : seen)
      if (p == std::pair{i, j}) term.fail("duplicate bivector pair");
    seen.emplace_back(i, j);
    out.add_term({i, j}, term[2].scalar(f));
  }
  return out;
}

Subspace parse_subspace(const Node& n, Field f, std::optional<std::size_t> ambient) {
  n.expect_schema("subspace");
  const std::size_t a = n.at("ambient").count();
  if (ambient && a != *ambient) n.at("ambient").fail("expected ambient dimension " + std::to_string(*ambient));
  Mat rows = n.at("basis").mat(f, std::nullopt, a);
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < rows.rows(); ++i) vs.push_back(rows.row(i));
  return Subspace::span(vs, a);
}

LieBialgebra parse_bialgebra(const Node& n) {
  n.expect_schema("bialgebra");
  Field f = field_of(n);
  LieAlg g = parse_lie_algebra(n.at("g"), f);
  if (auto d = n.find("gdual")) {
    LieAlg gd = parse_lie_algebra(*d, f);
    if (gd.dim() != g.dim()) d->at("dim").fail("dual dimension differs from g");
    return {g, gd};
  }
  Node r = n.at("r_matrix");
  Bivector rm = parse_bivector(r, f, g.dim());
  return {g, building(r, [&] { return coboundary_dual(g, rm); })};
}

Lie2Bialgebra parse_2bialgebra(const Node& n) {
  n.expect_schema("two_bialgebra");
  Field f = field_of(n);
  LieCrossedModule cm = parse_lie_cm(n.at("cm"), f);
  if (auto d = n.find("cmdual")) {
    LieCrossedModule dual = parse_lie_cm(*d, f);
    if (dual.dim0() != cm.dim1() || dual.dim1() != cm.dim0())
      d->fail("dual crossed module must be g0* -> g1* (dims " + std::to_string(cm.dim0()) + " -> " +
              std::to_string(cm.dim1()) + ")");
    return {cm, dual};
  }
  Node r = n.at("r_matrix");
  Bivector mu = parse_bivector(r, f, cm.dim1());
  return building(r, [&] { return coboundary_2bialgebra(cm, mu).tb; });
}

CharPair parse_char_pair(const Node& n, std::size_t dim) {
  n.expect_schema("char_pair");
  Field f = field_of(n);
  return {parse_subspace(n.at("h"), f, dim), parse_bivector(n.at("omega"), f, dim)};
}

// ---- finite 2-group inputs ----

TwoSubgroup parse_two_subgroup(const Node& n, const FinCrossedModule& cm) {
  n.expect_schema("two_subgroup");
  TwoSubgroup h{n.at("h0").indices(cm.g0.order()), n.at("h1").indices(cm.g1.order())};
  std::sort(h.h0.begin(), h.h0.end());
  std::sort(h.h1.begin(), h.h1.end());
  if (!cm.g0.is_subgroup(h.h0)) n.at("h0").fail("not a subgroup of g0");
  if (!cm.g1.is_subgroup(h.h1)) n.at("h1").fail("not a subgroup of g1");
  return h;
}

FinGroupoid parse_groupoid(const Node& n) {
  n.expect_schema("groupoid");
  Node kind = n.at("kind");
  std::string k = kind.string();
  if (k == "pair") return pair_groupoid(n.at("points").count());
  if (k == "discrete") return discrete_groupoid(n.at("points").count());
  if (k == "group") return group_as_groupoid(parse_group(n.at("group")));
  if (k != "explicit") kind.fail("expected \"pair\", \"discrete\", \"group\" or \"explicit\"");
  FinGroupoid p;
  p.objects = n.at("objects").count();
  const std::size_t arrows = n.at("source").size();
  p.source = n.at("source").indices(p.objects);
  Node target = n.at("target");
  if (target.size() != arrows) target.fail("expected one entry per arrow");
  p.target = target.indices(p.objects);
  Node unit = n.at("unit");
  if (unit.size() != p.objects) unit.fail("expected one entry per object");
  p.unit = unit.indices(arrows);
  Node inv = n.at("inverse");
  if (inv.size() != arrows) inv.fail("expected one entry per arrow");
  p.inverse = inv.indices(arrows);
  Node mult = n.at("mult");
  if (mult.size() != arrows) mult.fail("expected one row per arrow");
  for (std::size_t a = 0; a < arrows; ++a) {
    Node row = mult[a];
    if (row.size() != arrows) row.fail("expected one entry per arrow");
    for (std::size_t b = 0; b < arrows; ++b) {
      long v = row[b].integer();
      if (v < -1 || v >= static_cast<long>(arrows)) row[b].fail("expected an arrow index or -1");
      p.mult.push_back(static_cast<int>(v));
    }
  }
  Report r = validate_groupoid(p);
  if (!r.ok()) n.fail("not a groupoid (" + r.first_failure() + ")");
  return p;
}

Fin2GroupAction parse_action(const Node& n, const Fin2Group& g) {
  n.expect_schema("action_table");
  Node kind = n.at("kind");
  std::string k = kind.string();
  if (k == "left_translation") return left_translation(g);
  if (k == "pair") {
    Node sigma = n.at("sigma");
    const std::size_t n0 = g.cm.g0.order();
    if (sigma.size() != n0) sigma.fail("expected one permutation per element of g0");
    const std::size_t points = sigma[0].size();
    std::vector<Perm> perms;
    for (std::size_t i = 0; i < n0; ++i) {
      if (sigma[i].size() != points) sigma[i].fail("permutations must have equal degree");
      perms.push_back(sigma[i].indices(points));
    }
    return building(sigma, [&] { return pair_groupoid_action(g, perms); });
  }
  FinGroupoid space = parse_groupoid(n.at("groupoid"));
  if (k == "trivial") return trivial_action(g, space);
  if (k != "table") kind.fail("expected \"left_translation\", \"pair\", \"trivial\" or \"table\"");
  Node table = n.at("table");
  if (table.size() != g.order()) table.fail("expected one row per element of G0 x G1 (" + std::to_string(g.order()) + ")");
  Fin2GroupAction a{space, {}};
  for (std::size_t e = 0; e < g.order(); ++e) {
    if (table[e].size() != space.arrows()) table[e].fail("expected one entry per arrow");
    auto row = table[e].indices(space.arrows());
    a.table.insert(a.table.end(), row.begin(), row.end());
  }
  return a;
}

// ---- 2-vector spaces and representations ----

TwoVectSpace parse_two_vector_space(const Node& n) {
  n.expect_schema("two_vector_space");
  Field f = field_of(n);
  const std::size_t d1 = n.at("dim1").count(), d0 = n.at("dim0").count();
  Mat phi(d0, d1);
  if (auto p = n.find("phi")) phi = p->mat(f, d0, d1);
  return building(n, [&] { return TwoVectSpace::make(phi, f); });
}

Rep parse_rep(const Node& n, const TwoVectSpace& v, const FinCrossedModule& cm) {
  n.expect_schema("representation");
  Rep rep;
  Node s0 = n.at("sigma0");
  if (s0.size() != cm.g0.order()) s0.fail("expected one entry per element of g0");
  for (std::size_t i = 0; i < s0.size(); ++i)
    rep.sigma0.push_back({s0[i].at("a0").mat(v.field, v.dim0, v.dim0), s0[i].at("a1").mat(v.field, v.dim1, v.dim1)});
  Node s1 = n.at("sigma1");
  if (s1.size() != cm.g1.order()) s1.fail("expected one entry per element of g1");
  for (std::size_t i = 0; i < s1.size(); ++i) rep.sigma1.push_back({s1[i].mat(v.field, v.dim1, v.dim0)});
  return rep;
}

std::string crossed_module_kind(const Node& n) {
  n.expect_schema("crossed_module");
  Node k = n.at("kind");
  std::string kind = k.string();
  if (kind != "lie" && kind != "finite" && kind != "matrix") k.fail("expected \"lie\", \"finite\" or \"matrix\"");
  return kind;
}

// ---- serialization ----

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json to_json(const Mat& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

namespace {

Json lie_block(const LieAlg& l) {
  Json out;
  out["dim"] = l.dim();
  if (!l.labels().empty()) out["labels"] = l.labels();
  Json br = Json::array();
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      Vec v = l.bracket_basis(i, j);
      if (!is_zero(v)) br.push_back(Json::array({i, j, to_json(v)}));
    }
  out["brackets"] = br;
  return out;
}

Json lie_cm_block(const LieCrossedModule& cm) {
  Json out;
  out["kind"] = "lie";
  out["g0"] = lie_block(cm.g0());
  out["g1"] = lie_block(cm.g1());
  out["phi"] = to_json(cm.phi());
  Json act = Json::array();
  for (std::size_t a = 0; a < cm.dim0(); ++a)
    for (std::size_t b = 0; b < cm.dim1(); ++b) {
      Vec v(cm.act_tensor().begin() + static_cast<std::ptrdiff_t>((a * cm.dim1() + b) * cm.dim1()),
            cm.act_tensor().begin() + static_cast<std::ptrdiff_t>((a * cm.dim1() + b + 1) * cm.dim1()));
      if (!is_zero(v)) act.push_back(Json::array({a, b, to_json(v)}));
    }
  out["action"] = act;
  return out;
}

Json group_block(const FinGroup& g) {
  Json out;
  out["table"] = g.table();
  return out;
}

Json with_schema(const std::string& schema, const Json& body) {
  Json out;
  out["schema"] = schema + "/1";
  for (const auto& [k, v] : body.items()) out[k] = v;
  return out;
}

}  // namespace

Json to_json(const LieAlg& l) { return with_schema("lie_algebra", lie_block(l)); }

Json to_json(const LieCrossedModule& cm) { return with_schema("crossed_module", lie_cm_block(cm)); }

Json to_json(const FinGroup& g) { return with_schema("group", group_block(g)); }

Json to_json(const FinCrossedModule& cm) {
  Json out;
  out["kind"] = "finite";
  out["g0"] = group_block(cm.g0);
  out["g1"] = group_block(cm.g1);
  out["phi"] = cm.phi;
  Json act = Json::array();
  for (std::size_t a = 0; a < cm.g0.order(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < cm.g1.order(); ++b) row.push_back(cm.act_on(static_cast<int>(a), static_cast<int>(b)));
    act.push_back(row);
  }
  out["action"] = act;
  return with_schema("crossed_module", out);
}

Json to_json(const MatCrossedModule& cm) {
  auto list = [](const std::vector<Mat>& ms) {
    Json out = Json::array();
    for (const auto& m : ms) out.push_back(to_json(m));
    return out;
  };
  Json out;
  out["kind"] = "matrix";
  out["mode"] = to_string(cm.mode);
  out["size"] = cm.size;
  out["g0_basis"] = list(cm.g0_basis);
  if (cm.mode == MatMode::conjugation) out["g1_basis"] = list(cm.g1_basis);
  out["samples"] = {{"g0", list(cm.g0_samples)}, {"g1", list(cm.g1_samples)}};
  return with_schema("crossed_module", out);
}

Json to_json(const Multivector& m) {
  if (m.grade() != 2) throw PreconditionError("only bivectors have a JSON schema");
  Json terms = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i + 1; j < m.dim(); ++j) {
      const Scalar& c = m.coeff({i, j});
      if (!c.is_zero()) terms.push_back(Json::array({i, j, c.str()}));
    }
  return with_schema("bivector", Json{{"dim", m.dim()}, {"terms", terms}});
}

Json to_json(const Subspace& s) {
  return with_schema("subspace", Json{{"ambient", s.ambient()}, {"basis", to_json(s.basis())}});
}

Json to_json(const LieBialgebra& b) {
  return with_schema("bialgebra", Json{{"g", lie_block(b.g)}, {"gdual", lie_block(b.gdual)}});
}

Json to_json(const Lie2Bialgebra& tb) {
  return with_schema("two_bialgebra", Json{{"cm", lie_cm_block(tb.cm)}, {"cmdual", lie_cm_block(tb.cmdual)}});
}

Json to_json(const TwoSubgroup& h) { return with_schema("two_subgroup", Json{{"h0", h.h0}, {"h1", h.h1}}); }

Json to_json(const FinGroupoid& p) {
  Json mult = Json::array();
  for (std::size_t a = 0; a < p.arrows(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < p.arrows(); ++b) row.push_back(p.compose(static_cast<int>(a), static_cast<int>(b)));
    mult.push_back(row);
  }
  return with_schema("groupoid", Json{{"kind", "explicit"},
                                      {"objects", p.objects},
                                      {"source", p.source},
                                      {"target", p.target},
                                      {"unit", p.unit},
                                      {"inverse", p.inverse},
                                      {"mult", mult}});
}

namespace {

// Field entries as plain representatives; the field tag of the space reinterprets them.
Json plain(const Mat& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& s = m(i, j);
      row.push_back(s.modulus() ? std::to_string(s.residue_value()) : s.str());
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace

Json to_json(const TwoVectSpace& v) {
  return with_schema("two_vector_space",
                     Json{{"field", v.field.name()}, {"dim1", v.dim1}, {"dim0", v.dim0}, {"phi", plain(v.phi)}});
}

Json to_json(const Rep& rep) {
  Json s0 = Json::array(), s1 = Json::array();
  for (const auto& a : rep.sigma0) s0.push_back({{"a0", plain(a.a0)}, {"a1", plain(a.a1)}});
  for (const auto& g : rep.sigma1) s1.push_back(plain(g.gamma));
  return with_schema("representation", Json{{"sigma0", s0}, {"sigma1", s1}});
}

}  // namespace crossmod::cli
