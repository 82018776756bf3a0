#include "crossmod/twovect.hpp"

#include <cmath>
#include <map>

namespace crossmod {

namespace {

Mat in_field(const Mat& m, Field f) {
  if (!f.is_prime()) return m;
  std::vector<Scalar> entries;
  entries.reserve(m.entries().size());
  for (const Scalar& s : m.entries()) entries.push_back(s + Scalar::in(f, 0));
  return Mat(m.rows(), m.cols(), std::move(entries));
}

Mat zeros(std::size_t r, std::size_t c) { return Mat(r, c); }

/// [[a, b], [c, d]].
Mat blocks(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
  Mat m(a.rows() + c.rows(), a.cols() + b.cols());
  auto put = [&](const Mat& part, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < part.rows(); ++i)
      for (std::size_t j = 0; j < part.cols(); ++j) m(r0 + i, c0 + j) = part(i, j);
  };
  put(a, 0, 0);
  put(b, 0, a.cols());
  put(c, a.rows(), 0);
  put(d, a.rows(), a.cols());
  return m;
}

Mat sub(const Mat& m, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
  Mat out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(r0 + i, c0 + j);
  return out;
}

bool invertible(const Mat& m) { return m.square() && inverse(m).has_value(); }

std::vector<Mat> all_matrices(Field f, std::size_t rows, std::size_t cols) {
  std::vector<Mat> out;
  for (Vec& v : all_vectors(f, rows * cols)) out.emplace_back(rows, cols, std::move(v));
  return out;
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

void guard_matrices(Field f, std::size_t entries, const std::string& what) {
  if (!f.is_prime()) throw PreconditionError(what + " enumeration needs a prime field");
  double count = std::pow(static_cast<double>(f.modulus), static_cast<double>(entries));
  if (count > static_cast<double>(enumeration_guard(100000)))
    throw GuardError(what + " enumeration too large: " + std::to_string(static_cast<long long>(count)));
}

}  // namespace

namespace detail {

Vec concat(const Vec& a, const Vec& b) {
  Vec out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Vec slice(const Vec& v, std::size_t from, std::size_t count) {
  return Vec(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(from + count));
}

}  // namespace detail

using detail::concat;
using detail::slice;

TwoVectSpace TwoVectSpace::make(const Mat& phi, Field field) {
  TwoVectSpace v;
  v.dim0 = phi.rows();
  v.dim1 = phi.cols();
  v.phi = in_field(phi, field);
  v.field = field;
  return v;
}

TwoVectSpace dual_space(const TwoVectSpace& v) { return TwoVectSpace::make(v.phi.transpose(), v.field); }

bool in_gl0(const TwoVectSpace& v, const GL0Elem& a) {
  if (a.a0.rows() != v.dim0 || a.a1.rows() != v.dim1) return false;
  return invertible(a.a0) && invertible(a.a1) && a.a0 * v.phi == v.phi * a.a1;
}

bool in_gl1(const TwoVectSpace& v, const GL1Elem& g) {
  if (g.gamma.rows() != v.dim1 || g.gamma.cols() != v.dim0) return false;
  return invertible(Mat::identity(v.dim0) + v.phi * g.gamma);
}

GL1Elem gl1_identity(const TwoVectSpace& v) { return {in_field(zeros(v.dim1, v.dim0), v.field)}; }

GL1Elem gl1_mul(const TwoVectSpace& v, const GL1Elem& g, const GL1Elem& h) {
  if (g.gamma.rows() != v.dim1 || g.gamma.cols() != v.dim0 || h.gamma.rows() != v.dim1 || h.gamma.cols() != v.dim0)
    throw DimensionError("GL1 elements must be dim1 x dim0");
  return {g.gamma + h.gamma + g.gamma * v.phi * h.gamma};
}

GL1Elem gl1_inv(const TwoVectSpace& v, const GL1Elem& g) {
  // g + h + g phi h = 0  <=>  (Id + g phi) h = -g
  Mat lhs = Mat::identity(v.dim1) + g.gamma * v.phi;
  return {-(inverse_or_throw(lhs, "Id + phi gamma") * g.gamma)};
}

GL0Elem gl0_identity(const TwoVectSpace& v) {
  return {in_field(Mat::identity(v.dim0), v.field), in_field(Mat::identity(v.dim1), v.field)};
}

GL0Elem gl0_compose(const GL0Elem& a, const GL0Elem& b) { return {a.a0 * b.a0, a.a1 * b.a1}; }

GL0Elem gl0_inverse(const GL0Elem& a) {
  return {inverse_or_throw(a.a0, "A0"), inverse_or_throw(a.a1, "A1")};
}

GL0Elem gl_boundary(const TwoVectSpace& v, const GL1Elem& g) {
  return {Mat::identity(v.dim0) + v.phi * g.gamma, Mat::identity(v.dim1) + g.gamma * v.phi};
}

GL1Elem gl_act(const GL0Elem& a, const GL1Elem& g) { return {a.a1 * g.gamma * inverse_or_throw(a.a0, "A0")}; }

Mat gl_natural_action(const TwoVectSpace& v, const GL0Elem& a, const GL1Elem& g) {
  return blocks(a.a0, zeros(v.dim0, v.dim1), a.a1 * g.gamma,
                a.a1 * (Mat::identity(v.dim1) + g.gamma * v.phi));
}

std::vector<GL0Elem> all_gl0(const TwoVectSpace& v) {
  guard_matrices(v.field, v.dim0 * v.dim0 + v.dim1 * v.dim1, "GL0");
  std::vector<Mat> a0s, a1s;
  for (Mat& m : all_matrices(v.field, v.dim0, v.dim0))
    if (invertible(m)) a0s.push_back(std::move(m));
  for (Mat& m : all_matrices(v.field, v.dim1, v.dim1))
    if (invertible(m)) a1s.push_back(std::move(m));
  std::vector<GL0Elem> out;
  for (const Mat& a0 : a0s)
    for (const Mat& a1 : a1s)
      if (a0 * v.phi == v.phi * a1) out.push_back({a0, a1});
  return out;
}

std::vector<GL1Elem> all_gl1(const TwoVectSpace& v) {
  guard_matrices(v.field, v.dim1 * v.dim0, "GL1");
  std::vector<GL1Elem> out;
  for (Mat& m : all_matrices(v.field, v.dim1, v.dim0)) {
    GL1Elem g{std::move(m)};
    if (in_gl1(v, g)) out.push_back(std::move(g));
  }
  return out;
}

GLFinite gl_finite(const TwoVectSpace& v) {
  GLFinite out;
  out.gl0 = all_gl0(v);
  out.gl1 = all_gl1(v);
  std::map<std::string, int> index0, index1;
  auto key0 = [](const GL0Elem& a) { return a.a0.str() + " ; " + a.a1.str(); };
  auto key1 = [](const GL1Elem& g) { return g.gamma.str(); };
  std::vector<std::string> labels0, labels1;
  for (std::size_t i = 0; i < out.gl0.size(); ++i) {
    labels0.push_back(key0(out.gl0[i]));
    index0[labels0.back()] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < out.gl1.size(); ++i) {
    labels1.push_back(key1(out.gl1[i]));
    index1[labels1.back()] = static_cast<int>(i);
  }
  auto find = [](const std::map<std::string, int>& m, const std::string& k) {
    auto it = m.find(k);
    if (it == m.end()) throw PreconditionError("GL(V) not closed at " + k);
    return it->second;
  };
  const std::size_t n0 = out.gl0.size(), n1 = out.gl1.size();
  std::vector<std::vector<int>> t0(n0, std::vector<int>(n0)), t1(n1, std::vector<int>(n1));
  for (std::size_t a = 0; a < n0; ++a)
    for (std::size_t b = 0; b < n0; ++b) t0[a][b] = find(index0, key0(gl0_compose(out.gl0[a], out.gl0[b])));
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n1; ++b) t1[a][b] = find(index1, key1(gl1_mul(v, out.gl1[a], out.gl1[b])));
  out.cm.g0 = FinGroup::from_table(t0, labels0);
  out.cm.g1 = FinGroup::from_table(t1, labels1);
  for (const auto& g : out.gl1) out.cm.phi.push_back(find(index0, key0(gl_boundary(v, g))));
  for (const auto& a : out.gl0)
    for (const auto& g : out.gl1) out.cm.act.push_back(find(index1, key1(gl_act(a, g))));
  out.identity = {out.gl0, out.gl1};
  return out;
}

Report validate_gl_cm(const TwoVectSpace& v, const std::vector<GL0Elem>& gl0, const std::vector<GL1Elem>& gl1) {
  Report r("gl_crossed_module");
  r.note("gl0_samples", std::to_string(gl0.size()));
  r.note("gl1_samples", std::to_string(gl1.size()));
  auto w1 = [](const GL1Elem& g) { return g.gamma.str(); };
  auto w0 = [](const GL0Elem& a) { return a.a0.str() + " ; " + a.a1.str(); };

  std::vector<GL0Elem> a_ok;
  std::vector<GL1Elem> g_ok;
  for (const auto& a : gl0)
    if (r.expect(in_gl0(v, a), "gl0_member", [&] { return Fields{{"A", w0(a)}}; })) a_ok.push_back(a);
  for (const auto& g : gl1)
    if (r.expect(in_gl1(v, g), "gl1_member", [&] { return Fields{{"gamma", w1(g)}}; })) g_ok.push_back(g);

  for (const auto& g : g_ok) {
    GL1Elem gi = gl1_inv(v, g);
    r.expect(gl1_mul(v, g, gi).gamma.is_zero() && gl1_mul(v, gi, g).gamma.is_zero(), "gl1_inverse",
             [&] { return Fields{{"gamma", w1(g)}}; });
    r.expect(in_gl0(v, gl_boundary(v, g)), "boundary_in_gl0", [&] { return Fields{{"gamma", w1(g)}}; });
    for (const auto& h : g_ok) {
      GL1Elem gh = gl1_mul(v, g, h);
      r.expect(in_gl1(v, gh), "gl1_closed", [&] { return Fields{{"gamma", w1(g)}, {"gamma'", w1(h)}}; });
      r.expect(gl_boundary(v, gh) == gl0_compose(gl_boundary(v, g), gl_boundary(v, h)), "boundary_hom",
               [&] { return Fields{{"gamma", w1(g)}, {"gamma'", w1(h)}}; });
      GL1Elem conj = gl1_mul(v, gl1_mul(v, g, h), gi);
      r.expect(gl_act(gl_boundary(v, g), h) == conj, "peiffer",
               [&] { return Fields{{"gamma", w1(g)}, {"gamma'", w1(h)}}; });
      for (const auto& k : g_ok)
        r.expect(gl1_mul(v, gh, k) == gl1_mul(v, g, gl1_mul(v, h, k)), "gl1_associative",
                 [&] { return Fields{{"gamma", w1(g)}, {"gamma'", w1(h)}, {"gamma''", w1(k)}}; });
    }
  }
  for (const auto& a : a_ok) {
    GL0Elem ai = gl0_inverse(a);
    for (const auto& g : g_ok) {
      GL1Elem ag = gl_act(a, g);
      r.expect(in_gl1(v, ag), "action_closed", [&] { return Fields{{"A", w0(a)}, {"gamma", w1(g)}}; });
      r.expect(gl_boundary(v, ag) == gl0_compose(gl0_compose(a, gl_boundary(v, g)), ai), "boundary_equivariant",
               [&] { return Fields{{"A", w0(a)}, {"gamma", w1(g)}}; });
      for (const auto& h : g_ok)
        r.expect(gl_act(a, gl1_mul(v, g, h)) == gl1_mul(v, ag, gl_act(a, h)), "action_automorphism",
                 [&] { return Fields{{"A", w0(a)}, {"gamma", w1(g)}, {"gamma'", w1(h)}}; });
      for (const auto& b : a_ok)
        r.expect(gl_act(gl0_compose(a, b), g) == gl_act(a, gl_act(b, g)), "action_law",
                 [&] { return Fields{{"A", w0(a)}, {"B", w0(b)}, {"gamma", w1(g)}}; });
    }
  }
  return r;
}

Report validate_rep(const TwoVectSpace& v, const FinCrossedModule& cm, const Rep& rep) {
  if (rep.sigma0.size() != cm.g0.order() || rep.sigma1.size() != cm.g1.order()) {
    Report r("representation");
    r.fail("shape", {{"sigma0", std::to_string(rep.sigma0.size())}, {"sigma1", std::to_string(rep.sigma1.size())}});
    return r;
  }
  CMOps<int, int> ops{
      [&](const int& a, const int& b) { return cm.g0.mul(a, b); },
      [&](const int& a, const int& b) { return cm.g1.mul(a, b); },
      [&](const int& b) { return cm.phi_of(b); },
      [&](const int& a, const int& b) { return cm.act_on(a, b); },
  };
  return validate_rep_on<int, int>(
      v, ops, [&](const int& a) { return rep.sigma0[static_cast<std::size_t>(a)]; },
      [&](const int& b) { return rep.sigma1[static_cast<std::size_t>(b)]; }, cm.g0.all(), cm.g1.all(),
      [&](const int& a) { return cm.g0.label(a); }, [&](const int& b) { return cm.g1.label(b); });
}

Report validate_identity_rep(const TwoVectSpace& v, const std::vector<GL0Elem>& gl0,
                             const std::vector<GL1Elem>& gl1) {
  CMOps<GL0Elem, GL1Elem> ops{
      [](const GL0Elem& a, const GL0Elem& b) { return gl0_compose(a, b); },
      [&](const GL1Elem& a, const GL1Elem& b) { return gl1_mul(v, a, b); },
      [&](const GL1Elem& b) { return gl_boundary(v, b); },
      [](const GL0Elem& a, const GL1Elem& b) { return gl_act(a, b); },
  };
  return validate_rep_on<GL0Elem, GL1Elem>(
      v, ops, [](const GL0Elem& a) { return a; }, [](const GL1Elem& b) { return b; }, gl0, gl1,
      [](const GL0Elem& a) { return a.a0.str() + " ; " + a.a1.str(); },
      [](const GL1Elem& b) { return b.gamma.str(); });
}

Rep trivial_rep(const TwoVectSpace& v, const FinCrossedModule& cm) {
  return {std::vector<GL0Elem>(cm.g0.order(), gl0_identity(v)),
          std::vector<GL1Elem>(cm.g1.order(), gl1_identity(v))};
}

Report validate_linear_action(const TwoVectSpace& v, const Fin2Group& g, const LinearAction& a) {
  const std::size_t n = v.total();
  const auto order = static_cast<int>(g.order());
  if (a.matrices.size() != g.order()) {
    Report r("linear_action");
    r.fail("shape", {{"matrices", std::to_string(a.matrices.size())}, {"order", std::to_string(order)}});
    return r;
  }
  for (int e = 0; e < order; ++e)
    if (a.matrices[static_cast<std::size_t>(e)].rows() != n || a.matrices[static_cast<std::size_t>(e)].cols() != n) {
      Report r("linear_action");
      r.fail("shape", {{"g", g.group.label(e)}});
      return r;
    }

  const int id1 = g.cm.g1.id();
  ActionSamples<int> s;
  s.identity = g.group.id();
  s.elements = g.group.all();
  for (int e = 0; e < order; ++e) {
    const int t0 = g.cm.g0.mul(g.part0(e), g.cm.phi_of(g.part1(e)));
    for (int k = 0; k < static_cast<int>(g.cm.g1.order()); ++k) {
      const int f = g.element(t0, k);
      s.composable.push_back({e, f, g.groupoid.compose(e, f)});
    }
  }
  s.mul = [&](const int& e, const int& f) { return g.group.mul(e, f); };
  s.source_unit = [&](const int& e) { return g.element(g.part0(e), id1); };
  s.target_unit = [&](const int& e) { return g.element(g.cm.g0.mul(g.part0(e), g.cm.phi_of(g.part1(e))), id1); };
  s.label = [&](const int& e) { return g.group.label(e); };
  return validate_linear_action_on<int>(v, s, [&](const int& e) { return a.matrices[static_cast<std::size_t>(e)]; });
}

Mat rep_action_matrix(const TwoVectSpace& v, const GL0Elem& s0, const GL1Elem& s1, const GL0Elem& s0_target) {
  return blocks(s0.a0, zeros(v.dim0, v.dim1), s0.a1 * s1.gamma, s0_target.a1);
}

Mat naive_dual_matrix(const TwoVectSpace& v, const Mat& inverse_action) {
  // Pairing <(xi, alpha), (x, u)> = xi(u) + alpha(x); swap blocks between (alpha, xi) and (xi, alpha).
  const std::size_t n = v.total();
  Mat swap(n, n);
  for (std::size_t i = 0; i < v.dim1; ++i) swap(i, v.dim0 + i) = 1;
  for (std::size_t i = 0; i < v.dim0; ++i) swap(v.dim1 + i, i) = 1;
  return in_field(swap * inverse_action.transpose() * swap.transpose(), v.field);
}

LinearAction rep_to_action(const TwoVectSpace& v, const Fin2Group& g, const Rep& rep) {
  LinearAction out;
  out.matrices.reserve(g.order());
  for (int e = 0; e < static_cast<int>(g.order()); ++e) {
    const int g0 = g.part0(e), g1 = g.part1(e);
    const GL0Elem& s0 = rep.sigma0[static_cast<std::size_t>(g0)];
    const GL0Elem& s0t = rep.sigma0[static_cast<std::size_t>(g.cm.g0.mul(g0, g.cm.phi_of(g1)))];
    out.matrices.push_back(rep_action_matrix(v, s0, rep.sigma1[static_cast<std::size_t>(g1)], s0t));
  }
  return out;
}

Rep action_to_rep(const TwoVectSpace& v, const Fin2Group& g, const LinearAction& a) {
  Rep rep;
  const int id0 = g.cm.g0.id(), id1 = g.cm.g1.id();
  for (int g0 = 0; g0 < static_cast<int>(g.cm.g0.order()); ++g0) {
    const Mat& mat = a.matrices[static_cast<std::size_t>(g.element(g0, id1))];
    rep.sigma0.push_back({sub(mat, 0, 0, v.dim0, v.dim0), sub(mat, v.dim0, v.dim0, v.dim1, v.dim1)});
  }
  for (int g1 = 0; g1 < static_cast<int>(g.cm.g1.order()); ++g1) {
    const Mat& mat = a.matrices[static_cast<std::size_t>(g.element(id0, g1))];
    rep.sigma1.push_back({sub(mat, v.dim0, 0, v.dim1, v.dim0)});
  }
  return rep;
}

Rep dual_rep(const TwoVectSpace& v, const FinCrossedModule& cm, const Rep& rep) {
  (void)v;
  Rep out;
  for (int g0 = 0; g0 < static_cast<int>(cm.g0.order()); ++g0) {
    const GL0Elem& s = rep.sigma0[static_cast<std::size_t>(cm.g0.inv(g0))];
    // (V*)_0 = V1*, (V*)_1 = V0*
    out.sigma0.push_back({s.a1.transpose(), s.a0.transpose()});
  }
  for (int g1 = 0; g1 < static_cast<int>(cm.g1.order()); ++g1)
    out.sigma1.push_back({rep.sigma1[static_cast<std::size_t>(cm.g1.inv(g1))].gamma.transpose()});
  return out;
}

LinearAction dual_2gp_action(const TwoVectSpace& v, const Fin2Group& g, const Rep& rep) {
  return rep_to_action(dual_space(v), g, dual_rep(v, g.cm, rep));
}

LinearAction naive_dual_action(const TwoVectSpace& v, const Fin2Group& g, const LinearAction& a) {
  LinearAction out;
  for (int e = 0; e < static_cast<int>(g.order()); ++e)
    out.matrices.push_back(naive_dual_matrix(v, a.matrices[static_cast<std::size_t>(g.group.inv(e))]));
  return out;
}

Report naive_dual_conditions(const TwoVectSpace& v, const Fin2Group& g, const LinearAction& a) {
  Report r("naive_dual_conditions");
  const int id0 = g.cm.g0.id(), id1 = g.cm.g1.id();
  const std::size_t n = v.total();
  for (int g1 = 0; g1 < static_cast<int>(g.cm.g1.order()); ++g1) {
    const Mat& on_fiber = a.matrices[static_cast<std::size_t>(g.element(id0, g1))];
    const Mat& on_base = a.matrices[static_cast<std::size_t>(g.element(g.cm.phi_of(g1), id1))];
    for (std::size_t i = v.dim0; i < n; ++i)
      r.expect(on_fiber * unit_vec(n, i) == unit_vec(n, i), "g1_fixes_V1",
               [&] { return Fields{{"g1", g.cm.g1.label(g1)}, {"basis", std::to_string(i - v.dim0)}}; });
    for (std::size_t i = 0; i < v.dim0; ++i)
      r.expect(on_base * unit_vec(n, i) == unit_vec(n, i), "phi_g1_fixes_V0",
               [&] { return Fields{{"g1", g.cm.g1.label(g1)}, {"basis", std::to_string(i)}}; });
  }
  return r;
}

FinCrossedModule semidirect_2vect(const TwoVectSpace& v, const Fin2Group& g, const Rep& rep) {
  if (!v.field.is_prime()) throw PreconditionError("semidirect product tables need a prime field");
  const std::size_t p = v.field.modulus;
  const std::size_t n1 = power(p, v.dim1), n0 = power(p, v.dim0);
  const FinCrossedModule& cm = g.cm;
  const std::size_t o1 = cm.g1.order() * n1, o0 = cm.g0.order() * n0;
  const std::size_t limit = enumeration_guard(4096);
  if (o1 > limit || o0 > limit)
    throw GuardError("semidirect product too large: " + std::to_string(o1) + " x " + std::to_string(o0));

  auto decode = [&](std::size_t code, std::size_t dim) {
    Vec out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      out[i] = Scalar::in(v.field, static_cast<long>(code % p));
      code /= p;
    }
    return out;
  };
  auto encode = [&](const Vec& x) {
    std::size_t code = 0;
    for (std::size_t i = x.size(); i-- > 0;) code = code * p + (x[i] + Scalar::in(v.field, 0)).residue_value();
    return code;
  };
  auto s0 = [&](int g0) -> const GL0Elem& { return rep.sigma0[static_cast<std::size_t>(g0)]; };
  auto s1 = [&](int g1) -> const Mat& { return rep.sigma1[static_cast<std::size_t>(g1)].gamma; };

  std::vector<Vec> vec1(n1), vec0(n0);
  for (std::size_t c = 0; c < n1; ++c) vec1[c] = decode(c, v.dim1);
  for (std::size_t c = 0; c < n0; ++c) vec0[c] = decode(c, v.dim0);

  // (g1,u)(g1',u') = (g1 g1', u + g1 |> u') with g1 |> u' = sigma0(Phi(g1)) u'.
  std::vector<std::vector<int>> t1(o1, std::vector<int>(o1));
  std::vector<std::string> l1(o1);
  for (std::size_t a = 0; a < o1; ++a) {
    const int ga = static_cast<int>(a / n1);
    const Vec& ua = vec1[a % n1];
    l1[a] = "(" + cm.g1.label(ga) + "," + to_string(ua) + ")";
    for (std::size_t b = 0; b < o1; ++b) {
      const int gb = static_cast<int>(b / n1);
      Vec u = ua + s0(cm.phi_of(ga)).a1 * vec1[b % n1];
      t1[a][b] = static_cast<int>(static_cast<std::size_t>(cm.g1.mul(ga, gb)) * n1 + encode(u));
    }
  }
  // (g0,x)(g0',x') = (g0 g0', x + g0 |> x').
  std::vector<std::vector<int>> t0(o0, std::vector<int>(o0));
  std::vector<std::string> l0(o0);
  for (std::size_t a = 0; a < o0; ++a) {
    const int ga = static_cast<int>(a / n0);
    const Vec& xa = vec0[a % n0];
    l0[a] = "(" + cm.g0.label(ga) + "," + to_string(xa) + ")";
    for (std::size_t b = 0; b < o0; ++b) {
      const int gb = static_cast<int>(b / n0);
      Vec x = xa + s0(ga).a0 * vec0[b % n0];
      t0[a][b] = static_cast<int>(static_cast<std::size_t>(cm.g0.mul(ga, gb)) * n0 + encode(x));
    }
  }

  FinCrossedModule out;
  out.g1 = FinGroup::from_table(t1, l1);
  out.g0 = FinGroup::from_table(t0, l0);
  out.phi.resize(o1);
  for (std::size_t a = 0; a < o1; ++a) {
    const int ga = static_cast<int>(a / n1);
    out.phi[a] = static_cast<int>(static_cast<std::size_t>(cm.phi_of(ga)) * n0 + encode(v.phi * vec1[a % n1]));
  }
  // (g0,x) |> (g1,u) = (g0 |> g1, g0 |> u - sigma1(g0 |> g1) x).
  out.act.resize(o0 * o1);
  for (std::size_t a = 0; a < o0; ++a) {
    const int g0 = static_cast<int>(a / n0);
    const Vec& x = vec0[a % n0];
    for (std::size_t b = 0; b < o1; ++b) {
      const int g1 = static_cast<int>(b / n1);
      const int moved = cm.act_on(g0, g1);
      Vec u = s0(g0).a1 * vec1[b % n1] - s1(moved) * x;
      out.act[a * o1 + b] = static_cast<int>(static_cast<std::size_t>(moved) * n1 + encode(u));
    }
  }
  return out;
}

}  // namespace crossmod
