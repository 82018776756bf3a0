#include "crossmod/dirac.hpp"

#include <algorithm>

namespace crossmod {

namespace {

Vec head(const Vec& v, std::size_t n) { return Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)); }
Vec tail(const Vec& v, std::size_t n) { return Vec(v.begin() + static_cast<std::ptrdiff_t>(n), v.end()); }

Vec concat(const Vec& a, const Vec& b) {
  Vec r(a);
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Scalar split_pairing(const Vec& a, const Vec& b, std::size_t half) {
  return dot(head(a, half), tail(b, half)) + dot(head(b, half), tail(a, half));
}

std::uint32_t modulus_in(const std::vector<Scalar>& xs) {
  for (const auto& x : xs)
    if (x.modulus() != 0) return x.modulus();
  return 0;
}

// The conditions use 2 d_* omega + [omega, omega], which loses information in characteristic 2.
void reject_char2(std::initializer_list<const std::vector<Scalar>*> data) {
  for (const auto* xs : data)
    if (modulus_in(*xs) == 2) throw PreconditionError("Dirac conditions are not defined in characteristic 2");
}

std::vector<std::size_t> complement_coords(const Subspace& h) {
  std::vector<std::size_t> out;
  const auto& piv = h.pivots();
  for (std::size_t i = 0; i < h.ambient(); ++i)
    if (std::find(piv.begin(), piv.end(), i) == piv.end()) out.push_back(i);
  return out;
}

bool in_wedge(const Subspace& span, const Multivector& m) { return span.contains(m.coeffs()); }

Report dirac_g1_and_shape(const LieBialgebra& b, const CharPair& cp);

}  // namespace

LagSubspace::LagSubspace(Subspace space, std::size_t half) : space_(std::move(space)), half_(half) {
  if (space_.ambient() != 2 * half_) throw DimensionError("Lagrangian subspace must live in g (+) g*");
  if (space_.dim() != half_) throw PreconditionError("Lagrangian subspace must have dimension dim g");
  if (!check_isotropic(space_, half_).ok()) throw PreconditionError("subspace is not isotropic");
}

Report check_isotropic(const Subspace& l, std::size_t half) {
  Report rep("isotropic");
  auto vs = l.vectors();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i; j < vs.size(); ++j) {
      Scalar v = split_pairing(vs[i], vs[j], half);
      rep.expect(v.is_zero(), "isotropic", [&] {
        return Fields{{"a", to_string(vs[i])}, {"b", to_string(vs[j])}, {"<a,b>", v.str()}};
      });
    }
  return rep;
}

Bivector canonical_omega(const Subspace& h, const Bivector& omega) {
  std::size_t n = h.ambient();
  if (omega.dim() != n || omega.grade() != 2) throw DimensionError("omega must be a bivector on g");
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(h.reduce(unit_vec(n, i)));
  return diagonal_action(Mat::from_columns(cols, n), omega);
}

LagSubspace char_to_lagrangian(const LieBialgebra& b, const CharPair& cp) {
  std::size_t n = b.g.dim();
  if (cp.h.ambient() != n || cp.omega.dim() != n) throw DimensionError("characteristic pair does not match g");
  std::vector<Vec> vs;
  for (const auto& x : cp.h.vectors()) vs.push_back(concat(x, zero_vec(n)));
  for (const auto& xi : annihilator(cp.h).vectors()) vs.push_back(concat(cp.omega.sharp(xi), xi));
  // isotropy is automatic from antisymmetry; the constructor asserts it
  return LagSubspace(Subspace::span(vs, 2 * n), n);
}

CharPair lagrangian_to_char(const LagSubspace& l) {
  std::size_t n = l.half();
  std::vector<Vec> g_axes;
  for (std::size_t i = 0; i < n; ++i) g_axes.push_back(unit_vec(2 * n, i));
  Subspace meet = intersect(l.space(), Subspace::span(g_axes, 2 * n));
  std::vector<Vec> hv;
  for (const auto& v : meet.vectors()) hv.push_back(head(v, n));
  Subspace h = Subspace::span(hv, n);

  auto comp = complement_coords(h);
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t a = 0; a < comp.size(); ++a)
    for (std::size_t b = a + 1; b < comp.size(); ++b) unknowns.emplace_back(comp[a], comp[b]);

  // omega#xi = reduce(x) for every (x, xi) in a basis of L
  std::vector<Vec> rows;
  Vec rhs;
  for (const auto& v : l.space().vectors()) {
    Vec x = h.reduce(head(v, n)), xi = tail(v, n);
    for (std::size_t j = 0; j < n; ++j) {
      Vec row(unknowns.size());
      for (std::size_t k = 0; k < unknowns.size(); ++k) {
        auto [c, d] = unknowns[k];
        if (j == d) row[k] += xi[c];
        if (j == c) row[k] -= xi[d];
      }
      rows.push_back(std::move(row));
      rhs.push_back(x[j]);
    }
  }
  Bivector omega(n, 2);
  if (!unknowns.empty()) {
    auto sol = solve(Mat::from_rows(rows, unknowns.size()), rhs);
    if (!sol) throw PreconditionError("subspace is not the graph of a bivector over h^perp");
    for (std::size_t k = 0; k < unknowns.size(); ++k)
      omega.add_term({unknowns[k].first, unknowns[k].second}, sol->particular[k]);
  }
  return {h, omega};
}

Report check_dirac_direct(const LieBialgebra& b, const Subspace& l) {
  Report rep("dirac_direct");
  std::size_t n = b.g.dim();
  if (l.ambient() != 2 * n) throw DimensionError("subspace must live in g (+) g*");
  rep.add(check_isotropic(l, n));
  rep.expect(l.dim() == n, "maximal", [&] { return Fields{{"dim", std::to_string(l.dim())}, {"expected", std::to_string(n)}}; });
  DoubleAlg d = manin_double_unchecked(b);
  auto vs = l.vectors();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      Vec br = d.algebra.bracket(vs[i], vs[j]);
      rep.expect(l.contains(br), "closed", [&] {
        return Fields{{"a", to_string(vs[i])}, {"b", to_string(vs[j])}, {"[a,b]", to_string(br)}};
      });
    }
  return rep;
}

Report check_dirac_charpair(const LieBialgebra& b, const CharPair& cp) {
  std::size_t n = b.g.dim();
  if (cp.h.ambient() != n || cp.omega.dim() != n || cp.omega.grade() != 2)
    throw DimensionError("characteristic pair does not match g");
  reject_char2({&b.g.tensor(), &b.gdual.tensor(), &cp.omega.coeffs(), &cp.h.basis().entries()});
  Report rep("dirac_charpair");

  bool sub = true;
  for (const auto& x : cp.h.vectors())
    for (const auto& y : cp.h.vectors()) {
      Vec br = b.g.bracket(x, y);
      sub = rep.expect(cp.h.contains(br), "h_subalgebra", [&] {
        return Fields{{"x", to_string(x)}, {"y", to_string(y)}, {"[x,y]", to_string(br)}};
      }) && sub;
    }

  Multivector mc = Scalar(2) * ce_diff(b.gdual, cp.omega) + schouten(b.g, cp.omega, cp.omega);
  Subspace h3 = wedge_span(cp.h, 3);
  rep.expect(in_wedge(h3, mc), "maurer_cartan_mod_h", [&] {
    return Fields{{"2d*omega+[omega,omega]", to_string(mc.coeffs())}};
  });

  Subspace perp = annihilator(cp.h);
  auto ps = perp.vectors();
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      const Vec &xi = ps[i], &eta = ps[j];
      Vec v = b.gdual.bracket(xi, eta) + coad(b.g, cp.omega.sharp(xi), eta) - coad(b.g, cp.omega.sharp(eta), xi);
      rep.expect(perp.contains(v), "dual_closure", [&] {
        return Fields{{"xi", to_string(xi)}, {"eta", to_string(eta)}, {"[xi,eta]+[xi,eta]_omega", to_string(v)}};
      });
    }
  return rep;
}

InfinitesimalBackend infinitesimal_backend(const LieCrossedModule& cm, const Subspace& h0) {
  if (h0.ambient() != cm.dim0()) throw DimensionError("h0 must be a subspace of g0");
  InfinitesimalBackend out;
  for (const auto& x : h0.vectors()) out.derivations.push_back(cm.action_matrix(x));
  return out;
}

Report check_h0_invariance(const InvarianceBackend& backend, const Subspace& h1, const Bivector& r) {
  Report rep("h0_invariance");
  std::size_t n = h1.ambient();
  if (r.dim() != n || r.grade() != 2) throw DimensionError("r must be a bivector on g1");
  Subspace h1g1 = wedge_span(h1, 2);
  auto square = [&](const Mat& m) {
    if (m.rows() != n || m.cols() != n) throw PreconditionError("invariance backend: matrix is not dim(g1) square");
  };
  if (const auto* inf = std::get_if<InfinitesimalBackend>(&backend)) {
    rep.note("backend", "infinitesimal");
    for (std::size_t k = 0; k < inf->derivations.size(); ++k) {
      const Mat& dm = inf->derivations[k];
      square(dm);
      Subspace moved = image(dm, h1);
      rep.expect(h1.contains(moved), "stabilizes_h1", [&] { return Fields{{"generator", std::to_string(k)}}; });
      Multivector xr = derivation_action(dm, r);
      rep.expect(in_wedge(h1g1, xr), "x|>r=0_mod_h1", [&] {
        return Fields{{"generator", std::to_string(k)}, {"x|>r", to_string(xr.coeffs())}};
      });
    }
  } else {
    const auto& gens = std::get<GeneratorBackend>(backend).generators;
    rep.note("backend", "generators");
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Mat& gm = gens[k];
      square(gm);
      if (!inverse(gm)) throw PreconditionError("invariance backend: generator " + std::to_string(k) + " is singular");
      rep.expect(image(gm, h1) == h1, "stabilizes_h1", [&] { return Fields{{"generator", std::to_string(k)}}; });
      Multivector diff = diagonal_action(gm, r) - r;
      rep.expect(in_wedge(h1g1, diff), "h|>r=r_mod_h1", [&] {
        return Fields{{"generator", std::to_string(k)}, {"h|>r-r", to_string(diff.coeffs())}};
      });
    }
  }
  return rep;
}

Report check_2bialgebra_dirac(const Lie2Bialgebra& tb, const Subspace& h0, const Subspace& h1, const Bivector& r) {
  const auto& cm = tb.cm;
  if (!check_2subalgebra(cm, h0, h1).ok()) throw PreconditionError("(h0, h1) is not a 2-subalgebra");
  if (r.dim() != cm.dim1() || r.grade() != 2) throw DimensionError("r must be a bivector on g1");
  LieBialgebra b1 = component_bialgebra(tb, 1);
  reject_char2({&b1.g.tensor(), &b1.gdual.tensor(), &r.coeffs()});
  Report rep("2bialgebra_dirac");

  Subspace p0 = annihilator(h0), p1 = annihilator(h1);
  for (const auto& xi : p1.vectors())
    for (const auto& alpha : p0.vectors()) {
      Vec v = tb.cmdual.act(xi, alpha);
      rep.expect(p0.contains(v), "h1perp_acts_on_h0perp", [&] {
        return Fields{{"xi", to_string(xi)}, {"alpha", to_string(alpha)}, {"xi|>alpha", to_string(v)}};
      });
    }

  Multivector mc = Scalar(2) * ce_diff(b1.gdual, r) + schouten(b1.g, r, r);
  rep.expect(in_wedge(wedge_span(h1, 3), mc), "maurer_cartan_mod_h1",
             [&] { return Fields{{"2d*r+[r,r]", to_string(mc.coeffs())}}; });

  auto ps = p1.vectors();
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      const Vec &xi = ps[i], &eta = ps[j];
      Vec v = b1.gdual.bracket(xi, eta) + coad(b1.g, r.sharp(xi), eta) - coad(b1.g, r.sharp(eta), xi);
      rep.expect(p1.contains(v), "dual_closure", [&] {
        return Fields{{"xi", to_string(xi)}, {"eta", to_string(eta)}, {"[xi,eta]+[xi,eta]_r", to_string(v)}};
      });
    }

  Subspace h1g1 = wedge_span(h1, 2);
  for (const auto& x : h0.vectors()) {
    Multivector xr = cm.act(x, r);
    rep.expect(in_wedge(h1g1, xr), "x|>r=0_mod_h1",
               [&] { return Fields{{"x", to_string(x)}, {"x|>r", to_string(xr.coeffs())}}; });
  }
  return rep;
}

Homog2Verdict classify_homogeneous(const Lie2Bialgebra& tb, const Subspace& h0, const Subspace& h1,
                                   const Bivector& r, const InvarianceBackend& backend) {
  const auto& cm = tb.cm;
  if (h0.ambient() != cm.dim0() || h1.ambient() != cm.dim1()) throw DimensionError("subspaces do not match g0, g1");
  Homog2Verdict v;
  v.report = Report("classify_homogeneous");

  Report poisson("h0_poisson_subgroup");
  poisson.expect(is_subalgebra(cm.g0(), h0), "h0_subalgebra");
  Subspace p0 = annihilator(h0);
  for (std::size_t a = 0; a < cm.dim1(); ++a)
    for (const auto& alpha : p0.vectors()) {
      Vec moved = tb.cmdual.act(unit_vec(cm.dim1(), a), alpha);
      poisson.expect(p0.contains(moved), "coideal", [&] {
        return Fields{{"xi", std::to_string(a)}, {"alpha", to_string(alpha)}, {"xi|>alpha", to_string(moved)}};
      });
    }
  v.h0_poisson_subgroup = poisson.ok();

  Report sub = check_2subalgebra(cm, h0, h1);
  v.two_subalgebra = sub.ok();

  LieBialgebra b1 = component_bialgebra(tb, 1);
  Report dirac = dirac_g1_and_shape(b1, {h1, r});
  v.dirac_g1 = dirac.ok();

  Report inv = check_h0_invariance(backend, h1, r);
  v.h0_invariance = inv.ok();

  v.overall = v.h0_poisson_subgroup && v.two_subalgebra && v.dirac_g1 && v.h0_invariance;
  v.report.add(std::move(poisson));
  v.report.add_as("two_subalgebra", std::move(sub));
  v.report.add_as("dirac_g1", std::move(dirac));
  v.report.add(std::move(inv));
  return v;
}

namespace {

Report dirac_g1_and_shape(const LieBialgebra& b, const CharPair& cp) {
  Report rep = check_dirac_charpair(b, cp);
  std::size_t n = b.g.dim();
  LagSubspace l = char_to_lagrangian(b, cp);
  std::vector<Vec> axes;
  for (std::size_t i = 0; i < n; ++i) axes.push_back(unit_vec(2 * n, i));
  std::vector<Vec> heads;
  for (const auto& v : intersect(l.space(), Subspace::span(axes, 2 * n)).vectors()) heads.push_back(head(v, n));
  rep.expect(Subspace::span(heads, n) == cp.h, "l_meets_g1");
  return rep;
}

}  // namespace

Report triangular_check(const LieCrossedModule& cm, const Bivector& mu, const Subspace& h0, const Subspace& h1,
                        const Bivector& r, PhiSlot slot) {
  Report rmat = check_r_matrix(cm, mu);
  if (!rmat.ok()) throw PreconditionError("mu is not an r-matrix");
  if (h0.ambient() != cm.dim0() || h1.ambient() != cm.dim1()) throw DimensionError("subspaces do not match g0, g1");
  const LieAlg& g1 = cm.g1();
  Report rep("triangular");
  rep.note("side_condition", slot == PhiSlot::second ? "1^phi" : "phi^1");
  rep.note("triangular", schouten(g1, mu, mu).is_zero() ? "true" : "false");

  rep.expect(is_subalgebra(g1, h1), "h1_subalgebra");
  Bivector s = mu + r;
  Multivector ss = schouten(g1, s, s);
  rep.expect(in_wedge(wedge_span(h1, 3), ss), "[mu+r,mu+r]=0_mod_h1",
             [&] { return Fields{{"[mu+r,mu+r]", to_string(ss.coeffs())}}; });
  Subspace h1g1 = wedge_span(h1, 2);
  for (const auto& u : h1.vectors()) {
    Multivector us = schouten(g1, Multivector::from_vector(u), s);
    rep.expect(in_wedge(h1g1, us), "[u,mu+r]=0_mod_h1",
               [&] { return Fields{{"u", to_string(u)}, {"[u,mu+r]", to_string(us.coeffs())}}; });
  }

  for (const auto& x : h0.vectors()) {
    Multivector xm = cm.act(x, mu);
    bool ok = true;
    Mat m;
    if (slot == PhiSlot::second) {
      m = one_wedge_phi(xm, cm.phi());  // rows live in g0
      for (std::size_t i = 0; i < m.rows(); ++i) ok = ok && h0.contains(m.row(i));
    } else {
      m = phi_wedge_one(xm, cm.phi());  // columns live in g0
      for (std::size_t j = 0; j < m.cols(); ++j) ok = ok && h0.contains(m.col(j));
    }
    rep.expect(ok, "poisson_subgroup", [&] { return Fields{{"x", to_string(x)}, {"image", m.str()}}; });
  }
  return rep;
}

std::vector<Bivector> enumerate_dirac(const LieBialgebra& b, const Subspace& h, const std::vector<Scalar>& coeffs) {
  std::size_t n = b.g.dim();
  if (h.ambient() != n) throw DimensionError("h must be a subspace of g");
  std::vector<Scalar> values(coeffs);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty()) return {};

  auto comp = complement_coords(h);
  std::vector<IndexSet> slots;
  for (std::size_t a = 0; a < comp.size(); ++a)
    for (std::size_t c = a + 1; c < comp.size(); ++c) slots.push_back({comp[a], comp[c]});

  std::size_t guard = enumeration_guard(200000), total = 1;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    total *= values.size();
    if (total > guard) throw GuardError("Dirac enumeration grid exceeds " + std::to_string(guard) + " points");
  }

  std::vector<Bivector> out;
  std::vector<std::size_t> digit(slots.size(), 0);
  for (std::size_t point = 0; point < total; ++point) {
    Bivector omega(n, 2);
    for (std::size_t k = 0; k < slots.size(); ++k) omega.add_term(slots[k], values[digit[k]]);
    if (check_dirac_charpair(b, {h, omega}).ok()) out.push_back(std::move(omega));
    for (std::size_t k = slots.size(); k-- > 0;) {
      if (++digit[k] < values.size()) break;
      digit[k] = 0;
    }
  }
  std::sort(out.begin(), out.end(), [](const Bivector& x, const Bivector& y) {
    return std::lexicographical_compare(x.coeffs().begin(), x.coeffs().end(), y.coeffs().begin(), y.coeffs().end());
  });
  return out;
}

}  // namespace crossmod
