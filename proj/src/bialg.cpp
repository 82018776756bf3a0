#include "crossmod/bialg.hpp"

namespace crossmod {

namespace {

std::string label(const LieAlg& l, std::size_t i) {
  return i < l.labels().size() ? l.labels()[i] : std::to_string(i);
}

std::vector<std::string> starred(const LieAlg& l) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < l.dim(); ++i) out.push_back(label(l, i) + "*");
  return out;
}

Vec head(const Vec& v, std::size_t n) { return Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)); }
Vec tail(const Vec& v, std::size_t n) { return Vec(v.begin() + static_cast<std::ptrdiff_t>(n), v.end()); }

Vec concat(const Vec& a, const Vec& b) {
  Vec r(a);
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace

Multivector cobracket(const LieBialgebra& b, const Vec& x) {
  return ce_diff(b.gdual, Multivector::from_vector(x));
}

Report check_bialgebra(const LieBialgebra& b) {
  Report rep("check_bialgebra");
  std::size_t n = b.g.dim();
  if (b.gdual.dim() != n) throw DimensionError("bialgebra: g and g* dimensions differ");
  rep.add_as("g", validate_lie(b.g));
  rep.add_as("gdual", validate_lie(b.gdual));
  std::vector<Multivector> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(cobracket(b, unit_vec(n, i)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec x = unit_vec(n, i), y = unit_vec(n, j);
      Multivector lhs = cobracket(b, b.g.bracket_basis(i, j));
      Multivector rhs = derivation_action(b.g.ad(x), d[j]) - derivation_action(b.g.ad(y), d[i]);
      rep.expect(lhs == rhs, "cocycle", [&] {
        return Fields{{"x", label(b.g, i)},
                      {"y", label(b.g, j)},
                      {"d[x,y]", to_string(lhs.coeffs())},
                      {"[dx,y]+[x,dy]", to_string(rhs.coeffs())}};
      });
    }
  return rep;
}

Scalar DoubleAlg::pairing(const Vec& a, const Vec& b) const {
  return dot(head(a, half), tail(b, half)) + dot(head(b, half), tail(a, half));
}

Vec DoubleAlg::embed_g(const Vec& x) const { return concat(x, zero_vec(half)); }
Vec DoubleAlg::embed_dual(const Vec& xi) const { return concat(zero_vec(half), xi); }

DoubleAlg manin_double_unchecked(const LieBialgebra& b) {
  std::size_t n = b.g.dim();
  if (b.gdual.dim() != n) throw DimensionError("bialgebra: g and g* dimensions differ");
  // [x+xi, y+eta] = [x,y] + ad*_xi y - ad*_eta x + [xi,eta] + ad*_x eta - ad*_y xi
  auto bracket = [&](std::size_t p, std::size_t q) {
    Vec a = unit_vec(2 * n, p), c = unit_vec(2 * n, q);
    Vec x = head(a, n), xi = tail(a, n), y = head(c, n), eta = tail(c, n);
    Vec gpart = b.g.bracket(x, y) + coad(b.gdual, xi, y) - coad(b.gdual, eta, x);
    Vec dpart = b.gdual.bracket(xi, eta) + coad(b.g, x, eta) - coad(b.g, y, xi);
    return concat(gpart, dpart);
  };
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(label(b.g, i));
  for (auto& s : starred(b.g)) labels.push_back(s);
  return DoubleAlg{LieAlg::from_basis_bracket(2 * n, bracket, labels), n};
}

DoubleAlg manin_double(const LieBialgebra& b) {
  Report r = check_bialgebra(b);
  if (!r.ok()) throw PreconditionError("double: not a Lie bialgebra (" + r.first_failure() + ")");
  return manin_double_unchecked(b);
}

Report check_pairing_invariance(const DoubleAlg& d) {
  Report rep("pairing_invariance");
  std::size_t m = d.algebra.dim();
  Mat gram(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gram(i, j) = d.pairing(unit_vec(m, i), unit_vec(m, j));
  rep.expect(rank(gram) == m, "nondegenerate");
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        Scalar v = d.pairing(d.algebra.bracket_basis(a, b), unit_vec(m, c)) +
                   d.pairing(unit_vec(m, b), d.algebra.bracket_basis(a, c));
        rep.expect(v.is_zero(), "invariance", [&] {
          return Fields{{"a", std::to_string(a)}, {"b", std::to_string(b)}, {"c", std::to_string(c)},
                        {"value", v.str()}};
        });
      }
  return rep;
}

LieBialgebra big_bialgebra(const Lie2Bialgebra& tb) {
  std::size_t n0 = tb.cm.dim0(), n1 = tb.cm.dim1();
  if (tb.cmdual.dim0() != n1 || tb.cmdual.dim1() != n0)
    throw DimensionError("2-bialgebra: dual crossed module has the wrong shape");
  std::vector<std::size_t> perm;
  for (std::size_t a = 0; a < n0; ++a) perm.push_back(n1 + a);
  for (std::size_t b = 0; b < n1; ++b) perm.push_back(b);
  return {semidirect(tb.cm), semidirect(tb.cmdual).permuted(perm)};
}

LieBialgebra component_bialgebra(const Lie2Bialgebra& tb, int degree) {
  if (degree == 0) return {tb.cm.g0(), tb.cmdual.g1()};
  if (degree == 1) return {tb.cm.g1(), tb.cmdual.g0()};
  throw PreconditionError("component degree must be 0 or 1");
}

Report check_2bialgebra(const Lie2Bialgebra& tb) {
  Report rep("check_2bialgebra");
  std::size_t n0 = tb.cm.dim0(), n1 = tb.cm.dim1();
  if (tb.cmdual.dim0() != n1 || tb.cmdual.dim1() != n0)
    throw DimensionError("2-bialgebra: dual crossed module has the wrong shape");
  rep.add_as("cm", validate_lie_cm(tb.cm));
  rep.add_as("cmdual", validate_lie_cm(tb.cmdual));
  Mat expected = Scalar(-1) * tb.cm.phi().transpose();
  rep.expect(tb.cmdual.phi() == expected, "dual_phi", [&] {
    return Fields{{"dual phi", tb.cmdual.phi().str()}, {"-phi^T", expected.str()}};
  });
  rep.add_as("big", check_bialgebra(big_bialgebra(tb)));
  rep.add_as("component_g0", check_bialgebra(component_bialgebra(tb, 0)));
  rep.add_as("component_g1", check_bialgebra(component_bialgebra(tb, 1)));
  return rep;
}

Vec mixed_bracket_component(const Lie2Bialgebra& tb, const Vec& x, const Vec& alpha) {
  std::size_t n1 = tb.cm.dim1();
  Vec out(n1);
  for (std::size_t c = 0; c < n1; ++c) out[c] = -dot(x, tb.cmdual.act(unit_vec(n1, c), alpha));
  return out;
}

Report check_r_matrix(const LieCrossedModule& cm, const Bivector& mu) {
  Report rep("r_matrix");
  if (mu.dim() != cm.dim1() || mu.grade() != 2) throw DimensionError("r-matrix must be a bivector on g1");
  Multivector t = schouten(cm.g1(), mu, mu);
  for (std::size_t a = 0; a < cm.dim0(); ++a) {
    Multivector v = cm.act(unit_vec(cm.dim0(), a), t);
    rep.expect(v.is_zero(), "x|>[mu,mu]=0", [&] {
      return Fields{{"x", label(cm.g0(), a)}, {"[mu,mu]", to_string(t.coeffs())}, {"x|>[mu,mu]", to_string(v.coeffs())}};
    });
  }
  return rep;
}

LieAlg coboundary_dual(const LieAlg& g, const Bivector& r) {
  std::size_t n = g.dim();
  if (r.dim() != n || r.grade() != 2) throw DimensionError("r must be a bivector on g");
  std::vector<Multivector> ru;
  for (std::size_t c = 0; c < n; ++c) ru.push_back(schouten(g, r, Multivector::from_vector(unit_vec(n, c))));
  auto bracket = [&](std::size_t a, std::size_t b) {
    Vec v(n);
    if (a == b) return v;
    Multivector xi_eta = Multivector::basis(n, {a, b});
    for (std::size_t c = 0; c < n; ++c) v[c] = pair(xi_eta, ru[c]);
    return v;
  };
  return LieAlg::from_basis_bracket(n, bracket, starred(g));
}

Coboundary coboundary_2bialgebra(const LieCrossedModule& cm, const Bivector& mu) {
  Report rr = check_r_matrix(cm, mu);
  if (!rr.ok()) {
    const auto& w = rr.failures().front().witness;
    throw PreconditionError("r-matrix condition fails at x = " + w.front().second);
  }
  std::size_t n0 = cm.dim0(), n1 = cm.dim1();
  // <[xi,eta], u> = <xi ^ eta, ad_u mu>. With [mu,u] = -ad_u mu this is the
  // opposite sign of coboundary_dual; only this sign makes the g1*-action a Lie map.
  LieAlg g1dual = coboundary_dual(cm.g1(), -mu);

  // <xi_a |> alpha_b, x_c> = <xi_a ^ phi^T alpha_b, x_c |> mu>
  Mat phit = cm.phi().transpose();
  std::vector<Multivector> x_mu;
  for (std::size_t c = 0; c < n0; ++c) x_mu.push_back(cm.act(unit_vec(n0, c), mu));
  std::vector<Scalar> act(n1 * n0 * n0);
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n0; ++b) {
      Multivector w = wedge(Multivector::from_vector(unit_vec(n1, a)), Multivector::from_vector(phit * unit_vec(n0, b)));
      for (std::size_t c = 0; c < n0; ++c) act[(a * n0 + b) * n0 + c] = pair(w, x_mu[c]);
    }
  Mat dual_phi = Scalar(-1) * phit;

  // Peiffer forces [alpha, beta] = (-phi^T alpha) |> beta.
  LieCrossedModule shell(g1dual, LieAlg(n0), dual_phi, act);
  auto bracket = [&](std::size_t a, std::size_t b) {
    return shell.act(dual_phi * unit_vec(n0, a), unit_vec(n0, b));
  };
  LieAlg g0dual = LieAlg::from_basis_bracket(n0, bracket, starred(cm.g0()));

  Coboundary out;
  out.tb = Lie2Bialgebra{cm, LieCrossedModule(g1dual, g0dual, dual_phi, act)};
  out.triangular = schouten(cm.g1(), mu, mu).is_zero();
  return out;
}

}  // namespace crossmod
