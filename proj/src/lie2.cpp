#include "crossmod/lie2.hpp"

namespace crossmod {

LieCrossedModule::LieCrossedModule(LieAlg g0, LieAlg g1, Mat phi, std::vector<Scalar> act)
    : g0_(std::move(g0)), g1_(std::move(g1)), phi_(std::move(phi)), act_(std::move(act)) {
  if (phi_.rows() != g0_.dim() || phi_.cols() != g1_.dim())
    throw DimensionError("phi must be dim(g0) x dim(g1)");
  if (act_.size() != g0_.dim() * g1_.dim() * g1_.dim()) throw DimensionError("action tensor size mismatch");
}

Mat LieCrossedModule::action_matrix(const Vec& x) const {
  if (x.size() != dim0()) throw DimensionError("action argument not in g0");
  std::size_t m = dim1();
  Mat a(m, m);
  for (std::size_t i = 0; i < dim0(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        const Scalar& t = act_[(i * m + b) * m + c];
        if (!t.is_zero()) a(c, b) += x[i] * t;
      }
  }
  return a;
}

Vec LieCrossedModule::act(const Vec& x, const Vec& u) const { return action_matrix(x) * u; }

Multivector LieCrossedModule::act(const Vec& x, const Multivector& p) const {
  return derivation_action(action_matrix(x), p);
}

LieCrossedModule LieCrossedModule::with_action_entry(std::size_t a, std::size_t b, std::size_t c, Scalar v) const {
  LieCrossedModule cm = *this;
  cm.act_.at((a * dim1() + b) * dim1() + c) = std::move(v);
  return cm;
}

LieCrossedModule LieCrossedModule::with_phi(Mat phi) const {
  return LieCrossedModule(g0_, g1_, std::move(phi), act_);
}

Report validate_lie_cm(const LieCrossedModule& cm) {
  Report rep("validate_lie_cm");
  rep.add(validate_lie(cm.g0())).note("algebra", "g0");
  rep.add(validate_lie(cm.g1())).note("algebra", "g1");
  std::size_t n = cm.dim0(), m = cm.dim1();
  auto idx = [](std::size_t i) { return std::to_string(i); };
  for (std::size_t a = 0; a < n; ++a) {
    Vec x = unit_vec(n, a);
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        Vec u = unit_vec(m, b), v = unit_vec(m, c);
        Vec lhs = cm.act(x, cm.g1().bracket(u, v));
        Vec rhs = cm.g1().bracket(cm.act(x, u), v) + cm.g1().bracket(u, cm.act(x, v));
        rep.expect(lhs == rhs, "derivation", [&] {
          return Fields{{"x", idx(a)}, {"u", idx(b)}, {"v", idx(c)}, {"x|>[u,v]", to_string(lhs)},
                        {"[x|>u,v]+[u,x|>v]", to_string(rhs)}};
        });
      }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t a2 = 0; a2 < n; ++a2)
      for (std::size_t b = 0; b < m; ++b) {
        Vec x = unit_vec(n, a), y = unit_vec(n, a2), u = unit_vec(m, b);
        Vec lhs = cm.act(cm.g0().bracket(x, y), u);
        Vec rhs = cm.act(x, cm.act(y, u)) - cm.act(y, cm.act(x, u));
        rep.expect(lhs == rhs, "action_is_lie_map", [&] {
          return Fields{{"x", idx(a)}, {"y", idx(a2)}, {"u", idx(b)}, {"[x,y]|>u", to_string(lhs)},
                        {"x|>(y|>u)-y|>(x|>u)", to_string(rhs)}};
        });
      }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vec x = unit_vec(n, a), u = unit_vec(m, b);
      Vec lhs = cm.phi() * cm.act(x, u);
      Vec rhs = cm.g0().bracket(x, cm.phi() * u);
      rep.expect(lhs == rhs, "equivariance", [&] {
        return Fields{{"x", idx(a)}, {"u", idx(b)}, {"phi(x|>u)", to_string(lhs)}, {"[x,phi(u)]", to_string(rhs)}};
      });
    }
  for (std::size_t b = 0; b < m; ++b)
    for (std::size_t c = 0; c < m; ++c) {
      Vec u = unit_vec(m, b), v = unit_vec(m, c);
      Vec lhs = cm.act(cm.phi() * u, v);
      Vec rhs = cm.g1().bracket(u, v);
      rep.expect(lhs == rhs, "peiffer", [&] {
        return Fields{{"u", idx(b)}, {"v", idx(c)}, {"phi(u)|>v", to_string(lhs)}, {"[u,v]", to_string(rhs)}};
      });
    }
  return rep;
}

LieAlg semidirect(const LieCrossedModule& cm) {
  std::size_t n = cm.dim0(), m = cm.dim1();
  std::vector<std::string> labels = cm.g0().labels();
  labels.insert(labels.end(), cm.g1().labels().begin(), cm.g1().labels().end());
  auto split = [&](std::size_t i) {
    Vec x(n), u(m);
    if (i < n) x[i] = 1;
    else u[i - n] = 1;
    return std::pair{x, u};
  };
  return LieAlg::from_basis_bracket(
      n + m,
      [&](std::size_t i, std::size_t j) {
        auto [x, u] = split(i);
        auto [y, v] = split(j);
        Vec top = cm.g0().bracket(x, y);
        Vec bottom = cm.act(x, v) - cm.act(y, u) + cm.g1().bracket(u, v);
        top.insert(top.end(), bottom.begin(), bottom.end());
        return top;
      },
      std::move(labels));
}

Report check_2subalgebra(const LieCrossedModule& cm, const Subspace& h0, const Subspace& h1) {
  Report rep("check_2subalgebra");
  if (h0.ambient() != cm.dim0() || h1.ambient() != cm.dim1())
    throw DimensionError("2-subalgebra ambient dimensions do not match the crossed module");
  rep.expect(is_subalgebra(cm.g0(), h0), "h0_subalgebra");
  rep.expect(is_subalgebra(cm.g1(), h1), "h1_subalgebra");
  for (const auto& u : h1.vectors()) {
    Vec pu = cm.phi() * u;
    rep.expect(h0.contains(pu), "phi_h1_in_h0",
               [&] { return Fields{{"u", to_string(u)}, {"phi(u)", to_string(pu)}}; });
  }
  for (const auto& x : h0.vectors())
    for (const auto& u : h1.vectors()) {
      Vec xu = cm.act(x, u);
      rep.expect(h1.contains(xu), "h0_acts_on_h1",
                 [&] { return Fields{{"x", to_string(x)}, {"u", to_string(u)}, {"x|>u", to_string(xu)}}; });
    }
  return rep;
}

Vec embed_g0(const LieCrossedModule& cm, const Vec& x) {
  Vec r(cm.dim0() + cm.dim1());
  std::copy(x.begin(), x.end(), r.begin());
  return r;
}

Vec embed_g1(const LieCrossedModule& cm, const Vec& u) {
  Vec r(cm.dim0() + cm.dim1());
  std::copy(u.begin(), u.end(), r.begin() + static_cast<std::ptrdiff_t>(cm.dim0()));
  return r;
}

Multivector embed_g1(const LieCrossedModule& cm, const Multivector& w) {
  std::size_t n = cm.dim0();
  Multivector out(n + cm.dim1(), w.grade());
  const auto& sets = index_sets(w.dim(), w.grade());
  for (std::size_t r = 0; r < sets.size(); ++r) {
    if (w.coeffs()[r].is_zero()) continue;
    IndexSet shifted = sets[r];
    for (auto& i : shifted) i += n;
    out.add_term(std::move(shifted), w.coeffs()[r]);
  }
  return out;
}

}  // namespace crossmod
