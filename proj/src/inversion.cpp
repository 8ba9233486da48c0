#include "hesnil/inversion.hpp"

#include "hesnil/error.hpp"
#include "hesnil/nilpotency.hpp"

namespace hesnil {

namespace {

void require_order_two(const Poly& p, const char* who) {
  if (p.order() < 2) {
    throw DomainError(std::string(who) + ": P must have order >= 2");
  }
}

void require_hn(const Poly& p, const char* who) {
  if (!is_hn(p).is_hn()) {
    throw HypothesisError(std::string(who) + ": P is not Hessian nilpotent");
  }
}

TGraded constant_series(std::size_t arity, std::size_t t_order, const GaussianRational& c,
                        std::optional<unsigned> z_trunc) {
  std::vector<Poly> coeffs(t_order, Poly(arity));
  if (t_order > 0) coeffs[0] = Poly::constant(arity, c);
  return TGraded(std::move(coeffs), z_trunc);
}

TGraded laplacian_series(const TGraded& q, unsigned k = 1) {
  return q.map([k](const Poly& p) { return laplacian_iter(p, k); });
}

}  // namespace

std::string to_string(InversionMethod method) {
  switch (method) {
    case InversionMethod::kGeneral: return "general";
    case InversionMethod::kHnRecurrence: return "hn";
    case InversionMethod::kClosedForm: return "closed";
    case InversionMethod::kFixedPoint: return "fixed-point";
  }
  return "unknown";
}

InversionMethod inversion_method_from_string(const std::string& name) {
  if (name == "general") return InversionMethod::kGeneral;
  if (name == "hn") return InversionMethod::kHnRecurrence;
  if (name == "closed") return InversionMethod::kClosedForm;
  if (name == "fixed-point") return InversionMethod::kFixedPoint;
  throw DomainError("unknown inversion method '" + name + "'");
}

std::size_t DeformedPair::deg_t() const { return q.degree_t().value_or(0); }

std::optional<std::size_t> DeformedPair::first_vanishing_index() const {
  for (std::size_t j = 0; j < q.t_order(); ++j) {
    if (q[j].is_zero()) return j + 1;
  }
  return std::nullopt;
}

DeformedPair invert_general(const Poly& p, std::size_t t_order) {
  require_order_two(p, "invert_general");
  const std::size_t n = p.arity();
  std::vector<Poly> q;
  std::vector<PolyVector> grads;
  for (std::size_t m = 1; m <= t_order; ++m) {
    Poly qm(n);
    if (m == 1) {
      qm = p;
    } else {
      for (std::size_t k = 1; 2 * k <= m; ++k) {
        const std::size_t l = m - k;
        Poly pair(n);
        for (std::size_t i = 0; i < n; ++i) {
          if (grads[k - 1][i].is_zero() || grads[l - 1][i].is_zero()) continue;
          pair += mul(grads[k - 1][i], grads[l - 1][i]);
        }
        qm += (k == l) ? pair : GaussianRational(2) * pair;
      }
      qm *= GaussianRational(1) / GaussianRational(2 * static_cast<long>(m - 1));
    }
    grads.push_back(grad(qm));
    q.push_back(std::move(qm));
  }
  TGraded series(n, 0);
  if (!q.empty()) series = TGraded(std::move(q));
  return {p, std::move(series), InversionMethod::kGeneral};
}

DeformedPair invert_hn(const Poly& p, std::size_t t_order) {
  require_order_two(p, "invert_hn");
  require_hn(p, "invert_hn");
  const std::size_t n = p.arity();
  std::vector<Poly> q;
  for (std::size_t m = 1; m <= t_order; ++m) {
    if (m == 1) {
      q.push_back(p);
      continue;
    }
    Poly sum(n);
    for (std::size_t k = 1; 2 * k <= m; ++k) {
      const std::size_t l = m - k;
      if (q[k - 1].is_zero() || q[l - 1].is_zero()) continue;
      Poly prod = mul(q[k - 1], q[l - 1]);
      sum += (k == l) ? prod : GaussianRational(2) * prod;
    }
    Poly qm = laplacian(sum);
    qm *= GaussianRational(1) / GaussianRational(4 * static_cast<long>(m - 1));
    q.push_back(std::move(qm));
  }
  TGraded series(n, 0);
  if (!q.empty()) series = TGraded(std::move(q));
  return {p, std::move(series), InversionMethod::kHnRecurrence};
}

DeformedPair invert_closed(const Poly& p, std::size_t t_order) {
  require_order_two(p, "invert_closed");
  require_hn(p, "invert_closed");
  TGraded series = qt_power(p, 1, t_order);
  return {p, std::move(series), InversionMethod::kClosedForm};
}

TGraded qt_power(const Poly& p, unsigned k, std::size_t t_order) {
  if (k < 1) throw DomainError("qt_power: k must be >= 1");
  require_order_two(p, "qt_power");
  require_hn(p, "qt_power");
  std::vector<Poly> coeffs;
  Poly power = pow(p, k);  // P^{m+k}
  for (std::size_t m = 0; m < t_order; ++m) {
    if (m > 0) power = mul(power, p);
    const auto mm = static_cast<unsigned>(m);
    const GaussianRational scale =
        factorial(k) / (pow(GaussianRational(2), mm) * factorial(mm) * factorial(mm + k));
    coeffs.push_back(scale * laplacian_iter(power, mm));
  }
  if (coeffs.empty()) return TGraded(p.arity(), 0);
  return TGraded(std::move(coeffs));
}

TGraded evaluate_series(const Poly& f, const std::vector<TGraded>& args) {
  if (args.size() != f.arity()) throw DomainError("evaluate_series: argument count mismatch");
  if (args.empty()) throw DomainError("evaluate_series: no arguments");
  const std::size_t out_arity = args[0].arity();
  const std::size_t order = args[0].t_order();
  const auto z_trunc = args[0].z_trunc();
  std::vector<std::vector<TGraded>> powers(args.size());
  auto power_of = [&](std::size_t j, unsigned e) -> const TGraded& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(constant_series(out_arity, order, 1, z_trunc));
    while (cache.size() <= e) cache.push_back(cache.back() * args[j]);
    return cache[e];
  };
  TGraded result(out_arity, order, z_trunc);
  for (const Poly::Term& t : f.terms()) {
    TGraded term = constant_series(out_arity, order, t.coeff, z_trunc);
    for (std::size_t j = 0; j < args.size(); ++j) {
      if (t.mono[j] > 0) term = term * power_of(j, t.mono[j]);
    }
    result += term;
  }
  return result;
}

std::vector<PolyVector> invert_fixed_point(const Poly& p, std::size_t t_order,
                                           std::optional<unsigned> z_degree) {
  require_order_two(p, "invert_fixed_point");
  const std::size_t n = p.arity();
  const std::size_t order = t_order + 1;  // t^0..t^M
  const PolyVector dp = grad(p);
  std::vector<TGraded> identity;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Poly> c(order, Poly(n));
    c[0] = Poly::variable(n, i);
    identity.emplace_back(std::move(c), z_degree);
  }
  std::vector<TGraded> g = identity;
  // Round r makes G exact modulo t^{r+1}.
  for (std::size_t round = 0; round < t_order; ++round) {
    std::vector<TGraded> next;
    next.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      TGraded step = evaluate_series(dp[i], g).times_t().truncated_t(order);
      next.push_back(identity[i] + step);
    }
    g = std::move(next);
  }
  std::vector<PolyVector> out;
  for (std::size_t j = 0; j < order; ++j) {
    PolyVector v(n, n);
    for (std::size_t i = 0; i < n; ++i) v[i] = g[i][j];
    out.push_back(std::move(v));
  }
  return out;
}

DeformedPair pair_from_fixed_point(const Poly& p, const std::vector<PolyVector>& g) {
  std::vector<Poly> q;
  for (std::size_t m = 1; m < g.size(); ++m) q.push_back(potential_from_gradient(g[m]));
  TGraded series(p.arity(), 0);
  if (!q.empty()) series = TGraded(std::move(q));
  return {p, std::move(series), InversionMethod::kFixedPoint};
}

std::vector<TGraded> compose_check(const Poly& p, const DeformedPair& pair, std::size_t t_order,
                                   std::optional<unsigned> z_degree) {
  require_same_arity(p, pair.source);
  if (pair.q.t_order() < t_order) {
    throw DomainError("compose_check: pair is known to fewer t-powers than requested");
  }
  const std::size_t n = p.arity();
  const std::size_t order = t_order + 1;
  std::vector<TGraded> g;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Poly> c(order, Poly(n));
    c[0] = Poly::variable(n, i);
    for (std::size_t j = 1; j < order; ++j) c[j] = partial(pair.q[j - 1], i);
    g.emplace_back(std::move(c), z_degree);
  }
  const PolyVector dp = grad(p);
  std::vector<TGraded> residual;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Poly> zc(order, Poly(n));
    zc[0] = Poly::variable(n, i);
    TGraded z_i(std::move(zc), z_degree);
    TGraded pushed = evaluate_series(dp[i], g).times_t().truncated_t(order);
    residual.push_back(g[i] - z_i - pushed);
  }
  return residual;
}

TGraded burgers_residual(const DeformedPair& pair, std::optional<unsigned> z_degree) {
  const TGraded q = pair.q.truncated(pair.q.t_order(), z_degree);
  if (q.t_order() < 1) throw DomainError("burgers_residual: empty series");
  TGraded half_norm(q.arity(), q.t_order() - 1, q.z_trunc());
  for (std::size_t i = 0; i < q.arity(); ++i) {
    const TGraded di =
        q.map([i](const Poly& c) { return partial(c, i); }).truncated_t(q.t_order() - 1);
    half_norm += di * di;
  }
  half_norm *= GaussianRational(1) / GaussianRational(2);
  return q.derivative_t() - half_norm;
}

HeatResidual heat_residual(const Poly& p, const GaussianRational& s, std::size_t t_order,
                           unsigned z_degree) {
  if (s.is_zero()) throw DomainError("heat_residual: s must be nonzero");
  require_hn(p, "heat_residual");
  const DeformedPair pair = invert_general(p, t_order + 1);
  // Lap lowers degree by two, so U is carried two degrees further.
  const TGraded u = exp_truncated(pair.q.truncated(t_order + 1, z_degree + 2), s);
  TGraded residual = u.derivative_t() -
                     laplacian_series(u).truncated_t(t_order) *
                         (GaussianRational(1) / (GaussianRational(2) * s));
  residual = residual.truncated(t_order, z_degree);
  const bool initial_ok = u[0] == exp_truncated(p, s, z_degree + 2);
  return {std::move(residual), initial_ok};
}

TGraded exp_formula_check(const Poly& p, const GaussianRational& s, std::size_t t_order,
                          unsigned z_degree) {
  if (s.is_zero()) throw DomainError("exp_formula_check: s must be nonzero");
  require_hn(p, "exp_formula_check");
  const DeformedPair pair = invert_general(p, t_order);
  const TGraded lhs = exp_truncated(pair.q.truncated(t_order, z_degree), s);
  const unsigned carried =
      z_degree + 2 * static_cast<unsigned>(t_order > 0 ? t_order - 1 : 0);
  Poly lap_k = exp_truncated(p, s, carried);
  std::vector<Poly> rhs;
  for (std::size_t k = 0; k < t_order; ++k) {
    if (k > 0) lap_k = laplacian(lap_k);
    const auto kk = static_cast<unsigned>(k);
    const GaussianRational scale =
        GaussianRational(1) / (pow(GaussianRational(2) * s, kk) * factorial(kk));
    rhs.push_back(truncate_total_degree(scale * lap_k, z_degree));
  }
  if (rhs.empty()) return TGraded(p.arity(), 0, z_degree);
  return lhs - TGraded(std::move(rhs), z_degree);
}

Poly tilde_operator(const Poly& p, const Poly& lap_p_squared, const Poly& f) {
  Poly out = GaussianRational(1) / GaussianRational(2) * laplacian(f);
  out += lambda_op(p, f);
  out += GaussianRational(1) / GaussianRational(4) * mul(lap_p_squared, f);
  return out;
}

TGraded exp_tilde_check(const Poly& p, std::size_t t_order, unsigned z_degree) {
  require_hn(p, "exp_tilde_check");
  const std::size_t n = p.arity();
  const DeformedPair pair = invert_general(p, t_order);
  std::vector<Poly> tilde = pair.q.coeffs();
  if (!tilde.empty()) tilde[0] = Poly(n);
  TGraded lhs(n, 0, z_degree);
  if (!tilde.empty()) lhs = exp_truncated(TGraded(std::move(tilde), z_degree), 1);

  const Poly lap_p2 = laplacian(mul(p, p));
  std::vector<Poly> rhs;
  Poly f = Poly::constant(n, 1);
  for (std::size_t j = 0; j < t_order; ++j) {
    // A^j 1 is needed exactly up to z_degree + 2 (t_order - 1 - j): each later
    // Laplacian pulls two higher degrees down.
    const unsigned cap = z_degree + 2 * static_cast<unsigned>(t_order - 1 - j);
    if (j > 0) f = truncate_total_degree(tilde_operator(p, lap_p2, f), cap);
    const GaussianRational scale = GaussianRational(1) / factorial(static_cast<unsigned>(j));
    rhs.push_back(truncate_total_degree(scale * f, z_degree));
  }
  if (rhs.empty()) return lhs;
  return lhs - TGraded(std::move(rhs), z_degree);
}

std::pair<Poly, Poly> binomial_identity_check(const Poly& p, unsigned alpha, unsigned beta,
                                              unsigned m) {
  if (alpha < 1 || beta < 1) throw DomainError("binomial_identity_check: alpha, beta >= 1");
  Poly lhs = laplacian_iter(pow(p, m + alpha + beta), m);
  Poly rhs(p.arity());
  for (unsigned k = 0; k <= m; ++k) {
    const unsigned l = m - k;
    const Poly left = laplacian_iter(pow(p, k + alpha), k);
    if (left.is_zero()) continue;
    const Poly right = laplacian_iter(pow(p, l + beta), l);
    rhs += binomial(m, k) * binomial(m + alpha + beta, k + alpha) * mul(left, right);
  }
  rhs *= GaussianRational(1) / binomial(alpha + beta, alpha);
  return {std::move(lhs), std::move(rhs)};
}

std::pair<TGraded, TGraded> laplacian_power_flow_check(const DeformedPair& pair, unsigned k,
                                                       unsigned m) {
  if (m < 1) throw DomainError("laplacian_power_flow_check: m must be >= 1");
  const TGraded& q = pair.q;
  if (q.t_order() < 1) throw DomainError("laplacian_power_flow_check: empty series");
  const std::size_t order = q.t_order() - 1;
  const TGraded qm = pow(q, m);
  TGraded lhs = laplacian_series(qm, k).derivative_t();
  TGraded rhs = laplacian_series(qm * q, k + 1).truncated_t(order) *
                    (GaussianRational(1) / GaussianRational(2 * (static_cast<long>(m) + 1))) -
                laplacian_series(qm * laplacian_series(q), k).truncated_t(order) *
                    (GaussianRational(1) / GaussianRational(2));
  return {std::move(lhs), std::move(rhs)};
}

std::pair<TGraded, TGraded> t_derivative_power_check(const DeformedPair& pair, unsigned k,
                                                     unsigned l) {
  if (k < 1 || l < 1) throw DomainError("t_derivative_power_check: k, l >= 1");
  const TGraded& q = pair.q;
  if (q.t_order() < l) throw DomainError("t_derivative_power_check: series too short");
  const std::size_t order = q.t_order() - l;
  TGraded lhs = pow(q, k);
  for (unsigned j = 0; j < l; ++j) lhs = lhs.derivative_t();
  GaussianRational denom = pow(GaussianRational(2), l);
  for (unsigned j = 1; j <= l; ++j) denom *= GaussianRational(static_cast<long>(k + j));
  TGraded rhs = laplacian_series(pow(q, k + l), l).truncated_t(order) *
                (GaussianRational(1) / denom);
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace hesnil
