#include "hesnil/vanishing.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include "hesnil/diffops.hpp"
#include "hesnil/error.hpp"
#include "hesnil/inversion.hpp"
#include "hesnil/nilpotency.hpp"

namespace hesnil {

mpq_class alpha_bound(std::size_t n, unsigned d) {
  if (d < 3) throw DomainError("alpha_bound: d must be >= 3");
  if (n < 1) throw DomainError("alpha_bound: n must be >= 1");
  mpz_class top;
  mpz_ui_pow_ui(top.get_mpz_t(), d - 1, n - 1);
  mpq_class out(top - (d - 1), d - 2);
  out.canonicalize();
  return out;
}

mpq_class effective_bound(std::size_t n, unsigned d) {
  if (d == 2) return mpq_class(static_cast<long>(n) - 2);
  return alpha_bound(n, d);
}

namespace {

std::optional<std::size_t> affordable_t_order(std::size_t n, unsigned d) {
  constexpr long kAffordable = 12;
  const mpq_class bound = effective_bound(n, d);
  mpz_class ceil_bound;
  mpz_cdiv_q(ceil_bound.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  if (ceil_bound + 2 > kAffordable) return std::nullopt;
  return static_cast<std::size_t>(std::max(1L, ceil_bound.get_si() + 2));
}

template <typename T>
T get_or(const Json& j, const char* key, T fallback) {
  return j.contains(key) && !j.at(key).is_null() ? j.at(key).get<T>() : fallback;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const Json& j) {
  ExperimentConfig cfg;
  try {
    cfg.n = j.at("n").get<std::size_t>();
    cfg.d = j.at("d").get<unsigned>();
    const Json& gen = j.at("generator");
    cfg.kind = gen.at("kind").get<std::string>();
    if (gen.contains("params")) cfg.params = gen.at("params");
    cfg.trials = get_or<std::size_t>(j, "trials", 1);
    cfg.seed = get_or<std::uint64_t>(j, "seed", 0);
    cfg.out = get_or<std::string>(j, "out", "");
    cfg.format = get_or<std::string>(j, "format", "json");
    cfg.parallelism = get_or<std::size_t>(j, "parallelism", 1);
    cfg.window = get_or<std::size_t>(j, "window", 3);
    if (j.contains("z_degree") && !j.at("z_degree").is_null()) {
      cfg.z_degree = j.at("z_degree").get<unsigned>();
    }
    if (j.contains("t_order") && !j.at("t_order").is_null()) {
      cfg.t_order = j.at("t_order").get<std::size_t>();
    } else if (cfg.d >= 2) {
      const auto m = affordable_t_order(cfg.n, cfg.d);
      if (!m) throw DomainError("config: bound too large for a default t_order; give t_order");
      cfg.t_order = *m;
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

void ExperimentConfig::validate() const {
  if (n < 2) throw DomainError("config: n must be >= 2");
  if (d < 2) throw DomainError("config: d must be >= 2");
  if (!is_generator_kind(kind)) throw DomainError("config: unknown generator kind '" + kind + "'");
  if ((kind == "pg" || kind == "ph") && n % 2 != 0) {
    throw DomainError("config: kind '" + kind + "' needs an even n");
  }
  if (trials < 1) throw DomainError("config: trials must be >= 1");
  if (t_order < 1) throw DomainError("config: t_order must be >= 1");
  if (format != "json" && format != "csv") throw DomainError("config: format must be json or csv");
  if (parallelism < 1) throw DomainError("config: parallelism must be >= 1");
  const auto needed = affordable_t_order(n, d);
  if (needed && t_order < *needed) {
    throw DomainError("config: t_order must be >= bound + 2 = " + std::to_string(*needed));
  }
}

namespace {

void require_homogeneous_hn(const Poly& p, unsigned min_degree, const char* who) {
  const auto deg = p.homogeneous_degree();
  if (!deg || *deg < min_degree) {
    throw HypothesisError(std::string(who) + ": P must be homogeneous of degree >= " +
                          std::to_string(min_degree));
  }
  if (!is_hn(p).is_hn()) throw HypothesisError(std::string(who) + ": P is not HN");
}

Poly sigma_squared(std::size_t n) {
  Poly s(n);
  for (std::size_t i = 0; i < n; ++i) s += pow(Poly::variable(n, i), 2);
  return s;
}

// Lap^m P^{m+1} for m = 0..m_max.
std::vector<Poly> window_polys(const Poly& p, std::size_t m_max) {
  std::vector<Poly> out;
  Poly power = p;
  for (std::size_t m = 0; m <= m_max; ++m) {
    if (m > 0) power = mul(power, p);
    out.push_back(laplacian_iter(power, static_cast<unsigned>(m)));
  }
  return out;
}

IsotropyChecks isotropy_from_window(const Poly& p, const std::vector<Poly>& window) {
  IsotropyChecks out;
  const PolyVector dp = grad(p);
  out.gradient.assign(p.arity(), {});
  for (const Poly& l : window) {
    out.sigma2.push_back(laplacian(l).is_zero());
    for (std::size_t i = 0; i < p.arity(); ++i) {
      out.gradient[i].push_back(apply_D(dp[i], l).is_zero());
    }
  }
  return out;
}

PdQtChecks pd_qt_from(const Poly& p, const DeformedPair& pair, std::size_t t_order,
                      const std::vector<Poly>& window) {
  PdQtChecks out;
  for (std::size_t m = 0; m < t_order; ++m) out.p_of_d_q.push_back(apply_D(p, pair.q[m]).is_zero());
  std::vector<Poly> ops;
  if (p.homogeneous_degree() == 2u) {
    ops = {p, sigma_squared(p.arity())};
  } else {
    const Poly p2 = mul(p, p);
    ops = {p, p2, laplacian(p2)};
  }
  for (const Poly& f : ops) {
    for (std::size_t m = 0; m <= 2 && m < window.size(); ++m) {
      out.ideal.push_back(apply_D(f, window[m]).is_zero());
    }
  }
  return out;
}

bool all_true(const std::vector<bool>& v) {
  return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
}

}  // namespace

bool IsotropyChecks::all_pass() const {
  return all_true(sigma2) &&
         std::all_of(gradient.begin(), gradient.end(), [](const auto& g) { return all_true(g); });
}

IsotropyChecks isotropy_check(const Poly& p, unsigned m_max) {
  require_homogeneous_hn(p, 3, "isotropy_check");
  return isotropy_from_window(p, window_polys(p, m_max));
}

bool PdQtChecks::all_pass() const { return all_true(p_of_d_q) && all_true(ideal); }

PdQtChecks pd_qt_check(const Poly& p, std::size_t t_order) {
  require_homogeneous_hn(p, 2, "pd_qt_check");
  if (t_order < 1) throw DomainError("pd_qt_check: t_order must be >= 1");
  return pd_qt_from(p, invert_general(p, t_order), t_order, window_polys(p, 2));
}

bool VanishingReport::theorem_checks_pass() const {
  const auto ok = [](const std::optional<bool>& b) { return !b.has_value() || *b; };
  return hn_verdict && verdicts_agree && ok(laplacian_powers) && ok(deg_t_matches_flags) &&
         ok(window_consistent) && ok(sigma2) && ok(gradient) && ok(p_of_d_q) && ok(ideal);
}

VanishingReport run_trial(const ExperimentConfig& cfg, std::size_t trial) {
  const std::uint64_t seed = cfg.seed + trial;
  const GeneratedPoly gen = generate_polynomial(cfg.kind, cfg.n, cfg.d, seed, cfg.params);
  VanishingReport r = analyze_polynomial(gen, cfg.n, cfg.d, cfg.t_order, cfg.window);
  r.trial = trial;
  r.seed = seed;
  return r;
}

VanishingReport analyze_polynomial(const GeneratedPoly& gen, std::size_t bound_n, unsigned d,
                                   std::size_t t_order, std::size_t window_width) {
  VanishingReport r;
  const Poly& p = gen.p;
  const std::size_t n = p.arity();
  const std::size_t big_m = t_order;
  if (big_m < 1) throw DomainError("analyze_polynomial: t_order must be >= 1");
  r.provenance = gen.provenance;

  const auto zero = [](const Poly& x) { return x.is_zero(); };
  const std::vector<Poly> traces = trace_powers(p);
  const std::vector<Poly> laps = laplacian_powers(p);
  const bool vm = std::all_of(traces.begin(), traces.end(), zero);
  const bool vl = std::all_of(laps.begin(), laps.end(), zero);
  r.hn_verdict = vm;
  r.verdicts_agree = vm == vl;

  // window[m] = Lap^m P^{m+1}, m = 0..M.
  const std::vector<Poly> window = window_polys(p, big_m);
  for (std::size_t m = 1; m <= big_m; ++m) r.vanishing_flags.push_back(window[m].is_zero());

  const DeformedPair pair = invert_general(p, big_m + 1);
  for (std::size_t m = 1; m <= big_m; ++m) {
    if (!pair.q[m].is_zero()) r.deg_t = m;
  }

  const mpq_class bound = effective_bound(bound_n, d);
  r.bound = bound.get_str();
  for (std::size_t m = 1; m <= big_m; ++m) {
    if (mpq_class(static_cast<unsigned long>(m)) <= bound) continue;
    r.bound_respected = r.bound_respected.value_or(true) && r.vanishing_flags[m - 1];
  }

  if (r.hn_verdict) {
    bool ok = true;
    Poly power = Poly::constant(n, 1);
    for (std::size_t m = 1; m <= std::min(big_m, n); ++m) {
      power = mul(power, p);
      ok = ok && laplacian_iter(power, static_cast<unsigned>(m)).is_zero();
    }
    r.laplacian_powers = ok;

    ok = true;
    for (std::size_t m = 1; m <= big_m; ++m) {
      const auto mm = static_cast<unsigned>(m);
      const GaussianRational scale =
          pow(GaussianRational(2), mm) * factorial(mm) * factorial(mm + 1);
      ok = ok && scale * pair.q[m] == window[m];
    }
    r.deg_t_matches_flags = ok;

    // If Lap^j P^{j+k0} vanishes on the last `window` indices j, then
    // Lap^{j+k0-1} P^{j+k0} = Lap^{k0-1}(Lap^j P^{j+k0}) must vanish too; the
    // latter is recomputed directly.
    const std::size_t lo = big_m > window_width ? big_m - window_width : 1;
    for (unsigned k0 = 2; k0 <= 3; ++k0) {
      bool window_zero = true;
      Poly pw = pow(p, static_cast<unsigned>(lo) + k0);
      std::vector<std::size_t> shifted;
      for (std::size_t j = lo; j <= big_m && window_zero; ++j) {
        if (j > lo) pw = mul(pw, p);
        window_zero = laplacian_iter(pw, static_cast<unsigned>(j)).is_zero();
        shifted.push_back(j + k0 - 1);
      }
      if (!window_zero) continue;
      bool implied = true;
      for (std::size_t m : shifted) {
        const Poly direct = m <= big_m ? window[m]
                                       : laplacian_iter(pow(p, static_cast<unsigned>(m + 1)),
                                                        static_cast<unsigned>(m));
        implied = implied && direct.is_zero();
      }
      r.window_consistent = r.window_consistent.value_or(true) && implied;
    }

    const auto hdeg = p.homogeneous_degree();
    if (hdeg && *hdeg >= 2) {
      if (*hdeg >= 3) {
        const std::size_t m_max = std::min<std::size_t>(3, big_m);
        const std::vector<Poly> head(window.begin(), window.begin() + static_cast<long>(m_max) + 1);
        const IsotropyChecks iso = isotropy_from_window(p, head);
        r.sigma2 = all_true(iso.sigma2);
        r.gradient = iso.all_pass();
      }
      const PdQtChecks pd = pd_qt_from(p, pair, big_m, window);
      r.p_of_d_q = all_true(pd.p_of_d_q);
      r.ideal = all_true(pd.ideal);
    }
  }
  return r;
}

std::vector<VanishingReport> run_vanishing(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<VanishingReport> reports(cfg.trials);
  const std::size_t workers = std::min(cfg.parallelism, cfg.trials);
  if (workers <= 1) {
    for (std::size_t t = 0; t < cfg.trials; ++t) reports[t] = run_trial(cfg, t);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t t = next++; t < cfg.trials; t = next++) {
        try {
          reports[t] = run_trial(cfg, t);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return reports;
}

int exit_code(const std::vector<VanishingReport>& reports) {
  bool flagged = false;
  for (const VanishingReport& r : reports) {
    if (!r.theorem_checks_pass()) return 2;
    flagged = flagged || r.conjecture_flagged();
  }
  return flagged ? 3 : 0;
}

namespace {

Json optional_json(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

std::optional<bool> optional_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<bool>();
}

std::string csv_bool(const std::optional<bool>& b) {
  if (!b) return "";
  return *b ? "true" : "false";
}

}  // namespace

Json report_to_json(const VanishingReport& r) {
  Json j;
  j["trial"] = r.trial;
  j["seed"] = r.seed;
  j["provenance"] = r.provenance;
  j["hn_verdict"] = r.hn_verdict;
  Json flags = Json::array();
  for (bool f : r.vanishing_flags) flags.push_back(f);
  j["vanishing_flags"] = flags;
  j["deg_t"] = r.deg_t;
  j["bound"] = r.bound;
  j["bound_respected"] = optional_json(r.bound_respected);
  j["isotropy_pass"] = Json{{"sigma2", optional_json(r.sigma2)},
                            {"gradient", optional_json(r.gradient)},
                            {"p_of_d_q", optional_json(r.p_of_d_q)},
                            {"ideal", optional_json(r.ideal)}};
  j["consistency"] = Json{{"verdicts_agree", r.verdicts_agree},
                          {"laplacian_powers", optional_json(r.laplacian_powers)},
                          {"deg_t_matches_flags", optional_json(r.deg_t_matches_flags)},
                          {"window_consistent", optional_json(r.window_consistent)}};
  return j;
}

VanishingReport report_from_json(const Json& j) {
  VanishingReport r;
  r.trial = j.at("trial").get<std::size_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.provenance = j.at("provenance");
  r.hn_verdict = j.at("hn_verdict").get<bool>();
  for (const Json& f : j.at("vanishing_flags")) r.vanishing_flags.push_back(f.get<bool>());
  r.deg_t = j.at("deg_t").get<std::size_t>();
  r.bound = j.at("bound").get<std::string>();
  r.bound_respected = optional_from(j, "bound_respected");
  const Json& iso = j.at("isotropy_pass");
  r.sigma2 = optional_from(iso, "sigma2");
  r.gradient = optional_from(iso, "gradient");
  r.p_of_d_q = optional_from(iso, "p_of_d_q");
  r.ideal = optional_from(iso, "ideal");
  const Json& c = j.at("consistency");
  r.verdicts_agree = c.at("verdicts_agree").get<bool>();
  r.laplacian_powers = optional_from(c, "laplacian_powers");
  r.deg_t_matches_flags = optional_from(c, "deg_t_matches_flags");
  r.window_consistent = optional_from(c, "window_consistent");
  return r;
}

std::vector<VanishingReport> reports_from_json(const Json& j) {
  std::vector<VanishingReport> out;
  for (const Json& item : j) out.push_back(report_from_json(item));
  return out;
}

void emit_report(const std::vector<VanishingReport>& reports, const std::string& format,
                 std::size_t t_order, std::ostream& os) {
  if (format == "json") {
    Json arr = Json::array();
    for (const VanishingReport& r : reports) arr.push_back(report_to_json(r));
    os << arr.dump(2) << '\n';
    return;
  }
  if (format != "csv") throw DomainError("emit_report: format must be json or csv");
  os << "trial,seed,kind,polynomial,hn_verdict,deg_t,bound,bound_respected,sigma2,gradient,"
        "p_of_d_q,ideal,verdicts_agree,laplacian_powers,deg_t_matches_flags,window_consistent";
  for (std::size_t m = 1; m <= t_order; ++m) os << ",m" << m;
  os << '\n';
  for (const VanishingReport& r : reports) {
    const auto text = [&](const char* key) {
      return r.provenance.contains(key) ? r.provenance.at(key).get<std::string>() : std::string();
    };
    os << r.trial << ',' << r.seed << ',' << text("kind") << ",\"" << text("polynomial") << "\","
       << (r.hn_verdict ? "true" : "false") << ',' << r.deg_t << ',' << r.bound << ','
       << csv_bool(r.bound_respected) << ',' << csv_bool(r.sigma2) << ','
       << csv_bool(r.gradient) << ',' << csv_bool(r.p_of_d_q) << ',' << csv_bool(r.ideal)
       << ',' << (r.verdicts_agree ? "true" : "false") << ','
       << csv_bool(r.laplacian_powers) << ',' << csv_bool(r.deg_t_matches_flags) << ','
       << csv_bool(r.window_consistent);
    for (std::size_t m = 0; m < t_order; ++m) {
      os << ',';
      if (m < r.vanishing_flags.size()) os << (r.vanishing_flags[m] ? "true" : "false");
    }
    os << '\n';
  }
}

void emit_report(const std::vector<VanishingReport>& reports, const std::string& format,
                 std::size_t t_order, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("emit_report: cannot open '" + path + "'");
  emit_report(reports, format, t_order, f);
}

}  // namespace hesnil
