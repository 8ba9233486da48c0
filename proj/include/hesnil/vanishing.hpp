#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hesnil/corpus.hpp"
#include "hesnil/poly.hpp"

namespace hesnil {

// ((d-1)^{n-1} - (d-1)) / (d-2); d >= 3.
mpq_class alpha_bound(std::size_t n, unsigned d);

// Cutoff used in reports: alpha_bound for d >= 3. For d = 2, grad P is linear
// with nilpotent matrix A, Q_[m] = z^T A^m z / 2 and so n - 2 is exact.
mpq_class effective_bound(std::size_t n, unsigned d);

struct ExperimentConfig {
  std::size_t n = 0;
  unsigned d = 0;
  std::string kind;
  Json params = Json::object();
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t t_order = 0;
  std::optional<unsigned> z_degree;
  std::string out;                // empty: standard output
  std::string format = "json";    // json | csv
  std::size_t parallelism = 1;
  std::size_t window = 3;

  // Parses and validates; throws DomainError with a readable message.
  static ExperimentConfig from_json(const Json& j);
  void validate() const;
};

// For homogeneous HN P of degree >= 3:
//   sigma2[m]      : sigma^2(D) Lap^m P^{m+1} == 0
//   gradient[i][m] : (dP/dz_i)(D) Lap^m P^{m+1} == 0
// for m = 0..m_max. Throws HypothesisError otherwise.
struct IsotropyChecks {
  std::vector<bool> sigma2;
  std::vector<std::vector<bool>> gradient;
  bool all_pass() const;
};
IsotropyChecks isotropy_check(const Poly& p, unsigned m_max);

// For homogeneous HN P:
//   p_of_d_q[m-1] : P(D) Q_[m] == 0 for m = 1..M
//   ideal         : d >= 3: (Lap^l P^k)(D) Lap^m P^{m+1} == 0 for
//                   (k,l) in {(1,0),(2,0),(2,1)}, m = 0..2;
//                   d == 2: f(D) Lap^m P^{m+1} == 0 for f in {P, sigma^2}, m = 0..2.
struct PdQtChecks {
  std::vector<bool> p_of_d_q;
  std::vector<bool> ideal;
  bool all_pass() const;
};
PdQtChecks pd_qt_check(const Poly& p, std::size_t t_order);

struct VanishingReport {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  Json provenance = Json::object();
  bool hn_verdict = false;
  std::vector<bool> vanishing_flags;   // m = 1..M: Lap^m P^{m+1} == 0
  std::size_t deg_t = 0;
  std::string bound;                   // rational, as text
  std::optional<bool> bound_respected; // null: no computed m beyond the bound
  // null entries: check not applicable to this polynomial.
  std::optional<bool> sigma2;          // sigma^2(D) annihilates the window
  std::optional<bool> gradient;        // (dP/dz_i)(D) annihilates the window
  std::optional<bool> p_of_d_q;        // P(D) Q_t == 0
  std::optional<bool> ideal;           // ideal spot-checks (or degree-2 variant)
  // Consistency checks.
  bool verdicts_agree = true;               // trace and Laplacian criteria agree
  std::optional<bool> laplacian_powers;     // Lap^m P^m == 0 for m <= min(M, n)
  std::optional<bool> deg_t_matches_flags;  // Q_[m+1] = Lap^m P^{m+1} / (2^m m!(m+1)!)
  std::optional<bool> window_consistent;    // shifted-window implication

  bool theorem_checks_pass() const;
  bool conjecture_flagged() const { return bound_respected.has_value() && !*bound_respected; }
};

// Full analysis of one polynomial; d is the degree used for the bound and
// t_order the number M of Laplacian-window indices.
VanishingReport analyze_polynomial(const GeneratedPoly& gen, std::size_t n, unsigned d,
                                   std::size_t t_order, std::size_t window = 3);
VanishingReport run_trial(const ExperimentConfig& cfg, std::size_t trial);
// Reports in trial order regardless of parallelism.
std::vector<VanishingReport> run_vanishing(const ExperimentConfig& cfg);
// 0: all theorem-level checks passed; 2: one failed; 3: only a conjecture
// flag was raised.
int exit_code(const std::vector<VanishingReport>& reports);

Json report_to_json(const VanishingReport& r);
VanishingReport report_from_json(const Json& j);
std::vector<VanishingReport> reports_from_json(const Json& j);

// CSV columns m1..mM come from t_order, so an empty list still yields the
// header line.
void emit_report(const std::vector<VanishingReport>& reports, const std::string& format,
                 std::size_t t_order, std::ostream& os);
void emit_report(const std::vector<VanishingReport>& reports, const std::string& format,
                 std::size_t t_order, const std::string& path);

}  // namespace hesnil
