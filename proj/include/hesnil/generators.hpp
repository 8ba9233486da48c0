#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hesnil/diffops.hpp"
#include "hesnil/poly.hpp"

namespace hesnil {

using ScalarVector = std::vector<GaussianRational>;

// <a, b> = sum_i a_i b_i (bilinear; no conjugation).
GaussianRational bilinear(const ScalarVector& a, const ScalarVector& b);

// Vectors alpha in Q(i)^n with <alpha, alpha> = 0. The constructor checks
// isotropy, and pairwise orthogonality when the flag is set; violations
// throw DomainError.
class IsotropicSet {
 public:
  IsotropicSet(std::size_t n, std::vector<ScalarVector> vectors, bool pairwise_orthogonal);

  std::size_t arity() const { return n_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<ScalarVector>& vectors() const { return vectors_; }
  const ScalarVector& operator[](std::size_t i) const { return vectors_[i]; }
  bool pairwise_orthogonal() const { return pairwise_orthogonal_; }
  // Checks orthogonality directly, whatever the flag says.
  bool is_pairwise_orthogonal() const;

 private:
  std::size_t n_;
  std::vector<ScalarVector> vectors_;
  bool pairwise_orthogonal_;
};

// h_alpha(z) = <alpha, z>.
Poly linear_form(const ScalarVector& alpha);

// sum_i h_{beta_i}^d over a pairwise-orthogonal set; d >= 2.
Poly w_construction(const IsotropicSet& xi, unsigned d);
// sum_m W[Xi_m, m+1] over sets[m-1], keeping only degrees m+1 <= max_degree.
// All vectors across all sets must be mutually orthogonal.
Poly w_tilde_construction(const std::vector<IsotropicSet>& sets, unsigned max_degree);
// g(h_{beta_1}(z), ..., h_{beta_k}(z)) with g in k = betas.size() variables.
Poly ug_construction(const Poly& g, const IsotropicSet& betas);
// g(u_1 + i v_1, ..., u_n + i v_n) as a polynomial in 2n variables.
Poly pg_construction(const Poly& g);

struct PHResult {
  Poly p;                 // sum_i v_i H_i(u + i v), 2n variables
  bool jh_nilpotent = false;
};
PHResult ph_construction(const PolyVector& h);

struct PsiData {
  ScalarMatrix a;   // Gram matrix <alpha_i, alpha_j>
  PolyMatrix psi;   // a[i][j] h_{alpha_j}^{d-2}
  unsigned d = 0;
};
PsiData psi_data(const IsotropicSet& alphas, unsigned d);

// Results for P = sum_i h_{alpha_i}^d.
struct Crit2Result {
  Poly p;
  // (Tr Hes^m P, (d(d-1))^m Tr Psi^m) for m = 1..m_max.
  std::vector<std::pair<Poly, Poly>> trace_pairs;
  bool hn = false;
  // Filled only when P is HN.
  std::optional<GaussianRational> det_a;
  // sum_{i,j} <alpha_i,alpha_j>^m h_i^{d-m} h_j^{d-m}, for m = 2..d.
  std::vector<Poly> gram_sums;
  // sum_i P(alpha_i).
  std::optional<GaussianRational> p_at_alphas;

  bool traces_agree() const;
  // For HN P: det A = 0, every gram sum vanishes and sum P(alpha_i) = 0.
  bool hn_consequences_hold() const;
};
Crit2Result crit2_check(const IsotropicSet& alphas, unsigned d, unsigned m_max);

// Deterministic random isotropic vectors with small Gaussian-integer
// entries. Orthogonal families use disjoint coordinate pairs and are limited
// to floor(n/2) vectors.
IsotropicSet sample_isotropic(std::size_t n, std::size_t count, std::uint64_t seed,
                              bool pairwise_orthogonal);

// Exact determinant over Q(i) by Gaussian elimination.
GaussianRational scalar_determinant(ScalarMatrix m);

}  // namespace hesnil
