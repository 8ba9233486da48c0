#include "hesnil/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "hesnil/error.hpp"
#include "hesnil/nilpotency.hpp"

namespace hesnil {

GaussianRational bilinear(const ScalarVector& a, const ScalarVector& b) {
  if (a.size() != b.size()) throw DomainError("bilinear: length mismatch");
  GaussianRational s;
  for (std::size_t i = 0; i < a.size(); ++i) s.add_product(a[i], b[i]);
  return s;
}

IsotropicSet::IsotropicSet(std::size_t n, std::vector<ScalarVector> vectors,
                           bool pairwise_orthogonal)
    : n_(n), vectors_(std::move(vectors)), pairwise_orthogonal_(pairwise_orthogonal) {
  for (const ScalarVector& v : vectors_) {
    if (v.size() != n_) throw DomainError("IsotropicSet: vector length differs from arity");
    if (!bilinear(v, v).is_zero()) throw DomainError("IsotropicSet: vector is not isotropic");
  }
  if (pairwise_orthogonal_ && !is_pairwise_orthogonal()) {
    throw DomainError("IsotropicSet: vectors are not pairwise orthogonal");
  }
}

bool IsotropicSet::is_pairwise_orthogonal() const {
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    for (std::size_t j = i + 1; j < vectors_.size(); ++j) {
      if (!bilinear(vectors_[i], vectors_[j]).is_zero()) return false;
    }
  }
  return true;
}

Poly linear_form(const ScalarVector& alpha) {
  const std::size_t n = alpha.size();
  std::vector<Poly::Term> terms;
  for (std::size_t i = 0; i < n; ++i) terms.push_back({Monomial::unit(n, i), alpha[i]});
  return Poly::from_terms(n, std::move(terms));
}

Poly w_construction(const IsotropicSet& xi, unsigned d) {
  if (d < 2) throw DomainError("w_construction: d must be >= 2");
  if (!xi.is_pairwise_orthogonal()) {
    throw DomainError("w_construction: vectors are not pairwise orthogonal");
  }
  Poly out(xi.arity());
  for (const ScalarVector& beta : xi.vectors()) out += pow(linear_form(beta), d);
  return out;
}

Poly w_tilde_construction(const std::vector<IsotropicSet>& sets, unsigned max_degree) {
  if (sets.empty()) return Poly(0);
  const std::size_t n = sets.front().arity();
  std::vector<ScalarVector> all;
  for (const IsotropicSet& s : sets) {
    if (s.arity() != n) throw DomainError("w_tilde_construction: arity mismatch");
    all.insert(all.end(), s.vectors().begin(), s.vectors().end());
  }
  // Validates cross-set orthogonality.
  const IsotropicSet combined(n, std::move(all), true);
  (void)combined;
  Poly out(n);
  for (std::size_t m = 1; m <= sets.size(); ++m) {
    const auto degree = static_cast<unsigned>(m + 1);
    if (degree > max_degree) break;
    out += w_construction(sets[m - 1], degree);
  }
  return out;
}

Poly ug_construction(const Poly& g, const IsotropicSet& betas) {
  if (g.arity() != betas.size()) {
    throw DomainError("ug_construction: g needs one variable per vector");
  }
  if (!betas.is_pairwise_orthogonal()) {
    throw DomainError("ug_construction: vectors are not pairwise orthogonal");
  }
  const ScalarMatrix matrix(betas.vectors().begin(), betas.vectors().end());
  if (matrix.empty()) return Poly::constant(betas.arity(), g.constant_term());
  return substitute_linear(g, matrix);
}

Poly pg_construction(const Poly& g) {
  const std::size_t n = g.arity();
  ScalarMatrix matrix(n, ScalarVector(2 * n));
  for (std::size_t j = 0; j < n; ++j) {
    matrix[j][j] = 1;
    matrix[j][n + j] = GaussianRational::i();
  }
  if (n == 0) return g;
  return substitute_linear(g, matrix);
}

PHResult ph_construction(const PolyVector& h) {
  const std::size_t n = h.size();
  if (h.arity() != n) throw DomainError("ph_construction: H must map C^n to C^n");
  PHResult out{Poly(2 * n), true};
  for (std::size_t i = 0; i < n; ++i) {
    if (h[i].is_zero()) continue;
    out.p += mul(Poly::variable(2 * n, n + i), pg_construction(h[i]));
  }
  if (n > 0) out.jh_nilpotent = is_nilpotent(jacobian(h));
  return out;
}

PsiData psi_data(const IsotropicSet& alphas, unsigned d) {
  if (d < 2) throw DomainError("psi_data: d must be >= 2");
  const std::size_t k = alphas.size();
  PsiData out{ScalarMatrix(k, ScalarVector(k)), PolyMatrix(k, k, alphas.arity()), d};
  std::vector<Poly> powers;
  for (const ScalarVector& a : alphas.vectors()) powers.push_back(pow(linear_form(a), d - 2));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      out.a[i][j] = bilinear(alphas[i], alphas[j]);
      out.psi(i, j) = out.a[i][j] * powers[j];
    }
  }
  return out;
}

bool Crit2Result::traces_agree() const {
  return std::all_of(trace_pairs.begin(), trace_pairs.end(),
                     [](const auto& pr) { return pr.first == pr.second; });
}

bool Crit2Result::hn_consequences_hold() const {
  if (!hn) return true;
  if (!det_a || !det_a->is_zero()) return false;
  if (!p_at_alphas || !p_at_alphas->is_zero()) return false;
  return std::all_of(gram_sums.begin(), gram_sums.end(),
                     [](const Poly& g) { return g.is_zero(); });
}

Crit2Result crit2_check(const IsotropicSet& alphas, unsigned d, unsigned m_max) {
  if (d < 2) throw DomainError("crit2_check: d must be >= 2");
  const std::size_t n = alphas.arity();
  const std::size_t k = alphas.size();
  Crit2Result out;
  std::vector<Poly> h;
  out.p = Poly(n);
  for (const ScalarVector& a : alphas.vectors()) {
    h.push_back(linear_form(a));
    out.p += pow(h.back(), d);
  }
  const PsiData psi = psi_data(alphas, d);
  const PolyMatrix hes = hessian(out.p);
  PolyMatrix hes_power = PolyMatrix::identity(n, n);
  PolyMatrix psi_power = PolyMatrix::identity(k, n);
  const GaussianRational dd = GaussianRational(static_cast<long>(d) * (static_cast<long>(d) - 1));
  for (unsigned m = 1; m <= m_max; ++m) {
    hes_power = hes_power * hes;
    psi_power = psi_power * psi.psi;
    out.trace_pairs.emplace_back(trace(hes_power), pow(dd, m) * trace(psi_power));
  }
  out.hn = is_hn(out.p).is_hn();
  if (out.hn) {
    out.det_a = scalar_determinant(psi.a);
    for (unsigned m = 2; m <= d; ++m) {
      Poly sum(n);
      std::vector<Poly> hp;
      for (std::size_t i = 0; i < k; ++i) hp.push_back(pow(h[i], d - m));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          const GaussianRational c = pow(psi.a[i][j], m);
          if (c.is_zero()) continue;
          sum += c * mul(hp[i], hp[j]);
        }
      }
      out.gram_sums.push_back(std::move(sum));
    }
    GaussianRational total;
    for (const ScalarVector& a : alphas.vectors()) total += eval(out.p, a);
    out.p_at_alphas = total;
  }
  return out;
}

namespace {

GaussianRational random_gaussian_integer(std::mt19937_64& rng, long bound, bool nonzero) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (;;) {
    GaussianRational g(mpq_class(dist(rng)), mpq_class(dist(rng)));
    if (!nonzero || !g.is_zero()) return g;
  }
}

}  // namespace

IsotropicSet sample_isotropic(std::size_t n, std::size_t count, std::uint64_t seed,
                              bool pairwise_orthogonal) {
  if (n < 2) throw DomainError("sample_isotropic: n must be >= 2");
  if (pairwise_orthogonal && count > n / 2) {
    throw DomainError("sample_isotropic: at most floor(n/2) orthogonal vectors are sampled");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<ScalarVector> vectors;
  const GaussianRational i = GaussianRational::i();
  if (pairwise_orthogonal) {
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t j = 0; j < count; ++j) {
      ScalarVector v(n);
      const GaussianRational c = random_gaussian_integer(rng, 2, true);
      const bool flip = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
      v[perm[2 * j]] = c;
      v[perm[2 * j + 1]] = flip ? -(c * i) : c * i;
      vectors.push_back(std::move(v));
    }
    return IsotropicSet(n, std::move(vectors), true);
  }
  // x_1..x_{n-2} free with s = sum x_j^2; the last two coordinates form a
  // hyperbolic pair: x_{n-1} + i x_n = w and x_{n-1} - i x_n = -s/w.
  for (std::size_t j = 0; j < count; ++j) {
    std::shuffle(perm.begin(), perm.end(), rng);
    ScalarVector x(n);
    GaussianRational s;
    for (std::size_t c = 0; c + 2 < n; ++c) {
      x[c] = random_gaussian_integer(rng, 2, false);
      s.add_product(x[c], x[c]);
    }
    const GaussianRational w = random_gaussian_integer(rng, 2, true);
    const GaussianRational half = GaussianRational(mpq_class(1, 2));
    x[n - 2] = half * (w - s / w);
    x[n - 1] = half * (w + s / w) / i;
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) x[n - 1] = -x[n - 1];
    ScalarVector v(n);
    for (std::size_t c = 0; c < n; ++c) v[perm[c]] = x[c];
    vectors.push_back(std::move(v));
  }
  return IsotropicSet(n, std::move(vectors), false);
}

GaussianRational scalar_determinant(ScalarMatrix m) {
  const std::size_t k = m.size();
  GaussianRational det(1);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m[pivot][col].is_zero()) ++pivot;
    if (pivot == k) return GaussianRational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const GaussianRational inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < k; ++r) {
      if (m[r][col].is_zero()) continue;
      const GaussianRational factor = m[r][col] * inv;
      for (std::size_t c = col; c < k; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

}  // namespace hesnil
