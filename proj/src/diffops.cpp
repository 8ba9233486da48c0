#include "hesnil/diffops.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "hesnil/error.hpp"

namespace hesnil {

PolyVector::PolyVector(std::vector<Poly> entries)
    : arity_(entries.empty() ? 0 : entries[0].arity()), entries_(std::move(entries)) {
  for (const Poly& p : entries_) {
    if (p.arity() != arity_) throw DomainError("PolyVector: entry arity mismatch");
  }
}

bool PolyVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t arity) {
  PolyMatrix m(n, n, arity);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(arity, 1);
  return m;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool PolyMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

namespace {

void require_same_shape(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.arity() != b.arity()) {
    throw DomainError("PolyMatrix: shape mismatch");
  }
}

// Coefficient picked up by d^s z^m: prod_j m_j!/(m_j-s_j)!.
GaussianRational falling(const Monomial& m, const Monomial& s) {
  mpz_class f = 1;
  for (std::size_t j = 0; j < m.arity(); ++j) {
    for (unsigned e = 0; e < s[j]; ++e) f *= m[j] - e;
  }
  return GaussianRational(mpq_class(f));
}

void enumerate_indices(std::size_t n, unsigned k, std::size_t pos,
                       std::vector<Monomial::Exponent>& cur, std::vector<Monomial>& out) {
  if (pos + 1 == n) {
    cur[pos] = static_cast<Monomial::Exponent>(k);
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = k + 1; e-- > 0;) {
    cur[pos] = static_cast<Monomial::Exponent>(e);
    enumerate_indices(n, k - e, pos + 1, cur, out);
  }
}

}  // namespace

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  PolyMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  PolyMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows() || a.arity() != b.arity()) {
    throw DomainError("PolyMatrix: dimension mismatch in product");
  }
  PolyMatrix out(a.rows(), b.cols(), a.arity());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Poly acc(a.arity());
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(r, k).is_zero() || b(k, c).is_zero()) continue;
        acc += mul(a(r, k), b(k, c));
      }
      out(r, c) = std::move(acc);
    }
  }
  return out;
}

PolyMatrix operator*(const GaussianRational& c, const PolyMatrix& a) {
  PolyMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) out(r, k) *= c;
  return out;
}

PolyMatrix pow(const PolyMatrix& a, unsigned k) {
  if (a.rows() != a.cols()) throw DomainError("PolyMatrix: power of a non-square matrix");
  PolyMatrix result = PolyMatrix::identity(a.rows(), a.arity());
  PolyMatrix base = a;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Poly trace(const PolyMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("PolyMatrix: trace of a non-square matrix");
  Poly t(a.arity());
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

Poly determinant(const PolyMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw DomainError("PolyMatrix: determinant of a non-square matrix");
  if (n > 20) throw DomainError("PolyMatrix: determinant limited to 20x20");
  if (n == 0) return Poly::constant(a.arity(), 1);
  // partial[mask] = signed sum over injective assignments of rows
  // 0..popcount(mask)-1 onto the columns in mask.
  std::vector<Poly> partial_sums(std::size_t{1} << n, Poly(a.arity()));
  partial_sums[0] = Poly::constant(a.arity(), 1);
  for (std::uint32_t mask = 0; mask + 1 < (std::uint32_t{1} << n); ++mask) {
    if (partial_sums[mask].is_zero()) continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (std::uint32_t{1} << c)) continue;
      if (a(row, c).is_zero()) continue;
      const int inversions = std::popcount(mask >> (c + 1));
      Poly term = mul(partial_sums[mask], a(row, c));
      if (inversions % 2 != 0) term = -term;
      partial_sums[mask | (std::uint32_t{1} << c)] += term;
    }
  }
  return partial_sums.back();
}

Poly partial(const Poly& p, std::size_t i) {
  if (i >= p.arity()) throw DomainError("partial: variable index out of range");
  std::vector<Poly::Term> out;
  for (const Poly::Term& t : p.terms()) {
    const unsigned e = t.mono[i];
    if (e == 0) continue;
    out.push_back({t.mono.lowered(i), t.coeff * GaussianRational(static_cast<long>(e))});
  }
  // lowering one exponent preserves graded-lex order, from_terms is a no-op sort
  return Poly::from_terms(p.arity(), std::move(out));
}

Poly partial_multi(const Poly& p, const Monomial& s) {
  if (s.arity() != p.arity()) throw DomainError("partial_multi: arity mismatch");
  std::vector<Poly::Term> out;
  for (const Poly::Term& t : p.terms()) {
    if (!t.mono.divisible_by(s)) continue;
    out.push_back({t.mono.quotient(s), t.coeff * falling(t.mono, s)});
  }
  return Poly::from_terms(p.arity(), std::move(out));
}

PolyVector grad(const Poly& p) {
  PolyVector g(p.arity(), p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i) g[i] = partial(p, i);
  return g;
}

PolyMatrix hessian(const Poly& p) {
  const std::size_t n = p.arity();
  PolyMatrix h(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Poly di = partial(p, i);
    for (std::size_t j = i; j < n; ++j) {
      h(i, j) = partial(di, j);
      if (j != i) h(j, i) = h(i, j);
    }
  }
  return h;
}

Poly laplacian(const Poly& p) {
  std::vector<Poly::Term> out;
  for (const Poly::Term& t : p.terms()) {
    for (std::size_t i = 0; i < p.arity(); ++i) {
      const long e = t.mono[i];
      if (e < 2) continue;
      out.push_back({t.mono.lowered(i, 2), t.coeff * GaussianRational(e * (e - 1))});
    }
  }
  return Poly::from_terms(p.arity(), std::move(out));
}

Poly laplacian_iter(const Poly& p, unsigned k) {
  Poly r = p;
  for (unsigned j = 0; j < k && !r.is_zero(); ++j) r = laplacian(r);
  return r;
}

Poly grad_pair(const Poly& f, const Poly& g) {
  require_same_arity(f, g);
  Poly acc(f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i) {
    Poly fi = partial(f, i);
    if (fi.is_zero()) continue;
    Poly gi = partial(g, i);
    if (gi.is_zero()) continue;
    acc += mul(fi, gi);
  }
  return acc;
}

Poly lambda_op(const Poly& p, const Poly& f) { return grad_pair(p, f); }

Poly apply_D(const Poly& f, const Poly& g) {
  require_same_arity(f, g);
  std::vector<Poly::Term> out;
  for (const Poly::Term& tg : g.terms()) {
    for (const Poly::Term& tf : f.terms()) {
      if (tf.mono.degree() > tg.mono.degree()) break;
      if (!tg.mono.divisible_by(tf.mono)) continue;
      out.push_back({tg.mono.quotient(tf.mono), tf.coeff * tg.coeff * falling(tg.mono, tf.mono)});
    }
  }
  return Poly::from_terms(f.arity(), std::move(out));
}

std::pair<Poly, Poly> leibniz_identity_check(const Poly& p, unsigned m) {
  if (m < 1) throw DomainError("leibniz_identity_check: m must be >= 1");
  const Poly pm = pow(p, m);
  Poly lhs = laplacian(mul(pm, p));
  const GaussianRational m1(static_cast<long>(m) + 1);
  Poly rhs = m1 * mul(pm, laplacian(p)) +
             GaussianRational(static_cast<long>(m)) * m1 *
                 mul(pow(p, m - 1), grad_pair(p, p));
  return {std::move(lhs), std::move(rhs)};
}

std::vector<Monomial> multi_indices(std::size_t n, unsigned k) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (k == 0) out.emplace_back(0);
    return out;
  }
  std::vector<Monomial::Exponent> cur(n, 0);
  enumerate_indices(n, k, 0, cur, out);
  return out;
}

GaussianRational multinomial(const Monomial& s) {
  GaussianRational r = factorial(s.degree());
  for (std::size_t j = 0; j < s.arity(); ++j) r /= factorial(s[j]);
  return r;
}

Poly laplacian_product_expansion(const Poly& g, const Poly& f, unsigned l) {
  require_same_arity(g, f);
  const std::size_t n = g.arity();
  std::vector<Poly> lap_g{g};
  std::vector<Poly> lap_f{f};
  for (unsigned k = 1; k <= l; ++k) {
    lap_g.push_back(laplacian(lap_g.back()));
    lap_f.push_back(laplacian(lap_f.back()));
  }
  Poly acc(n);
  for (unsigned k1 = 0; k1 <= l; ++k1) {
    for (unsigned k2 = 0; k1 + k2 <= l; ++k2) {
      const unsigned k3 = l - k1 - k2;
      if (lap_g[k1].is_zero() || lap_f[k3].is_zero()) continue;
      const GaussianRational weight = pow(GaussianRational(2), k2) * factorial(l) /
                                      (factorial(k1) * factorial(k2) * factorial(k3));
      Poly inner(n);
      for (const Monomial& s : multi_indices(n, k2)) {
        Poly dg = partial_multi(lap_g[k1], s);
        if (dg.is_zero()) continue;
        Poly df = partial_multi(lap_f[k3], s);
        if (df.is_zero()) continue;
        inner += multinomial(s) * mul(dg, df);
      }
      acc += weight * inner;
    }
  }
  return acc;
}

std::pair<Poly, Poly> kfactorial_fD_identity(const Poly& f, const Poly& g) {
  require_same_arity(f, g);
  const auto k = f.homogeneous_degree();
  if (!k || *k < 1) {
    throw DomainError("kfactorial_fD_identity: f must be homogeneous of degree >= 1");
  }
  Poly lhs(f.arity());
  for (const Monomial& s : multi_indices(f.arity(), *k)) {
    Poly df = partial_multi(f, s);  // a constant
    if (df.is_zero()) continue;
    lhs += multinomial(s) * mul(df, partial_multi(g, s));
  }
  Poly rhs = factorial(*k) * apply_D(f, g);
  return {std::move(lhs), std::move(rhs)};
}

PolyMatrix jacobian(const PolyVector& f) {
  PolyMatrix j(f.size(), f.arity(), f.arity());
  for (std::size_t r = 0; r < f.size(); ++r)
    for (std::size_t c = 0; c < f.arity(); ++c) j(r, c) = partial(f[r], c);
  return j;
}

Poly jacobian_det(const PolyVector& f) {
  if (f.size() != f.arity()) throw DomainError("jacobian_det: map must be n -> n");
  return determinant(jacobian(f));
}

Poly potential_from_gradient(const PolyVector& v) {
  if (v.size() != v.arity()) throw DomainError("potential_from_gradient: need n components");
  const std::size_t n = v.arity();
  Poly euler(n);
  for (std::size_t i = 0; i < n; ++i) euler += mul(Poly::variable(n, i), v[i]);
  std::vector<Poly::Term> terms = euler.terms();
  for (Poly::Term& t : terms) t.coeff /= GaussianRational(static_cast<long>(t.mono.degree()));
  return Poly::from_terms(n, std::move(terms));
}

}  // namespace hesnil
