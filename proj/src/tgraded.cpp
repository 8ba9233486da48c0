#include "hesnil/tgraded.hpp"

#include <algorithm>

#include "hesnil/error.hpp"

namespace hesnil {

namespace {

std::optional<unsigned> min_trunc(std::optional<unsigned> a, std::optional<unsigned> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

Poly cap(const Poly& p, std::optional<unsigned> z_trunc) {
  return z_trunc ? truncate_total_degree(p, *z_trunc) : p;
}

}  // namespace

TGraded::TGraded(std::size_t arity, std::size_t t_order, std::optional<unsigned> z_trunc)
    : arity_(arity), coeffs_(t_order, Poly(arity)), z_trunc_(z_trunc) {}

TGraded::TGraded(std::vector<Poly> coeffs, std::optional<unsigned> z_trunc)
    : arity_(coeffs.empty() ? 0 : coeffs[0].arity()),
      coeffs_(std::move(coeffs)),
      z_trunc_(z_trunc) {
  for (Poly& c : coeffs_) {
    if (c.arity() != arity_) throw DomainError("TGraded: coefficient arity mismatch");
    c = cap(c, z_trunc_);
  }
}

bool TGraded::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Poly& p) { return p.is_zero(); });
}

std::optional<std::size_t> TGraded::degree_t() const {
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    if (!coeffs_[j].is_zero()) return j;
  }
  return std::nullopt;
}

TGraded& TGraded::operator+=(const TGraded& o) {
  if (o.arity_ != arity_) throw DomainError("TGraded: arity mismatch");
  z_trunc_ = min_trunc(z_trunc_, o.z_trunc_);
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()), Poly(arity_));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    coeffs_[j] = cap(coeffs_[j] + o.coeffs_[j], z_trunc_);
  }
  return *this;
}

TGraded& TGraded::operator-=(const TGraded& o) {
  if (o.arity_ != arity_) throw DomainError("TGraded: arity mismatch");
  z_trunc_ = min_trunc(z_trunc_, o.z_trunc_);
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()), Poly(arity_));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    coeffs_[j] = cap(coeffs_[j] - o.coeffs_[j], z_trunc_);
  }
  return *this;
}

TGraded& TGraded::operator*=(const GaussianRational& c) {
  for (Poly& p : coeffs_) p *= c;
  return *this;
}

TGraded operator*(const TGraded& a, const TGraded& b) {
  if (a.arity_ != b.arity_) throw DomainError("TGraded: arity mismatch");
  const std::size_t order = std::min(a.t_order(), b.t_order());
  const auto z_trunc = min_trunc(a.z_trunc_, b.z_trunc_);
  const unsigned z_cap = z_trunc.value_or(std::numeric_limits<unsigned>::max());
  TGraded out(a.arity_, order, z_trunc);
  for (std::size_t i = 0; i < order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < order; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += mul_truncated(a.coeffs_[i], b.coeffs_[j], z_cap);
    }
  }
  return out;
}

TGraded TGraded::derivative_t() const {
  if (coeffs_.empty()) throw DomainError("TGraded: derivative of an empty series");
  std::vector<Poly> d;
  d.reserve(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    d.push_back(coeffs_[j] * GaussianRational(static_cast<long>(j)));
  }
  TGraded out(arity_, 0, z_trunc_);
  out.coeffs_ = std::move(d);
  return out;
}

TGraded TGraded::times_t() const {
  TGraded out(arity_, 0, z_trunc_);
  out.coeffs_.reserve(coeffs_.size() + 1);
  out.coeffs_.push_back(Poly(arity_));
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

TGraded TGraded::truncated(std::size_t t_order, std::optional<unsigned> z_trunc) const {
  if (t_order > coeffs_.size()) {
    throw DomainError("TGraded: cannot extend a series beyond its known t-order");
  }
  const auto eff = min_trunc(z_trunc_, z_trunc);
  std::vector<Poly> c(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(t_order));
  TGraded out(arity_, 0, eff);
  for (Poly& p : c) p = cap(p, eff);
  out.coeffs_ = std::move(c);
  return out;
}

TGraded TGraded::map(const std::function<Poly(const Poly&)>& f) const {
  TGraded out(arity_, 0, z_trunc_);
  out.coeffs_.reserve(coeffs_.size());
  for (const Poly& p : coeffs_) out.coeffs_.push_back(cap(f(p), z_trunc_));
  return out;
}

TGraded pow(const TGraded& q, unsigned k) {
  std::vector<Poly> one(q.t_order(), Poly(q.arity()));
  if (!one.empty()) one[0] = Poly::constant(q.arity(), 1);
  TGraded result(std::move(one), q.z_trunc());
  TGraded base = q;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

TGraded exp_truncated(const TGraded& q, const GaussianRational& s) {
  if (!q.z_trunc()) throw DomainError("exp_truncated: series needs a z-degree cap");
  unsigned ord = Poly::kInfiniteOrder;
  for (const Poly& c : q.coeffs()) ord = std::min(ord, c.order());
  if (ord == 0) throw DomainError("exp_truncated: series has a nonzero constant term");
  std::vector<Poly> one(q.t_order(), Poly(q.arity()));
  if (!one.empty()) one[0] = Poly::constant(q.arity(), 1);
  TGraded result(std::move(one), q.z_trunc());
  if (ord == Poly::kInfiniteOrder || s.is_zero()) return result;
  const TGraded sq = q * s;
  TGraded power = result;
  for (unsigned k = 1; static_cast<unsigned long>(k) * ord <= *q.z_trunc(); ++k) {
    power = power * sq;
    power *= GaussianRational(1) / GaussianRational(static_cast<long>(k));
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

}  // namespace hesnil
