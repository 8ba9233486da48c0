#include "hesnil/poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "hesnil/error.hpp"

namespace hesnil {

namespace {

using TermMap = std::unordered_map<Monomial, GaussianRational, MonomialHash>;

Poly from_map(std::size_t arity, TermMap&& map) {
  std::vector<Poly::Term> terms;
  terms.reserve(map.size());
  for (auto& [mono, coeff] : map) {
    if (!coeff.is_zero()) terms.push_back({mono, std::move(coeff)});
  }
  std::sort(terms.begin(), terms.end(),
            [](const Poly::Term& a, const Poly::Term& b) { return a.mono < b.mono; });
  return Poly::from_terms(arity, std::move(terms));
}

// Merge of two sorted term lists; sign = -1 subtracts.
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a,
                                    const std::vector<Poly::Term>& b, bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->mono < ib->mono)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->mono < ia->mono) {
      out.push_back({ib->mono, subtract ? -ib->coeff : ib->coeff});
      ++ib;
    } else {
      GaussianRational c = subtract ? ia->coeff - ib->coeff : ia->coeff + ib->coeff;
      if (!c.is_zero()) out.push_back({ia->mono, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

void require_same_arity(const Poly& a, const Poly& b) {
  if (a.arity() != b.arity()) {
    throw DomainError("arity mismatch: " + std::to_string(a.arity()) + " vs " +
                      std::to_string(b.arity()));
  }
}

Poly Poly::constant(std::size_t arity, const GaussianRational& c) {
  Poly p(arity);
  if (!c.is_zero()) p.terms_.push_back({Monomial(arity), c});
  return p;
}

Poly Poly::variable(std::size_t arity, std::size_t index) {
  Poly p(arity);
  p.terms_.push_back({Monomial::unit(arity, index), GaussianRational(1)});
  return p;
}

Poly Poly::monomial(const Monomial& m, const GaussianRational& c) {
  Poly p(m.arity());
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::size_t arity, std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.mono.arity() != arity) throw DomainError("monomial arity mismatch");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  Poly p(arity);
  p.terms_.reserve(terms.size());
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0);
}

GaussianRational Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return t.mono < key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return GaussianRational(0);
}

GaussianRational Poly::constant_term() const {
  if (!terms_.empty() && terms_[0].mono.degree() == 0) return terms_[0].coeff;
  return GaussianRational(0);
}

std::optional<unsigned> Poly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().mono.degree();
}

unsigned Poly::order() const {
  if (terms_.empty()) return kInfiniteOrder;
  return terms_.front().mono.degree();
}

std::optional<unsigned> Poly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  if (terms_.front().mono.degree() != terms_.back().mono.degree()) return std::nullopt;
  return terms_.front().mono.degree();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Term& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_arity(*this, o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_arity(*this, o);
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (Term& t : terms_) t.coeff *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }

void PolyBuilder::add(const Monomial& m, const GaussianRational& c) {
  if (!c.is_zero()) pending_.push_back({m, c});
}

void PolyBuilder::add(const Poly& p) {
  pending_.insert(pending_.end(), p.terms().begin(), p.terms().end());
}

Poly PolyBuilder::build() && { return Poly::from_terms(arity_, std::move(pending_)); }

Poly mul_truncated(const Poly& a, const Poly& b, unsigned max_degree) {
  require_same_arity(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.arity());
  const Poly& outer = a.size() <= b.size() ? a : b;
  const Poly& inner = a.size() <= b.size() ? b : a;
  TermMap acc;
  acc.reserve(outer.size() * inner.size() / 2 + 1);
  for (const Poly::Term& ta : outer.terms()) {
    if (ta.mono.degree() > max_degree) break;
    const unsigned budget = max_degree - ta.mono.degree();
    for (const Poly::Term& tb : inner.terms()) {
      if (tb.mono.degree() > budget) break;
      acc[ta.mono * tb.mono].add_product(ta.coeff, tb.coeff);
    }
  }
  return from_map(a.arity(), std::move(acc));
}

Poly mul(const Poly& a, const Poly& b) {
  return mul_truncated(a, b, std::numeric_limits<unsigned>::max());
}

Poly pow_truncated(const Poly& p, unsigned k, unsigned max_degree) {
  Poly result = truncate_total_degree(Poly::constant(p.arity(), 1), max_degree);
  Poly base = truncate_total_degree(p, max_degree);
  while (k > 0) {
    if (k & 1U) result = mul_truncated(result, base, max_degree);
    k >>= 1U;
    if (k > 0) base = mul_truncated(base, base, max_degree);
  }
  return result;
}

Poly pow(const Poly& p, unsigned k) {
  return pow_truncated(p, k, std::numeric_limits<unsigned>::max());
}

Poly truncate_total_degree(const Poly& p, unsigned max_degree) {
  std::vector<Poly::Term> kept;
  for (const Poly::Term& t : p.terms()) {
    if (t.mono.degree() > max_degree) break;
    kept.push_back(t);
  }
  return Poly::from_terms(p.arity(), std::move(kept));
}

Poly homogeneous_part(const Poly& p, unsigned degree) {
  std::vector<Poly::Term> kept;
  for (const Poly::Term& t : p.terms()) {
    if (t.mono.degree() == degree) kept.push_back(t);
  }
  return Poly::from_terms(p.arity(), std::move(kept));
}

Poly compose(const Poly& p, std::span<const Poly> images) {
  if (images.size() != p.arity()) {
    throw DomainError("compose: expected " + std::to_string(p.arity()) +
                      " images, got " + std::to_string(images.size()));
  }
  if (images.empty()) return p;
  const std::size_t out_arity = images[0].arity();
  for (const Poly& img : images) {
    if (img.arity() != out_arity) throw DomainError("compose: image arity mismatch");
  }
  // powers[j][e] = images[j]^e, filled on demand
  std::vector<std::vector<Poly>> powers(images.size());
  auto power_of = [&](std::size_t j, unsigned e) -> const Poly& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(Poly::constant(out_arity, 1));
    while (cache.size() <= e) cache.push_back(mul(cache.back(), images[j]));
    return cache[e];
  };
  Poly result(out_arity);
  for (const Poly::Term& t : p.terms()) {
    Poly term = Poly::constant(out_arity, t.coeff);
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (t.mono[j] > 0) term = mul(term, power_of(j, t.mono[j]));
    }
    result += term;
  }
  return result;
}

Poly substitute_linear(const Poly& p, const ScalarMatrix& matrix,
                       std::span<const GaussianRational> shift) {
  if (matrix.size() != p.arity()) {
    throw DomainError("substitute_linear: matrix needs one row per variable");
  }
  if (!shift.empty() && shift.size() != p.arity()) {
    throw DomainError("substitute_linear: shift length mismatch");
  }
  const std::size_t out_arity = matrix.empty() ? 0 : matrix[0].size();
  std::vector<Poly> images;
  images.reserve(p.arity());
  for (std::size_t j = 0; j < matrix.size(); ++j) {
    if (matrix[j].size() != out_arity) {
      throw DomainError("substitute_linear: ragged matrix");
    }
    PolyBuilder img(out_arity);
    for (std::size_t k = 0; k < out_arity; ++k) {
      img.add(Monomial::unit(out_arity, k), matrix[j][k]);
    }
    if (!shift.empty()) img.add(Monomial(out_arity), shift[j]);
    images.push_back(std::move(img).build());
  }
  if (p.arity() == 0) return p;
  return compose(p, images);
}

GaussianRational eval(const Poly& p, std::span<const GaussianRational> point) {
  if (point.size() != p.arity()) {
    throw DomainError("eval: point has " + std::to_string(point.size()) +
                      " coordinates, polynomial arity is " + std::to_string(p.arity()));
  }
  GaussianRational value(0);
  for (const Poly::Term& t : p.terms()) {
    GaussianRational term = t.coeff;
    for (std::size_t j = 0; j < point.size(); ++j) {
      if (t.mono[j] > 0) term *= pow(point[j], t.mono[j]);
    }
    value += term;
  }
  return value;
}

Poly exp_truncated(const Poly& p, const GaussianRational& s, unsigned max_degree) {
  const unsigned ord = p.order();
  if (ord == 0) {
    throw DomainError("exp_truncated: polynomial has a nonzero constant term");
  }
  Poly result = truncate_total_degree(Poly::constant(p.arity(), 1), max_degree);
  if (ord == Poly::kInfiniteOrder || s.is_zero()) return result;
  const Poly sp = truncate_total_degree(s * p, max_degree);
  Poly power = result;  // (s p)^k / k!
  for (unsigned k = 1; static_cast<unsigned long>(k) * ord <= max_degree; ++k) {
    power = mul_truncated(power, sp, max_degree);
    power *= GaussianRational(1) / GaussianRational(static_cast<long>(k));
    result += power;
  }
  return result;
}

}  // namespace hesnil
