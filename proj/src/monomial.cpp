#include "hesnil/monomial.hpp"

#include <numeric>

#include "hesnil/error.hpp"

namespace hesnil {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0U);
}

Monomial Monomial::unit(std::size_t arity, std::size_t index, Exponent power) {
  if (index >= arity) throw DomainError("variable index out of range");
  Monomial m(arity);
  m.exps_[index] = power;
  m.degree_ = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.arity() != arity()) throw DomainError("monomial arity mismatch");
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
  r.degree_ += o.degree_;
  return r;
}

Monomial Monomial::lowered(std::size_t index, Exponent by) const {
  Monomial r = *this;
  r.exps_[index] -= by;
  r.degree_ -= by;
  return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] < o.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
  r.degree_ -= o.degree_;
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace hesnil
