#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hesnil {

// Exponent vector z^I. Ordered graded-lexicographically: total degree first,
// then the exponent of z1, then z2, ...
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps)
      : Monomial(std::vector<Exponent>(exps)) {}

  static Monomial unit(std::size_t arity, std::size_t index, Exponent power = 1);

  std::size_t arity() const { return exps_.size(); }
  unsigned degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& o) const;
  // Exponent at `index` lowered by `by`; caller guarantees exps[index] >= by.
  Monomial lowered(std::size_t index, Exponent by = 1) const;
  bool divisible_by(const Monomial& o) const;
  // this / o, caller guarantees divisibility.
  Monomial quotient(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.exps_ <=> b.exps_;
  }

  std::size_t hash() const;

 private:
  std::vector<Exponent> exps_;
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace hesnil
