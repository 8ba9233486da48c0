#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "hesnil/gaussian_rational.hpp"
#include "hesnil/monomial.hpp"

namespace hesnil {

// Sparse polynomial in z_1..z_n over Q(i). Canonical: terms sorted ascending
// in graded-lex order, no zero coefficients, so equal polynomials compare
// equal term by term. Variables are 0-based in the API (z1 is index 0).
class Poly {
 public:
  struct Term {
    Monomial mono;
    GaussianRational coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  static constexpr unsigned kInfiniteOrder = std::numeric_limits<unsigned>::max();

  explicit Poly(std::size_t arity = 0) : arity_(arity) {}

  static Poly constant(std::size_t arity, const GaussianRational& c);
  static Poly variable(std::size_t arity, std::size_t index);
  static Poly monomial(const Monomial& m, const GaussianRational& c = 1);
  // Sorts and merges like terms; drops zeros.
  static Poly from_terms(std::size_t arity, std::vector<Term> terms);

  std::size_t arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  GaussianRational coefficient(const Monomial& m) const;
  GaussianRational constant_term() const;

  // Highest total degree; nullopt for the zero polynomial.
  std::optional<unsigned> total_degree() const;
  // Lowest total degree; kInfiniteOrder for the zero polynomial.
  unsigned order() const;
  // The common degree of all terms; nullopt if mixed or zero.
  std::optional<unsigned> homogeneous_degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const GaussianRational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const GaussianRational& c) { return a *= c; }
  friend Poly operator*(const GaussianRational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  friend class PolyBuilder;

  std::size_t arity_;
  std::vector<Term> terms_;
};

// Accumulates coefficient contributions and emits a canonical Poly.
class PolyBuilder {
 public:
  explicit PolyBuilder(std::size_t arity) : arity_(arity) {}

  void add(const Monomial& m, const GaussianRational& c);
  void add(const Poly& p);
  Poly build() &&;

 private:
  std::size_t arity_;
  std::vector<Poly::Term> pending_;
};

void require_same_arity(const Poly& a, const Poly& b);

Poly mul(const Poly& a, const Poly& b);
// Product with every term of total degree > max_degree dropped; cheaper than
// truncating the full product.
Poly mul_truncated(const Poly& a, const Poly& b, unsigned max_degree);
Poly pow(const Poly& p, unsigned k);
Poly pow_truncated(const Poly& p, unsigned k, unsigned max_degree);

Poly truncate_total_degree(const Poly& p, unsigned max_degree);
// Terms of exactly the given total degree.
Poly homogeneous_part(const Poly& p, unsigned degree);

// p(images[0], ..., images[n-1]); all images share one arity, which becomes
// the arity of the result.
Poly compose(const Poly& p, std::span<const Poly> images);

using ScalarMatrix = std::vector<std::vector<GaussianRational>>;

// z_j <- sum_k matrix[j][k] w_k + shift[j]. matrix has p.arity() rows; its
// column count is the arity of the result.
Poly substitute_linear(const Poly& p, const ScalarMatrix& matrix,
                       std::span<const GaussianRational> shift = {});

GaussianRational eval(const Poly& p, std::span<const GaussianRational> point);

// sum_{k=0}^{K} s^k p^k / k! truncated to total degree max_degree, where K is
// the last k with k*order(p) <= max_degree. Requires order(p) >= 1.
Poly exp_truncated(const Poly& p, const GaussianRational& s, unsigned max_degree);

}  // namespace hesnil
