#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "hesnil/poly.hpp"

namespace hesnil {

// A series sum_j t^j C_j known modulo t^{t_order}; coefficient j holds C_j.
// With a z-degree cap every coefficient is additionally known only up to
// that total degree, and all arithmetic drops terms above it.
class TGraded {
 public:
  TGraded(std::size_t arity, std::size_t t_order,
          std::optional<unsigned> z_trunc = std::nullopt);
  explicit TGraded(std::vector<Poly> coeffs, std::optional<unsigned> z_trunc = std::nullopt);

  std::size_t arity() const { return arity_; }
  std::size_t t_order() const { return coeffs_.size(); }
  std::optional<unsigned> z_trunc() const { return z_trunc_; }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  const Poly& operator[](std::size_t j) const { return coeffs_[j]; }

  bool is_zero() const;
  // Largest j with C_j != 0; nullopt when every coefficient vanishes.
  std::optional<std::size_t> degree_t() const;

  TGraded& operator+=(const TGraded& o);
  TGraded& operator-=(const TGraded& o);
  TGraded& operator*=(const GaussianRational& c);
  friend TGraded operator+(TGraded a, const TGraded& b) { return a += b; }
  friend TGraded operator-(TGraded a, const TGraded& b) { return a -= b; }
  friend TGraded operator*(TGraded a, const GaussianRational& c) { return a *= c; }
  friend TGraded operator*(const GaussianRational& c, TGraded a) { return a *= c; }
  friend TGraded operator*(const TGraded& a, const TGraded& b);
  friend bool operator==(const TGraded& a, const TGraded& b) {
    return a.arity_ == b.arity_ && a.coeffs_ == b.coeffs_;
  }

  // d/dt: coefficient j of the result is (j+1) C_{j+1}; t_order drops by one.
  TGraded derivative_t() const;
  // Multiplication by t; t_order grows by one.
  TGraded times_t() const;
  TGraded truncated(std::size_t t_order, std::optional<unsigned> z_trunc) const;
  TGraded truncated_t(std::size_t t_order) const { return truncated(t_order, z_trunc_); }
  // Applies a z-linear map to every coefficient (e.g. a Laplacian).
  TGraded map(const std::function<Poly(const Poly&)>& f) const;

 private:
  std::size_t arity_;
  std::vector<Poly> coeffs_;
  std::optional<unsigned> z_trunc_;
};

TGraded pow(const TGraded& q, unsigned k);

// exp(s*q) where every coefficient of q has order >= 1 and q carries a
// z-degree cap (needed so the exponential is a finite sum).
TGraded exp_truncated(const TGraded& q, const GaussianRational& s);

}  // namespace hesnil
