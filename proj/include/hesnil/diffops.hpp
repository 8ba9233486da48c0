#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hesnil/poly.hpp"

namespace hesnil {

// Vector of polynomials of a common arity: gradients, maps z -> F(z).
class PolyVector {
 public:
  PolyVector(std::size_t length, std::size_t arity)
      : arity_(arity), entries_(length, Poly(arity)) {}
  explicit PolyVector(std::vector<Poly> entries);

  std::size_t size() const { return entries_.size(); }
  std::size_t arity() const { return arity_; }
  const Poly& operator[](std::size_t i) const { return entries_[i]; }
  Poly& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Poly>& entries() const { return entries_; }
  bool is_zero() const;

  friend bool operator==(const PolyVector&, const PolyVector&) = default;

 private:
  std::size_t arity_;
  std::vector<Poly> entries_;
};

class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t arity)
      : rows_(rows), cols_(cols), arity_(arity), entries_(rows * cols, Poly(arity)) {}

  static PolyMatrix identity(std::size_t n, std::size_t arity);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t arity() const { return arity_; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Poly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  bool is_zero() const;
  bool is_symmetric() const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t arity_;
  std::vector<Poly> entries_;
};

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const GaussianRational& c, const PolyMatrix& a);
PolyMatrix pow(const PolyMatrix& a, unsigned k);
Poly trace(const PolyMatrix& a);
// Division-free cofactor expansion memoised over column subsets.
Poly determinant(const PolyMatrix& a);

// Derivatives. Variable indices are 0-based.
Poly partial(const Poly& p, std::size_t i);
// d^{|s|} p / dz^s for a multi-index s.
Poly partial_multi(const Poly& p, const Monomial& s);
PolyVector grad(const Poly& p);
PolyMatrix hessian(const Poly& p);
Poly laplacian(const Poly& p);
Poly laplacian_iter(const Poly& p, unsigned k);

// <grad f, grad g> = sum_i (df/dz_i)(dg/dz_i).
Poly grad_pair(const Poly& f, const Poly& g);
// Lambda_P f = sum_i (dP/dz_i)(df/dz_i).
Poly lambda_op(const Poly& p, const Poly& f);
// f(D) g: every monomial z^s of f becomes d^{|s|}/dz^s, with no conjugation.
Poly apply_D(const Poly& f, const Poly& g);

// Both sides of  Lap(p^{m+1}) = (m+1) p^m Lap(p) + m(m+1) p^{m-1} <grad p, grad p>.
std::pair<Poly, Poly> leibniz_identity_check(const Poly& p, unsigned m);

// Lap^l(g f) via the trinomial expansion
//   sum_{k1+k2+k3=l} 2^{k2} l!/(k1!k2!k3!) sum_{|s|=k2} C(k2,s)
//     (d^s Lap^{k1} g)(d^s Lap^{k3} f).
Poly laplacian_product_expansion(const Poly& g, const Poly& f, unsigned l);

// For f homogeneous of degree k >= 1 returns
//   ( sum_{|s|=k} C(k,s) (d^s f)(d^s g),  k! f(D) g ).
std::pair<Poly, Poly> kfactorial_fD_identity(const Poly& f, const Poly& g);

PolyMatrix jacobian(const PolyVector& f);
Poly jacobian_det(const PolyVector& f);

// Q with grad Q = v and Q(0) = 0, via Euler's identity. Assumes v is a
// gradient field (no check).
Poly potential_from_gradient(const PolyVector& v);

// All multi-indices of total degree k in n variables.
std::vector<Monomial> multi_indices(std::size_t n, unsigned k);
// k! / (s_1! ... s_n!)
GaussianRational multinomial(const Monomial& s);

}  // namespace hesnil
