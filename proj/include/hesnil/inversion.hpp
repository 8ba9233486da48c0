#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hesnil/diffops.hpp"
#include "hesnil/poly.hpp"
#include "hesnil/tgraded.hpp"

namespace hesnil {

enum class InversionMethod { kGeneral, kHnRecurrence, kClosedForm, kFixedPoint };

std::string to_string(InversionMethod method);
InversionMethod inversion_method_from_string(const std::string& name);

// Deformed inversion pair of P: the series Q_t = sum_{m>=1} t^{m-1} Q_[m]
// with z + t grad Q_t inverse to z - t grad P. q holds Q_[1..M] at t-powers
// 0..M-1.
struct DeformedPair {
  Poly source;
  TGraded q;
  InversionMethod method;

  // Largest m with Q_[m+1] != 0, i.e. the t-degree of Q_t (0 if Q_t = P).
  std::size_t deg_t() const;
  // Smallest m (1-based) with Q_[m] = 0, if any within the computed range.
  std::optional<std::size_t> first_vanishing_index() const;
};

// Q_[m] = 1/(2(m-1)) sum_{k+l=m} <grad Q_[k], grad Q_[l]>. Any P of order >= 2.
DeformedPair invert_general(const Poly& p, std::size_t t_order);
// Q_[m] = 1/(4(m-1)) Lap sum_{k+l=m} Q_[k] Q_[l]. Requires P to be HN.
DeformedPair invert_hn(const Poly& p, std::size_t t_order);
// Q_[m] = Lap^{m-1} P^m / (2^{m-1} m! (m-1)!). Requires P to be HN.
DeformedPair invert_closed(const Poly& p, std::size_t t_order);

// Q_t^k for HN P via its closed form: the t^m coefficient is
// k! Lap^m P^{m+k} / (2^m m! (m+k)!).
TGraded qt_power(const Poly& p, unsigned k, std::size_t t_order);

// Solves G = z + t (grad P)(G) by graded fixed-point iteration. Returns the
// coefficients G_0 = z, G_1, ..., G_M of t^0..t^M, optionally truncated to
// total z-degree z_degree.
std::vector<PolyVector> invert_fixed_point(const Poly& p, std::size_t t_order,
                                           std::optional<unsigned> z_degree = std::nullopt);
// Recovers Q_[m] from G_m = grad Q_[m] (m = 1..M).
DeformedPair pair_from_fixed_point(const Poly& p, const std::vector<PolyVector>& g);

// f(args) for a polynomial f and series arguments, computed in TGraded
// arithmetic (t-order and z-cap of the arguments apply).
TGraded evaluate_series(const Poly& f, const std::vector<TGraded>& args);

// F_t(G_t(z)) - z with F_t = z - t grad P and G_t = z + t grad Q_t, one
// series per component, to t-order t_order+1 (t^0..t^{t_order}).
// Requires pair.q.t_order() >= t_order.
std::vector<TGraded> compose_check(const Poly& p, const DeformedPair& pair, std::size_t t_order,
                                   std::optional<unsigned> z_degree = std::nullopt);

// dQ_t/dt - 1/2 <grad Q_t, grad Q_t>, valid to t-order q.t_order() - 1.
TGraded burgers_residual(const DeformedPair& pair,
                         std::optional<unsigned> z_degree = std::nullopt);

struct HeatResidual {
  TGraded residual;         // dU/dt - Lap U / (2s), t-order M, z-degree <= N
  bool initial_slice_ok;    // U at t = 0 equals exp(sP) to degree N
};

// U = exp(s Q_t); P must be HN and s nonzero.
HeatResidual heat_residual(const Poly& p, const GaussianRational& s, std::size_t t_order,
                           unsigned z_degree);

// exp(s Q_t) - sum_k t^k Lap^k exp(sP) / ((2s)^k k!), to (t_order, z_degree).
TGraded exp_formula_check(const Poly& p, const GaussianRational& s, std::size_t t_order,
                          unsigned z_degree);

// exp(Q_t - P) - sum_j t^j A^j 1 / j! with A = Lap/2 + Lambda_P + Lap(P^2)/4.
TGraded exp_tilde_check(const Poly& p, std::size_t t_order, unsigned z_degree);
// One application of A = Lap/2 + Lambda_P + Lap(P^2)/4 to f.
Poly tilde_operator(const Poly& p, const Poly& lap_p_squared, const Poly& f);

// ( Lap^m P^{m+a+b},
//   C(a+b,a)^{-1} sum_{k+l=m} C(m,k) C(m+a+b,k+a) (Lap^k P^{k+a})(Lap^l P^{l+b}) ).
std::pair<Poly, Poly> binomial_identity_check(const Poly& p, unsigned alpha, unsigned beta,
                                              unsigned m);

// ( d/dt Lap^k Q_t^m,
//   Lap^{k+1} Q_t^{m+1} / (2(m+1)) - Lap^k (Q_t^m Lap Q_t) / 2 ),
// valid for any P, to t-order q.t_order() - 1.
std::pair<TGraded, TGraded> laplacian_power_flow_check(const DeformedPair& pair, unsigned k,
                                                       unsigned m);

// ( d^l/dt^l Q_t^k,  Lap^l Q_t^{k+l} / (2^l (k+1)(k+2)...(k+l)) ) for HN P,
// to t-order q.t_order() - l.
std::pair<TGraded, TGraded> t_derivative_power_check(const DeformedPair& pair, unsigned k,
                                                     unsigned l);

}  // namespace hesnil
