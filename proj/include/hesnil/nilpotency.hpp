#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hesnil/diffops.hpp"
#include "hesnil/poly.hpp"

namespace hesnil {

// Hessian-nilpotency verdicts for P in n variables, computed two ways:
//   traces[m-1]     = Tr Hes(P)^m       (m = 1..n)
//   laplacians[m-1] = Lap^m (P^m)       (m = 1..n)
// P is HN iff either list vanishes entirely; the two verdicts must agree.
struct HNReport {
  std::size_t arity = 0;
  std::vector<Poly> traces;
  std::vector<Poly> laplacians;
  bool verdict_matrix = false;
  bool verdict_laplacian = false;
  // order(P) < 2: the criterion is stated for order >= 2 inputs.
  bool low_order = false;

  bool is_hn() const { return verdict_matrix; }
};

// [Tr A, Tr A^2, ..., Tr A^r] for a square r x r matrix, reusing the powers
// A^1..A^ceil(r/2) so the full A^r is never formed.
std::vector<Poly> trace_powers_of(const PolyMatrix& a);

std::vector<Poly> trace_powers(const Poly& p);
std::vector<Poly> laplacian_powers(const Poly& p);

// Decides nilpotency of a square polynomial matrix by its trace powers.
bool is_nilpotent(const PolyMatrix& a);

// Throws InconsistencyError if the two verdicts disagree on an input of
// order >= 2. For lower-order inputs both verdicts are reported as computed
// and is_hn() follows the matrix (defining) verdict.
HNReport is_hn(const Poly& p);

// True iff entries 1..k of the list all vanish.
bool prefix_vanishes(const std::vector<Poly>& values, std::size_t k);

}  // namespace hesnil
