#pragma once

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "hesnil/corpus.hpp"
#include "hesnil/poly.hpp"
#include "hesnil/poly_io.hpp"

namespace hesnil::testing {

inline Poly P(const std::string& text, std::size_t arity) { return parse_poly(text, arity); }

inline GaussianRational random_scalar(std::mt19937_64& rng, long bound = 5) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, 3);
  return {mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng))};
}

inline std::vector<GaussianRational> random_point(std::mt19937_64& rng, std::size_t n) {
  std::vector<GaussianRational> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(rng));
  return v;
}

inline Poly random_sparse(std::mt19937_64& rng, std::size_t arity, unsigned max_degree,
                          std::size_t max_terms = 5, unsigned min_degree = 0) {
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  return random_poly(arity, min_degree, max_degree, count(rng), rng);
}

// Homogeneous of the given degree (or zero, if all random terms cancel).
inline Poly random_homogeneous(std::mt19937_64& rng, std::size_t arity, unsigned degree,
                               std::size_t max_terms = 4) {
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  return random_poly(arity, degree, degree, count(rng), rng);
}

inline ::testing::AssertionResult PolyEq(const Poly& actual, const Poly& expected) {
  if (actual == expected) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "\n  actual:   " << format_poly(actual)
                                       << "\n  expected: " << format_poly(expected);
}

}  // namespace hesnil::testing
