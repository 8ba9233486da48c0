#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

#include <json.hpp>

#include "hesnil/diffops.hpp"
#include "hesnil/poly.hpp"
#include "hesnil/poly_io.hpp"

namespace hesnil {

using Json = nlohmann::ordered_json;

// A polynomial produced by one of the named constructions, with a record of
// how it was built.
struct GeneratedPoly {
  Poly p;
  VarStyle style = VarStyle::kZ;
  Json provenance;
};

// Kinds: "w", "wtilde", "ug", "pg", "ph". n is the arity of the result
// (pg and ph need n even); d is the degree. Optional params:
//   count        number of isotropic vectors (w, ug; default floor(n/2))
//   terms        terms in the random g or per component of H (default 3)
//   homogeneous  ph only: H homogeneous of degree d-1 (default true)
// Throws DomainError for unknown kinds or infeasible sizes.
GeneratedPoly generate_polynomial(const std::string& kind, std::size_t n, unsigned d,
                                  std::uint64_t seed, const Json& params = Json::object());

bool is_generator_kind(const std::string& kind);

// Random polynomial with nonzero terms of total degree in [min_degree,
// max_degree] and small Gaussian-integer coefficients.
Poly random_poly(std::size_t arity, unsigned min_degree, unsigned max_degree,
                 std::size_t terms, std::mt19937_64& rng);

// Strictly triangular H (after a random relabelling of the variables) so
// that JH is nilpotent; every component has degrees in [1, max_degree], or
// exactly max_degree when homogeneous.
PolyVector random_triangular_map(std::size_t n, unsigned max_degree, bool homogeneous,
                                 std::size_t terms, std::mt19937_64& rng);

std::string format_vector(const std::vector<GaussianRational>& v);

}  // namespace hesnil
