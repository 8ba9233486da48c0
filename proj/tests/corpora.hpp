#pragma once

#include <random>
#include <string>
#include <vector>

#include "hesnil/corpus.hpp"
#include "hesnil/generators.hpp"
#include "hesnil/poly_io.hpp"

namespace hesnil::testing {

struct NamedPoly {
  std::string label;
  Poly p;
};

// Hessian-nilpotent inputs of arity <= 4 and degree <= 4 from every
// construction, plus a few fixed nontrivial members.
inline std::vector<NamedPoly> hn_corpus() {
  std::vector<NamedPoly> out;
  auto add = [&](const std::string& kind, std::size_t n, unsigned d, std::uint64_t seed,
                 const Json& params = Json::object()) {
    out.push_back({kind + " n=" + std::to_string(n) + " d=" + std::to_string(d) + " seed=" +
                       std::to_string(seed),
                   generate_polynomial(kind, n, d, seed, params).p});
  };
  std::uint64_t seed = 1000;
  for (std::size_t n : {2, 3, 4}) {
    for (unsigned d : {2, 3, 4}) {
      add("w", n, d, seed++);
      add("ug", n, d, seed++);
    }
  }
  for (unsigned d : {2, 3, 4}) add("wtilde", 4, d, seed++);
  for (std::size_t n : {2, 4}) {
    for (unsigned d : {2, 3, 4}) add("pg", n, d, seed++);
  }
  const Json mixed{{"homogeneous", false}};
  for (int rep = 0; rep < 5; ++rep) {
    for (unsigned d : {2, 3, 4}) add("ph", 4, d, seed++);
    for (unsigned d : {3, 4}) add("ph", 4, d, seed++, mixed);
  }
  out.push_back({"v1*(u2+i*v2)^2", parse_poly("v1*(u2+i*v2)^2")});
  out.push_back({"v1*((u2+i*v2)^2+(u2+i*v2)^3)", parse_poly("v1*((u2+i*v2)^2 + (u2+i*v2)^3)")});
  out.push_back({"v2*(u1+i*v1)^3", parse_poly("v2*(u1+i*v1)^3")});
  // Three isotropic squares whose Gram matrix is nonzero but nilpotent.
  out.push_back({"non-orthogonal isotropic squares",
                 parse_poly("((1-i)*z1 + z2 + (1+i)*z3 + i*z4)^2 + (z1 + i*z2)^2 + (z3 + i*z4)^2")});
  out.push_back({"(z1+i*z2)^4", parse_poly("(z1+i*z2)^4")});
  out.push_back({"(z1+i*z2)^3 + (z3+i*z4)^2", parse_poly("(z1+i*z2)^3 + (z3+i*z4)^2")});
  return out;
}

// Polynomials of order >= 2 that are not Hessian nilpotent: random ones, and
// harmonic sums of powers of non-orthogonal isotropic forms.
inline std::vector<NamedPoly> non_hn_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<NamedPoly> out;
  std::uniform_int_distribution<std::size_t> terms(1, 4);
  for (std::size_t k = 0; out.size() < count; ++k) {
    const std::size_t n = 1 + k % 4;
    const unsigned d = 2 + static_cast<unsigned>(k % 3);
    Poly p;
    if (k % 3 == 2 && n >= 3) {
      const IsotropicSet s = sample_isotropic(n, 2, rng(), false);
      if (bilinear(s[0], s[1]).is_zero()) continue;
      p = pow(linear_form(s[0]), d) + pow(linear_form(s[1]), d);
    } else {
      p = random_poly(n, 2, 4, terms(rng), rng);
    }
    if (p.is_zero()) continue;
    out.push_back({"non-HN #" + std::to_string(out.size()), std::move(p)});
  }
  return out;
}

// Mixed corpus for the criterion biconditional: random polynomials of order
// >= 2 (almost never HN) and HN polynomials from the isotropic constructions,
// arity <= 3, degree <= 4.
inline std::vector<Poly> mixed_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Poly> out;
  std::uniform_int_distribution<std::size_t> terms(1, 4);
  for (std::size_t k = 0; out.size() < count; ++k) {
    const std::size_t n = 2 + k % 2;
    const unsigned d = 2 + static_cast<unsigned>(k % 3);
    switch (k % 4) {
      case 0:
        out.push_back(random_poly(n, 2, 4, terms(rng), rng));
        break;
      case 1: {
        const IsotropicSet s = sample_isotropic(n, 1 + k % 2, rng(), false);
        out.push_back(crit2_check(s, d, 1).p);  // sum of isotropic powers
        break;
      }
      case 2: {
        const IsotropicSet s = sample_isotropic(n, 1, rng(), true);
        const Poly g = random_poly(1, 2, 4, 2, rng);
        out.push_back(ug_construction(g, s));
        break;
      }
      default:
        out.push_back(generate_polynomial("w", n, d, rng()).p);
        break;
    }
  }
  return out;
}

}  // namespace hesnil::testing
