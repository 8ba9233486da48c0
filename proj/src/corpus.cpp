#include "hesnil/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "hesnil/error.hpp"
#include "hesnil/generators.hpp"

namespace hesnil {

namespace {

constexpr const char* kCorpusNote =
    "nontrivial homogeneous HN inputs of degree >= 4 in several variables come only from "
    "the P_H construction; the other kinds are of trivial type (Lap P^2 = 0)";

GaussianRational random_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-2, 2);
  for (;;) {
    GaussianRational c(mpq_class(dist(rng)), mpq_class(dist(rng)));
    if (!c.is_zero()) return c;
  }
}

Monomial random_monomial(std::size_t arity, const std::vector<std::size_t>& vars, unsigned degree,
                         std::mt19937_64& rng) {
  std::vector<Monomial::Exponent> exps(arity, 0);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  for (unsigned k = 0; k < degree; ++k) ++exps[vars[pick(rng)]];
  return Monomial(std::move(exps));
}

std::size_t param_size(const Json& params, const char* key, std::size_t fallback) {
  if (!params.contains(key)) return fallback;
  return params.at(key).get<std::size_t>();
}

Json vectors_json(const IsotropicSet& set) {
  Json out = Json::array();
  for (const auto& v : set.vectors()) out.push_back(format_vector(v));
  return out;
}

}  // namespace

std::string format_vector(const std::vector<GaussianRational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

Poly random_poly(std::size_t arity, unsigned min_degree, unsigned max_degree, std::size_t terms,
                 std::mt19937_64& rng) {
  std::vector<std::size_t> vars(arity);
  std::iota(vars.begin(), vars.end(), 0);
  std::uniform_int_distribution<unsigned> deg(min_degree, max_degree);
  std::vector<Poly::Term> out;
  for (std::size_t k = 0; k < terms; ++k) {
    out.push_back({random_monomial(arity, vars, deg(rng), rng), random_coefficient(rng)});
  }
  return Poly::from_terms(arity, std::move(out));
}

PolyVector random_triangular_map(std::size_t n, unsigned max_degree, bool homogeneous,
                                 std::size_t terms, std::mt19937_64& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  PolyVector h(n, n);
  std::uniform_int_distribution<unsigned> deg(homogeneous ? max_degree : 1, max_degree);
  for (std::size_t a = 0; a + 1 < n; ++a) {
    // Component order[a] may only use the variables ranked after it.
    const std::vector<std::size_t> later(order.begin() + static_cast<long>(a) + 1, order.end());
    std::vector<Poly::Term> out;
    for (std::size_t k = 0; k < terms; ++k) {
      out.push_back({random_monomial(n, later, deg(rng), rng), random_coefficient(rng)});
    }
    h[order[a]] = Poly::from_terms(n, std::move(out));
  }
  return h;
}

bool is_generator_kind(const std::string& kind) {
  return kind == "w" || kind == "wtilde" || kind == "ug" || kind == "pg" || kind == "ph";
}

GeneratedPoly generate_polynomial(const std::string& kind, std::size_t n, unsigned d,
                                  std::uint64_t seed, const Json& params) {
  if (!is_generator_kind(kind)) throw DomainError("unknown generator kind '" + kind + "'");
  if (n < 2) throw DomainError("generator: n must be >= 2");
  if (d < 2) throw DomainError("generator: d must be >= 2");
  std::mt19937_64 rng(seed);
  const std::size_t terms = param_size(params, "terms", 3);
  GeneratedPoly out;
  out.provenance["kind"] = kind;
  out.provenance["n"] = n;
  out.provenance["d"] = d;
  out.provenance["seed"] = seed;

  if (kind == "w" || kind == "ug") {
    const std::size_t count = param_size(params, "count", n / 2);
    const IsotropicSet xi = sample_isotropic(n, count, rng(), true);
    out.provenance["vectors"] = vectors_json(xi);
    if (kind == "w") {
      out.p = w_construction(xi, d);
    } else {
      const Poly g = random_poly(count, 2, d, terms, rng);
      out.provenance["g"] = format_poly(g);
      out.p = ug_construction(g, xi);
    }
  } else if (kind == "wtilde") {
    const IsotropicSet xi = sample_isotropic(n, n / 2, rng(), true);
    std::vector<std::vector<ScalarVector>> groups(d - 1);
    for (std::size_t j = 0; j < xi.size(); ++j) groups[j % (d - 1)].push_back(xi[j]);
    std::vector<IsotropicSet> sets;
    Json sets_json = Json::array();
    for (auto& g : groups) {
      sets.emplace_back(n, std::move(g), true);
      sets_json.push_back(vectors_json(sets.back()));
    }
    out.provenance["sets"] = sets_json;
    out.p = w_tilde_construction(sets, d);
  } else {
    if (n % 2 != 0) throw DomainError("generator: kind '" + kind + "' needs an even n");
    const std::size_t half = n / 2;
    out.style = VarStyle::kUV;
    if (kind == "pg") {
      const Poly g = random_poly(half, 2, d, terms, rng);
      out.provenance["g"] = format_poly(g);
      out.p = pg_construction(g);
    } else {
      const bool homogeneous = !params.contains("homogeneous") || params.at("homogeneous").get<bool>();
      const PolyVector h = random_triangular_map(half, d - 1, homogeneous, terms, rng);
      Json hj = Json::array();
      for (const Poly& c : h.entries()) hj.push_back(format_poly(c));
      out.provenance["H"] = hj;
      const PHResult ph = ph_construction(h);
      out.provenance["jh_nilpotent"] = ph.jh_nilpotent;
      out.p = ph.p;
    }
  }
  out.provenance["polynomial"] = format_poly(out.p, out.style);
  out.provenance["corpus_note"] = kCorpusNote;
  return out;
}

}  // namespace hesnil
