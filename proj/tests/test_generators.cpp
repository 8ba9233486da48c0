#include <gtest/gtest.h>

#include <random>

#include "corpora.hpp"
#include "hesnil/error.hpp"
#include "hesnil/generators.hpp"
#include "hesnil/nilpotency.hpp"
#include "test_support.hpp"

namespace hesnil {
namespace {

using testing::P;
using testing::PolyEq;

const GaussianRational kI = GaussianRational::i();

ScalarVector vec(std::initializer_list<GaussianRational> v) { return ScalarVector(v); }

bool powers_annihilated(const Poly& p, unsigned up_to) {
  Poly power = Poly::constant(p.arity(), 1);
  for (unsigned m = 1; m <= up_to; ++m) {
    power = mul(power, p);
    if (!laplacian(power).is_zero()) return false;
  }
  return true;
}

TEST(LinearForm, Examples) {
  EXPECT_EQ(linear_form(vec({1, kI})), P("z1 + i*z2", 2));
  EXPECT_TRUE(linear_form(vec({0, 0})).is_zero());
  EXPECT_EQ(linear_form(vec({1, 0, kI})), P("z1 + i*z3", 3));
}

TEST(IsotropicSetType, ValidatesMembership) {
  EXPECT_THROW(IsotropicSet(2, {vec({1, 1})}, false), DomainError);
  EXPECT_THROW(IsotropicSet(2, {vec({1, kI, 0})}, false), DomainError);
  // (1, i, 0) and (1, 0, i) are isotropic but not orthogonal.
  const std::vector<ScalarVector> pair{vec({1, kI, 0}), vec({1, 0, kI})};
  EXPECT_NO_THROW(IsotropicSet(3, pair, false));
  EXPECT_THROW(IsotropicSet(3, pair, true), DomainError);
}

TEST(WConstruction, SingleVector) {
  const IsotropicSet xi(4, {vec({1, kI, 0, 0})}, true);
  EXPECT_EQ(w_construction(xi, 3), P("(z1+i*z2)^3", 4));
}

TEST(WConstruction, TwoOrthogonalVectors) {
  const IsotropicSet xi(4, {vec({1, kI, 0, 0}), vec({0, 0, 1, kI})}, true);
  ASSERT_TRUE(bilinear(xi[0], xi[1]).is_zero());
  const HNReport r = is_hn(w_construction(xi, 4));
  EXPECT_TRUE(r.verdict_matrix);
  EXPECT_TRUE(r.verdict_laplacian);
}

TEST(WConstruction, EmptySetAndErrors) {
  EXPECT_TRUE(w_construction(IsotropicSet(3, {}, true), 3).is_zero());
  const IsotropicSet bad(3, {vec({1, kI, 0}), vec({1, 0, kI})}, false);
  EXPECT_THROW(w_construction(bad, 3), DomainError);
  EXPECT_THROW(w_construction(IsotropicSet(3, {}, true), 1), DomainError);
}

TEST(WTildeConstruction, Examples) {
  const IsotropicSet a(4, {vec({1, kI, 0, 0})}, true);
  const IsotropicSet b(4, {vec({0, 0, 1, -kI})}, true);
  EXPECT_EQ(w_tilde_construction({a}, 2), w_construction(a, 2));
  const Poly p = w_tilde_construction({a, b}, 3);
  EXPECT_EQ(p, w_construction(a, 2) + w_construction(b, 3));
  EXPECT_TRUE(is_hn(p).is_hn());
  EXPECT_EQ(w_tilde_construction({a, b}, 2), w_construction(a, 2));
  EXPECT_TRUE(w_tilde_construction({}, 5).is_zero());
  EXPECT_TRUE(w_tilde_construction({IsotropicSet(4, {}, true)}, 5).is_zero());
  const IsotropicSet c(4, {vec({1, 0, kI, 0})}, true);
  EXPECT_THROW(w_tilde_construction({a, c}, 3), DomainError);
}

TEST(UgConstruction, Examples) {
  const IsotropicSet betas(4, {vec({1, kI, 0, 0}), vec({0, 0, 1, kI})}, true);
  const Poly p = ug_construction(P("z1*z2", 2), betas);
  EXPECT_TRUE(PolyEq(p, P("(z1+i*z2)*(z3+i*z4)", 4)));
  EXPECT_TRUE(is_hn(p).is_hn());
  const IsotropicSet one(2, {vec({1, kI})}, true);
  EXPECT_EQ(ug_construction(P("z1^5", 1), one), pow(linear_form(one[0]), 5));
  const Poly c = ug_construction(Poly::constant(2, 7), betas);
  EXPECT_EQ(c, Poly::constant(4, 7));
  EXPECT_TRUE(hessian(c).is_zero());
  EXPECT_THROW(ug_construction(P("z1", 1), betas), DomainError);
}

TEST(PgConstruction, Examples) {
  EXPECT_TRUE(PolyEq(pg_construction(P("z1^2", 1)), parse_poly("(u1+i*v1)^2")));
  const Poly p = pg_construction(P("z1*z2", 2));
  EXPECT_TRUE(PolyEq(p, parse_poly("(u1+i*v1)*(u2+i*v2)")));
  EXPECT_TRUE(is_hn(p).is_hn());
  EXPECT_TRUE(pg_construction(Poly(2)).is_zero());
  EXPECT_EQ(pg_construction(Poly(2)).arity(), 4u);
}

TEST(PhConstruction, Examples) {
  const PHResult ph = ph_construction(PolyVector(std::vector<Poly>{P("z2^2", 2), Poly(2)}));
  EXPECT_TRUE(PolyEq(ph.p, parse_poly("v1*(u2+i*v2)^2")));
  EXPECT_TRUE(ph.jh_nilpotent);
  EXPECT_TRUE(is_hn(ph.p).is_hn());

  const PHResult lin = ph_construction(PolyVector(std::vector<Poly>{P("z1", 2), Poly(2)}));
  EXPECT_FALSE(lin.jh_nilpotent);
  EXPECT_FALSE(is_hn(lin.p).is_hn());

  const PHResult zero = ph_construction(PolyVector(2, 2));
  EXPECT_TRUE(zero.p.is_zero());
}

TEST(PhConstruction, VerdictMatchesJacobianNilpotency) {
  std::mt19937_64 rng(31337);
  std::size_t nilpotent = 0;
  std::size_t total = 0;
  for (int trial = 0; trial < 60; ++trial) {
    // Mostly two-variable maps; a few quadratic three-variable ones keep the
    // arity-6 Laplacian powers affordable.
    const std::size_t n = trial % 6 == 5 ? 3 : 2;
    const unsigned max_degree = n == 3 ? 2 : 3;
    PolyVector h(n, n);
    if (trial % 2 == 0) {
      h = random_triangular_map(n, max_degree, false, 2, rng);
    } else {
      for (std::size_t i = 0; i < n; ++i) h[i] = random_poly(n, 1, max_degree, 2, rng);
    }
    // Keep order(P_H) >= 2: H must have no constant terms (guaranteed above).
    const PHResult ph = ph_construction(h);
    EXPECT_EQ(is_hn(ph.p).is_hn(), ph.jh_nilpotent) << trial;
    nilpotent += ph.jh_nilpotent ? 1 : 0;
    ++total;
  }
  EXPECT_GE(total, 50u);
  EXPECT_GT(nilpotent, 10u);
  EXPECT_LT(nilpotent, total);
}

TEST(PsiDataType, EntriesFollowGramMatrix) {
  const IsotropicSet s(3, {vec({1, kI, 0}), vec({1, 0, kI})}, false);
  const PsiData d = psi_data(s, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_EQ(d.psi(i, j), d.a[i][j] * pow(linear_form(s[j]), 2));
    }
  }
  EXPECT_EQ(d.a[0][1], GaussianRational(1));
  EXPECT_TRUE(d.a[0][0].is_zero());
}

TEST(IsotropicTraceCriterion, SingleVector) {
  const IsotropicSet s(3, {vec({1, kI, 0})}, false);
  const PsiData d = psi_data(s, 3);
  EXPECT_TRUE(d.psi.is_zero());
  const Crit2Result r = crit2_check(s, 3, 3);
  for (const auto& [tr, psi] : r.trace_pairs) {
    EXPECT_TRUE(tr.is_zero());
    EXPECT_TRUE(psi.is_zero());
  }
}

TEST(IsotropicTraceCriterion, TwoNonOrthogonalCubes) {
  const IsotropicSet s(3, {vec({1, kI, 0}), vec({1, 0, kI})}, false);
  const Crit2Result r = crit2_check(s, 3, 3);
  const Poly h1h2 = P("(z1+i*z2)*(z1+i*z3)", 3);
  ASSERT_EQ(r.trace_pairs.size(), 3u);
  EXPECT_TRUE(PolyEq(r.trace_pairs[1].first, GaussianRational(72) * h1h2));
  EXPECT_TRUE(PolyEq(r.trace_pairs[1].second, GaussianRational(36) * (GaussianRational(2) * h1h2)));
  EXPECT_TRUE(r.traces_agree());
  EXPECT_FALSE(r.hn);
}

TEST(IsotropicTraceCriterion, OrthogonalSetHasZeroPsi) {
  const IsotropicSet s(4, {vec({1, kI, 0, 0}), vec({0, 0, 2, -2 * kI})}, true);
  const Crit2Result r = crit2_check(s, 4, 3);
  EXPECT_TRUE(psi_data(s, 4).psi.is_zero());
  for (const auto& [tr, psi] : r.trace_pairs) {
    EXPECT_TRUE(tr.is_zero());
    EXPECT_TRUE(psi.is_zero());
  }
  EXPECT_TRUE(r.hn);
  EXPECT_TRUE(r.hn_consequences_hold());
}

TEST(IsotropicTraceCriterion, NilpotentGramTriple) {
  const IsotropicSet s(4, {vec({GaussianRational(1, -1), 1, GaussianRational(1, 1), kI}),
                           vec({1, kI, 0, 0}), vec({0, 0, 1, kI})},
                       false);
  const Crit2Result r = crit2_check(s, 2, 4);
  EXPECT_TRUE(r.traces_agree());
  EXPECT_TRUE(r.hn);
  ASSERT_TRUE(r.det_a.has_value());
  EXPECT_TRUE(r.det_a->is_zero());
  EXPECT_TRUE(r.hn_consequences_hold());
}

TEST(IsotropicTraceCriterion, RandomIsotropicSets) {
  std::mt19937_64 rng(4242);
  std::size_t hn = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const std::size_t k = 1 + trial % 3;
    const unsigned d = 2 + trial % 3;
    const bool orth = trial % 4 == 0 && k <= n / 2;
    const IsotropicSet s = sample_isotropic(n, k, rng(), orth);
    const Crit2Result r = crit2_check(s, d, 3);
    EXPECT_TRUE(r.traces_agree()) << trial;
    EXPECT_TRUE(r.hn_consequences_hold()) << trial;
    hn += r.hn ? 1 : 0;
  }
  EXPECT_GT(hn, 0u);
}

TEST(SampleIsotropic, PlaneGivesMultiplesOfIsotropicDirections) {
  const IsotropicSet s = sample_isotropic(2, 5, 9, false);
  for (const ScalarVector& v : s.vectors()) {
    ASSERT_FALSE(v[0].is_zero());
    const GaussianRational ratio = v[1] / v[0];
    EXPECT_TRUE(ratio == kI || ratio == -kI);
  }
}

TEST(SampleIsotropic, DeterministicPerSeed) {
  const IsotropicSet a = sample_isotropic(4, 3, 123, false);
  const IsotropicSet b = sample_isotropic(4, 3, 123, false);
  EXPECT_EQ(a.vectors(), b.vectors());
  const IsotropicSet c = sample_isotropic(4, 3, 124, false);
  EXPECT_NE(a.vectors(), c.vectors());
}

TEST(SampleIsotropic, OrthogonalFamilies) {
  const IsotropicSet s = sample_isotropic(4, 2, 5, true);
  EXPECT_TRUE(s.is_pairwise_orthogonal());
  for (const ScalarVector& v : s.vectors()) {
    std::size_t support = 0;
    for (const auto& x : v) support += x.is_zero() ? 0 : 1;
    EXPECT_EQ(support, 2u);
  }
  EXPECT_THROW(sample_isotropic(4, 3, 5, true), DomainError);
  EXPECT_THROW(sample_isotropic(1, 1, 5, false), DomainError);
}

TEST(SampleIsotropic, OddDimensionsAreExactlyIsotropic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const IsotropicSet s = sample_isotropic(3 + seed % 3, 3, seed, false);
    for (const ScalarVector& v : s.vectors()) EXPECT_TRUE(bilinear(v, v).is_zero());
  }
}

TEST(IsotropicPowers, LaplacianOfProduct) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const IsotropicSet s = sample_isotropic(n, 2, rng(), false);
    const Poly ha = linear_form(s[0]);
    const Poly hb = linear_form(s[1]);
    const GaussianRational ab = bilinear(s[0], s[1]);
    for (unsigned m = 1; m <= 4; ++m) {
      for (unsigned k = 1; k <= 4; ++k) {
        const Poly lhs = laplacian(mul(pow(ha, m), pow(hb, k)));
        const Poly rhs = GaussianRational(static_cast<long>(2 * m * k)) * ab *
                         mul(pow(ha, m - 1), pow(hb, k - 1));
        EXPECT_EQ(lhs, rhs);
      }
    }
  }
}

TEST(Constructions, OutputsAreHnWithHarmonicPowers) {
  for (const char* kind : {"w", "wtilde", "ug", "pg"}) {
    for (unsigned d = 2; d <= 4; ++d) {
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const Poly p = generate_polynomial(kind, 4, d, seed).p;
        EXPECT_TRUE(is_hn(p).is_hn()) << kind << d;
        EXPECT_TRUE(powers_annihilated(p, 4)) << kind << d;
      }
    }
  }
}

TEST(Generators, ProvenanceAndErrors) {
  const GeneratedPoly g = generate_polynomial("ph", 4, 3, 11);
  EXPECT_EQ(g.provenance.at("kind"), "ph");
  EXPECT_EQ(g.provenance.at("seed"), 11);
  EXPECT_TRUE(g.provenance.at("jh_nilpotent").get<bool>());
  EXPECT_EQ(g.provenance.at("polynomial").get<std::string>(), format_poly(g.p, VarStyle::kUV));
  EXPECT_EQ(generate_polynomial("ph", 4, 3, 11).p, g.p);
  EXPECT_THROW(generate_polynomial("pg", 3, 3, 1), DomainError);
  EXPECT_THROW(generate_polynomial("spline", 4, 3, 1), DomainError);
}

TEST(ScalarDeterminant, SmallMatrices) {
  EXPECT_EQ(scalar_determinant({{1, 2}, {3, 4}}), GaussianRational(-2));
  EXPECT_EQ(scalar_determinant({{0, kI}, {kI, 0}}), GaussianRational(1));
  EXPECT_EQ(scalar_determinant({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}), GaussianRational(0));
  EXPECT_EQ(scalar_determinant({}), GaussianRational(1));
}

}  // namespace
}  // namespace hesnil
