#include <gtest/gtest.h>

#include <random>

#include "hesnil/diffops.hpp"
#include "hesnil/error.hpp"
#include "hesnil/generators.hpp"
#include "test_support.hpp"

namespace hesnil {
namespace {

using testing::P;
using testing::PolyEq;

TEST(Derivatives, LaplacianOfSumOfSquares) {
  EXPECT_EQ(laplacian(P("z1^2+z2^2", 2)), Poly::constant(2, 4));
  EXPECT_EQ(laplacian(Poly(3)), Poly(3));
  EXPECT_EQ(laplacian(Poly(3)).arity(), 3u);
}

TEST(Derivatives, HessianOfProduct) {
  const PolyMatrix h = hessian(P("z1*z2", 2));
  EXPECT_TRUE(h(0, 0).is_zero());
  EXPECT_EQ(h(0, 1), Poly::constant(2, 1));
  EXPECT_EQ(h(1, 0), Poly::constant(2, 1));
  EXPECT_TRUE(h(1, 1).is_zero());
}

TEST(Derivatives, IsotropicPowersAreHarmonic) {
  for (unsigned d = 2; d <= 5; ++d) {
    EXPECT_TRUE(laplacian(pow(P("z1+i*z2", 2), d)).is_zero()) << d;
  }
}

TEST(Derivatives, IteratedLaplacianAndIndexChecks) {
  const Poly p = P("z1^4*z2^2", 2);
  EXPECT_EQ(laplacian_iter(p, 0), p);
  EXPECT_TRUE(PolyEq(laplacian_iter(p, 2), P("48*z1^2 + 24*z2^2", 2)));
  EXPECT_THROW(partial(p, 2), DomainError);
  EXPECT_TRUE(PolyEq(partial_multi(p, Monomial{2, 1}), P("24*z1^2*z2", 2)));
}

TEST(GradPair, Examples) {
  EXPECT_EQ(grad_pair(P("z1", 1), P("z1", 1)), Poly::constant(1, 1));
  EXPECT_TRUE(grad_pair(P("z1^2", 2), P("z2^2", 2)).is_zero());
  // For harmonic p, <grad p, grad p> = Lap(p^2) / 2; both vanish here.
  const Poly p = P("(z1+i*z2)^2", 2);
  EXPECT_TRUE(grad_pair(p, p).is_zero());
  EXPECT_TRUE(laplacian(mul(p, p)).is_zero());
  EXPECT_THROW(grad_pair(P("z1", 1), P("z1", 2)), DomainError);
}

TEST(LambdaOp, Examples) {
  const Poly p = P("z1^3 - z2", 2);
  EXPECT_TRUE(lambda_op(p, Poly::constant(2, 1)).is_zero());
  EXPECT_EQ(lambda_op(P("z1^2", 1), P("z1", 1)), P("2*z1", 1));
  const Poly f = P("z1*z2^2 + i*z2", 2);
  EXPECT_EQ(lambda_op(p, f), grad_pair(p, f));
}

TEST(ApplyD, Examples) {
  EXPECT_EQ(apply_D(P("z1", 1), P("z1^2", 1)), P("2*z1", 1));
  const Poly g = P("z1^3*z2 - 2*i*z2^4 + z1*z2", 2);
  EXPECT_EQ(apply_D(P("z1^2+z2^2", 2), g), laplacian(g));
  EXPECT_EQ(apply_D(P("z1*z2", 2), P("z1^2*z2^2", 2)), P("4*z1*z2", 2));
}

TEST(ApplyD, NoConjugationOfCoefficients) {
  EXPECT_EQ(apply_D(P("i*z1", 1), P("z1", 1)), P("i", 1));
}

TEST(LeibnizIdentity, Examples) {
  auto [lhs, rhs] = leibniz_identity_check(P("z1", 1), 1);
  EXPECT_EQ(lhs, Poly::constant(1, 2));
  EXPECT_EQ(rhs, lhs);
  std::tie(lhs, rhs) = leibniz_identity_check(P("z1^2+z2", 2), 2);
  EXPECT_TRUE(PolyEq(lhs, P("30*z1^4 + 36*z1^2*z2 + 6*z1^2 + 6*z2^2 + 6*z2", 2)));
  EXPECT_EQ(rhs, lhs);
}

TEST(LeibnizIdentity, HarmonicRestatement) {
  // Delta p = 0  =>  p^{m-1} Lap(p^2) = 2/(m(m+1)) Lap(p^{m+1}).
  const Poly p = P("z1*z2 + z1^3 - 3*z1*z2^2", 2);
  ASSERT_TRUE(laplacian(p).is_zero());
  for (unsigned m = 1; m <= 4; ++m) {
    const Poly lhs = mul(pow(p, m - 1), laplacian(mul(p, p)));
    const GaussianRational c = GaussianRational(2) / GaussianRational(m * (m + 1));
    EXPECT_EQ(lhs, c * laplacian(pow(p, m + 1))) << m;
  }
}

TEST(ProductExpansion, FirstOrderCase) {
  const Poly g = P("z1^2*z2 + i*z2", 2);
  const Poly f = P("z1*z2^3 - z1", 2);
  Poly expected = mul(laplacian(g), f) + mul(g, laplacian(f));
  expected += GaussianRational(2) * grad_pair(g, f);
  EXPECT_EQ(laplacian_product_expansion(g, f, 1), expected);
}

TEST(ProductExpansion, UnitFactor) {
  const Poly f = P("z1^5*z2^2 - z2^4", 2);
  for (unsigned l = 0; l <= 3; ++l) {
    EXPECT_EQ(laplacian_product_expansion(Poly::constant(2, 1), f, l), laplacian_iter(f, l));
  }
}

TEST(KFactorialIdentity, Examples) {
  const Poly g = P("z1^3*z2^2 + 5*z1*z2", 2);
  auto [lhs, rhs] = kfactorial_fD_identity(P("z1*z2", 2), g);
  EXPECT_EQ(lhs, GaussianRational(2) * partial(partial(g, 0), 1));
  EXPECT_EQ(rhs, lhs);
  std::tie(lhs, rhs) = kfactorial_fD_identity(P("z1", 1), P("z1^3", 1));
  EXPECT_EQ(lhs, P("3*z1^2", 1));
  EXPECT_EQ(rhs, lhs);
  std::tie(lhs, rhs) = kfactorial_fD_identity(P("z1^2", 1), P("z1^4", 1));
  EXPECT_EQ(lhs, P("24*z1^2", 1));
  EXPECT_EQ(rhs, lhs);
  EXPECT_THROW(kfactorial_fD_identity(P("z1 + z1^2", 1), P("z1", 1)), DomainError);
}

TEST(Jacobian, Examples) {
  const PolyVector id(std::vector<Poly>{P("z1", 2), P("z2", 2)});
  EXPECT_EQ(jacobian(id), PolyMatrix::identity(2, 2));
  const Poly p = P("(z1+i*z2)^3", 2);
  const PolyVector g = grad(p);
  const PolyVector f(std::vector<Poly>{P("z1", 2) - g[0], P("z2", 2) - g[1]});
  EXPECT_EQ(jacobian_det(f), Poly::constant(2, 1));
  EXPECT_EQ(trace(hessian(p)), laplacian(p));
}

TEST(Matrix, DeterminantMatchesCofactorFormula) {
  PolyMatrix m(3, 3, 1);
  const char* entries[] = {"z1", "1", "2", "0", "z1^2", "i", "3", "z1", "1"};
  for (int k = 0; k < 9; ++k) m(k / 3, k % 3) = P(entries[k], 1);
  // z1(z1^2 - i z1) - 1(0 - 3i) + 2(0 - 3 z1^2)
  EXPECT_TRUE(PolyEq(determinant(m), P("z1^3 - i*z1^2 + 3*i - 6*z1^2", 1)));
  EXPECT_THROW(determinant(PolyMatrix(2, 3, 1)), DomainError);
}

TEST(Matrix, PowerAndProductShapes) {
  const PolyMatrix h = hessian(P("z1^2*z2", 2));
  EXPECT_EQ(pow(h, 2), h * h);
  EXPECT_EQ(pow(h, 0), PolyMatrix::identity(2, 2));
  EXPECT_THROW(h * PolyMatrix(3, 3, 2), DomainError);
}

TEST(Potential, RecoversPolynomialWithoutConstant) {
  const Poly q = P("z1^3*z2 - 2*i*z2^2 + z1", 2);
  EXPECT_EQ(potential_from_gradient(grad(q)), q);
}

TEST(MultiIndices, CountAndMultinomial) {
  EXPECT_EQ(multi_indices(3, 2).size(), 6u);
  EXPECT_EQ(multi_indices(2, 0).size(), 1u);
  EXPECT_EQ(multinomial(Monomial{2, 1, 1}), GaussianRational(12));
}

class RandomDiffops : public ::testing::Test {
 protected:
  std::mt19937_64 rng{777};
};

TEST_F(RandomDiffops, HessianIsSymmetric) {
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 3;
    EXPECT_TRUE(hessian(testing::random_sparse(rng, n, 6, 6)).is_symmetric());
  }
}

TEST_F(RandomDiffops, LeibnizIdentityHolds) {
  for (int trial = 0; trial < 20; ++trial) {
    const Poly p = testing::random_sparse(rng, 1 + trial % 3, 3, 3);
    for (unsigned m = 1; m <= 4; ++m) {
      const auto [lhs, rhs] = leibniz_identity_check(p, m);
      EXPECT_EQ(lhs, rhs) << format_poly(p) << " m=" << m;
    }
  }
}

TEST_F(RandomDiffops, ProductExpansionMatchesIteratedLaplacian) {
  for (int trial = 0; trial < 20; ++trial) {
    const Poly g = testing::random_sparse(rng, 2, 3, 4);
    const Poly f = testing::random_sparse(rng, 2, 3, 4);
    for (unsigned l = 0; l <= 3; ++l) {
      EXPECT_EQ(laplacian_product_expansion(g, f, l), laplacian_iter(mul(g, f), l));
    }
  }
}

TEST_F(RandomDiffops, KFactorialIdentityHolds) {
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const unsigned k = 1 + trial % 3;
    const Poly f = testing::random_homogeneous(rng, n, k);
    if (f.is_zero()) continue;
    const Poly g = testing::random_sparse(rng, n, 6, 5);
    const auto [lhs, rhs] = kfactorial_fD_identity(f, g);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST_F(RandomDiffops, ApplyDIsLinearInOperator) {
  for (int trial = 0; trial < 30; ++trial) {
    const Poly f1 = testing::random_sparse(rng, 3, 3, 3);
    const Poly f2 = testing::random_sparse(rng, 3, 3, 3);
    const Poly g = testing::random_sparse(rng, 3, 5, 5);
    EXPECT_EQ(apply_D(f1 + f2, g), apply_D(f1, g) + apply_D(f2, g));
  }
}

TEST_F(RandomDiffops, HessianOfIsotropicPowerIsRankOne) {
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const IsotropicSet s = sample_isotropic(n, 1, rng(), false);
    const Poly h = linear_form(s[0]);
    for (unsigned m = 2; m <= 5; ++m) {
      const PolyMatrix hes = hessian(pow(h, m));
      const Poly base = GaussianRational(static_cast<long>(m * (m - 1))) * pow(h, m - 2);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          EXPECT_EQ(hes(i, j), (s[0][i] * s[0][j]) * base);
        }
      }
    }
  }
}

TEST_F(RandomDiffops, PartialDerivativesCommute) {
  for (int trial = 0; trial < 30; ++trial) {
    const Poly p = testing::random_sparse(rng, 3, 6, 6);
    EXPECT_EQ(partial(partial(p, 0), 2), partial(partial(p, 2), 0));
  }
}

}  // namespace
}  // namespace hesnil
