#include <gtest/gtest.h>

#include <random>

#include "tori/padic.hpp"

using namespace tori;

namespace {

PadicScalar Q(const PadicContext& ctx, long num, long den = 1) { return PadicScalar::from_rational(ctx, Rat(num, den)); }

}  // namespace

TEST(PadicContext, PlainIntegersModPowerOfP) {
  auto ctx = make_context(5, 3);
  EXPECT_EQ(ctx.pk(3), 125);
  EXPECT_EQ(ctx.degree(), 1u);
}

TEST(PadicContext, ExplicitQuadraticModulus) {
  // x^2 + 6x + 3 has no root mod 7.
  for (int a = 0; a < 7; ++a) EXPECT_NE((a * a + 6 * a + 3) % 7, 0);
  auto ctx = make_context(7, 2, 2, std::vector<Int>{3, 6, 1});
  EXPECT_EQ(ctx.q(), 49);
}

TEST(PadicContext, Errors) {
  try {
    make_context(4, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotPrime);
  }
  try {
    make_context(7, 2, 2, std::vector<Int>{6, 0, 1});  // x^2 - 1
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ReducibleModulus);
  }
}

TEST(PadicContext, DefaultModulusIsDeterministic) {
  auto a = make_context(3, 4, 3);
  auto b = make_context(3, 4, 3);
  EXPECT_EQ(a.modulus(), b.modulus());
  EXPECT_EQ(a.modulus().size(), 4u);
}

TEST(PadicScalar, FromRational) {
  auto ctx = make_context(5, 3);
  // 4 * 94 = 376 = 3 * 125 + 1
  EXPECT_EQ(4 * 94 % 125, 1);
  auto s = Q(ctx, 3, 4);
  EXPECT_EQ(s.valuation(), 0);
  EXPECT_EQ(s.unit()[0], 32);
  EXPECT_EQ(Q(ctx, 5).valuation(), 1);
  EXPECT_EQ(Q(ctx, 5).unit()[0], 1);
  EXPECT_EQ(Q(ctx, 1, 5).valuation(), -1);
  EXPECT_EQ(Q(ctx, 1, 5).unit()[0], 1);
  EXPECT_EQ(Q(ctx, 75).valuation(), 2);
  EXPECT_TRUE(Q(ctx, 0).val().infinite);
  EXPECT_EQ(Q(ctx, 3, 25).valuation(), -2);
}

TEST(PadicScalar, CancellationExhaustsPrecision) {
  auto ctx = make_context(5, 3);
  auto a = Q(ctx, 1);
  auto b = Q(ctx, 126);
  auto d = a - b;
  EXPECT_TRUE(d.is_zero());
  EXPECT_TRUE(d.precision_exhausted());
  EXPECT_EQ(d.absolute_precision(), 3);
  auto e = Q(ctx, 1) - Q(ctx, 6);
  EXPECT_EQ(e.valuation(), 1);
  EXPECT_EQ(e.relative_precision(), 2);
}

TEST(PadicScalar, Teichmueller) {
  auto ctx = make_context(7, 2);
  auto w = teichmueller(Q(ctx, 2));
  EXPECT_EQ(w.unit()[0], 30);
  EXPECT_EQ(30 * 30 * 30 % 49, 1);
  EXPECT_TRUE(teichmueller(Q(ctx, 1)).equals(Q(ctx, 1)));
  auto ctx3 = make_context(7, 3);
  EXPECT_TRUE(teichmueller(Q(ctx3, 3)).pow(6).equals(Q(ctx3, 1)));
  try {
    teichmueller(Q(ctx, 7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAUnit);
  }
}

TEST(PadicScalar, LogOfSix) {
  // log(1 + 5) = 5 - 25/2 + 125/3 - ... ; mod 125 only the first two terms survive.
  Rat oracle = Rat(5) - Rat(25, 2);
  Int num = oracle.get_num(), den = oracle.get_den();
  Int expect = mod(num * inverse_mod(den, 125), 125);
  EXPECT_EQ(expect, 55);
  auto ctx = make_context(5, 3);
  auto l = log_unit(Q(ctx, 6));
  EXPECT_EQ(l.valuation(), 1);
  EXPECT_EQ(l.unit()[0], 11);
  EXPECT_EQ(l.to_residue(3)[0], 55);
}

TEST(PadicScalar, LogKillsTorsion) {
  auto ctx = make_context(7, 6);
  auto l = log_unit(teichmueller(Q(ctx, 2)));
  EXPECT_TRUE(l.is_zero());
}

TEST(PadicScalar, LogIsAHomomorphism) {
  auto ctx = make_context(7, 8);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(1, 1000000);
  auto unit = [&] {
    long a = dist(rng);
    return a % 7 == 0 ? a + 1 : a;
  };
  for (int i = 0; i < 100; ++i) {
    auto u = Q(ctx, unit(), unit()), w = Q(ctx, unit(), unit());
    EXPECT_TRUE(log_unit(u * w).equals(log_unit(u) + log_unit(w)));
    EXPECT_TRUE(log_unit(u * u).equals(Q(ctx, 2) * log_unit(u)));
  }
}

TEST(PadicScalar, UltrametricInequality) {
  auto ctx = make_context(3, 6);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(-5000, 5000);
  for (int i = 0; i < 500; ++i) {
    long a = dist(rng), b = dist(rng);
    if (a == 0 || b == 0 || a + b == 0) continue;
    auto x = Q(ctx, a), y = Q(ctx, b);
    auto s = x + y;
    if (s.is_zero()) continue;
    long m = std::min(x.valuation(), y.valuation());
    EXPECT_GE(s.valuation(), m);
    if (x.valuation() != y.valuation()) EXPECT_EQ(s.valuation(), m);
  }
}

TEST(PadicScalar, RationalEmbeddingIsARingMap) {
  auto ctx = make_context(11, 5);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> dist(-300, 300);
  for (int i = 0; i < 200; ++i) {
    long a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
    if (b % 11 == 0 || d % 11 == 0 || b == 0 || d == 0) continue;
    Rat x(a, b), y(c, d);
    x.canonicalize();
    y.canonicalize();
    auto px = PadicScalar::from_rational(ctx, x), py = PadicScalar::from_rational(ctx, y);
    EXPECT_TRUE((px + py).equals(PadicScalar::from_rational(ctx, x + y)));
    EXPECT_TRUE((px * py).equals(PadicScalar::from_rational(ctx, x * y)));
  }
}

TEST(PadicScalar, FrobeniusLaws) {
  auto ctx = make_context(7, 6, 2);
  const auto& F = ctx.residue_field();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Residue r{Int(static_cast<unsigned long>(rng() % 117649)), Int(static_cast<unsigned long>(rng() % 117649))};
    auto x = PadicScalar::from_residue(ctx, r, 6);
    EXPECT_TRUE(frobenius(frobenius(x)).equals(x));
    if (x.is_unit()) {
      EXPECT_EQ(frobenius(x).reduction(), F.pow(x.reduction(), std::uint64_t{7}));
      auto w = teichmueller(x);
      EXPECT_TRUE(frobenius(w).equals(w.pow(7)));
    }
  }
  auto c1 = make_context(5, 4);
  auto y = Q(c1, 17, 3);
  EXPECT_TRUE(frobenius(y).equals(y));
}

TEST(PadicScalar, TeichmuellerOverF49) {
  auto ctx = make_context(7, 6, 2);
  const auto& F = ctx.residue_field();
  auto one = PadicScalar::one(ctx);
  for (std::uint64_t e = 1; e < F.order(); ++e) {
    auto u = PadicScalar::from_field(ctx, e);
    auto w = teichmueller(u);
    EXPECT_TRUE(w.pow(48).equals(one));
    EXPECT_TRUE(log_unit(w).is_zero());
    EXPECT_TRUE(frobenius(w).equals(w.pow(7)));
    EXPECT_EQ(w.reduction(), e);
  }
}
