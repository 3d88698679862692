#include <gtest/gtest.h>

#include <random>

#include "tori/arith/zpoly.hpp"

using namespace tori;
using zx::ZX;

namespace {

const IntegerRing ZZ;

ZX Z(std::vector<long> c) {
  ZX out;
  for (long v : c) out.push_back(Int(v));
  upoly::trim(ZZ, out);
  return out;
}

ZX expand(const zx::Factorization& f) {
  ZX out{f.unit};
  for (const auto& [g, e] : f.factors) out = upoly::mul(ZZ, out, upoly::pow(ZZ, g, e));
  return out;
}

}  // namespace

TEST(ZPoly, Cyclotomic) {
  EXPECT_EQ(zx::cyclotomic(1), Z({-1, 1}));
  EXPECT_EQ(zx::cyclotomic(6), Z({1, -1, 1}));
  EXPECT_EQ(zx::cyclotomic(12), Z({1, 0, -1, 0, 1}));
  // Phi_105 is the first with a coefficient outside {-1, 0, 1}.
  auto f = zx::cyclotomic(105);
  EXPECT_EQ(upoly::degree(f), 48);
  EXPECT_EQ(f[7], Int(-2));
  for (unsigned long m = 1; m < 60; ++m) EXPECT_EQ(static_cast<unsigned long>(upoly::degree(zx::cyclotomic(m))), zx::euler_phi(m));
}

TEST(ZPoly, FactorSmall) {
  auto f = zx::factor(Z({-6, 0, 6}));  // 6 (x - 1)(x + 1)
  EXPECT_EQ(f.unit, Int(6));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].first, Z({-1, 1}));
  EXPECT_EQ(f.factors[1].first, Z({1, 1}));
  // x^4 + 1 is irreducible over Q but splits modulo every prime.
  EXPECT_TRUE(zx::is_irreducible(Z({1, 0, 0, 0, 1})));
  auto g = zx::factor(Z({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(g.factors.size(), 6u);
  for (const auto& [h, e] : g.factors) EXPECT_EQ(e, 1u);
}

TEST(ZPoly, FactorRandomProducts) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coef(-9, 9), deg(1, 5), count(1, 4), mult(1, 2);
  for (int trial = 0; trial < 60; ++trial) {
    ZX prod{Int(1)};
    const long k = count(rng);
    for (long i = 0; i < k; ++i) {
      ZX g;
      const long d = deg(rng);
      for (long j = 0; j < d; ++j) g.push_back(Int(coef(rng)));
      g.push_back(Int(1 + std::abs(coef(rng)) % 4));
      prod = upoly::mul(ZZ, prod, upoly::pow(ZZ, g, mult(rng)));
    }
    auto f = zx::factor(prod);
    EXPECT_EQ(expand(f), prod);
    for (const auto& [g, e] : f.factors) {
      EXPECT_EQ(zx::content(g), Int(1));
      EXPECT_GT(g.back(), 0);
      auto again = zx::factor(g);
      EXPECT_EQ(again.factors.size(), 1u) << upoly::to_string(ZZ, g);
    }
  }
}

TEST(ZPoly, SwinnertonDyer) {
  // Minimal polynomial of sqrt2 + sqrt3 + sqrt5: irreducible, many factors mod p.
  ZX f = Z({576, 0, -960, 0, 352, 0, -40, 0, 1});
  EXPECT_TRUE(zx::is_irreducible(f));
  auto g = zx::factor(upoly::mul(ZZ, f, Z({-2, 0, 1})));
  EXPECT_EQ(g.factors.size(), 2u);
}

TEST(ZPoly, GcdAndSquarefree) {
  ZX a = upoly::mul(ZZ, Z({1, 2}), Z({-3, 0, 1}));
  ZX b = upoly::mul(ZZ, Z({1, 2}), Z({5, 1}));
  EXPECT_EQ(zx::gcd(a, b), Z({1, 2}));
  ZX c = upoly::mul(ZZ, upoly::pow(ZZ, Z({1, 2}), 3), Z({-3, 0, 1}));
  auto s = zx::squarefree(c);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].first, Z({-3, 0, 1}));
  EXPECT_EQ(s[1].second, 3u);
}

TEST(ZPoly, RationalReconstruction) {
  const Int m = ipow(Int(7), 10);
  for (long num : {-40, -3, 0, 1, 5, 71})
    for (long den : {1, 2, 3, 9, 50}) {
      Rat q(num, den);
      q.canonicalize();
      Int a = mod(Int(q.get_num()) * inverse_mod(Int(q.get_den()), m), m);
      auto r = zx::rational_reconstruction(a, m, Int(100));
      ASSERT_TRUE(r);
      EXPECT_EQ(*r, q);
    }
  EXPECT_FALSE(zx::rational_reconstruction(Int(123456), Int(1000003), Int(5)));
}
