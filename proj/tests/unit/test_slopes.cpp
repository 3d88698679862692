#include <gtest/gtest.h>

#include <random>

#include "tori/slopes.hpp"

using namespace tori;

namespace {

const IntegerRing ZZ;

ZPoly2 P(std::vector<std::tuple<long, long, Int>> terms) { return ZPoly2::from_terms(ZZ, terms); }
RationalFunction F(std::vector<std::tuple<long, long, Int>> terms) { return RationalFunction::poly(P(std::move(terms))); }

// The multiplicative group as the curve y = x.
PlaneCurve gm(long p, long N) { return make_curve(P({{0, 1, 1}, {1, 0, -1}}), 0, 2, make_context(p, N)); }

// Direct substitution into log f(z0) + sum_m (-1)^{m+1} (f - f(z0))^m / (m f(z0)^m).
Series<PadicRing> literal_log_series(const Series<PadicRing>& f) {
  const auto& R = f.ring();
  auto f0 = f.constant_term();
  auto d = sub(f, Series<PadicRing>::polynomial(R, {f0}));
  Series<PadicRing> acc(R, {log_unit(f0)}, f.trunc());
  auto pw = Series<PadicRing>(R, {R.one()}, f.trunc());
  for (long m = 1; m <= f.trunc(); ++m) {
    pw = mul(pw, d);
    auto c = R.one() / (R.from_int(Int(m)) * f0.pow(m));
    if (m % 2 == 0) c = -c;
    acc = add(acc, scale(pw, c));
  }
  return acc;
}

}  // namespace

TEST(LogDiscSeries, MultiplicativeGroupAtOne) {
  auto c = gm(5, 6);
  auto z0 = make_disc_point(c, Rat(1), Rat(1));
  auto L = log_f_disc_series(c, F({{1, 0, 1}}), z0, 20);
  PadicRing R{c.ctx};
  EXPECT_TRUE(L.constant_term().is_zero());
  for (long i = 1; i <= 20; ++i) EXPECT_TRUE(L.coeff(i).equals(R.from_rational(Rat(i % 2 ? 1 : -1, i)))) << i;
}

TEST(LogDiscSeries, ShiftedCentre) {
  auto c = gm(7, 6);
  auto z0 = make_disc_point(c, Rat(2), Rat(2));
  auto L = log_f_disc_series(c, F({{1, 0, 1}}), z0, 12);
  PadicRing R{c.ctx};
  EXPECT_TRUE(L.constant_term().equals(log_unit(R.from_int(2))));
  for (long m = 1; m <= 12; ++m) {
    Rat e = Rat(m % 2 ? 1 : -1) / (Rat(m) * Rat(ipow(2, m)));
    EXPECT_TRUE(L.coeff(m).equals(R.from_rational(e))) << m;
  }
  auto f = eval_function_series(c, F({{1, 0, 1}}), z0, 12);
  EXPECT_TRUE(series_equal(L, literal_log_series(f)));
}

TEST(LogDiscSeries, TeichmuellerCentreHasZeroConstant) {
  auto ctx = make_context(7, 6);
  auto c = make_curve(P({{0, 1, 1}, {1, 0, -1}}), 0, 2, ctx);
  auto w = teichmueller(PadicScalar::from_int(ctx, 2));
  auto z0 = make_disc_point(c, w, w);
  EXPECT_TRUE(log_f_disc_series(c, F({{1, 0, 1}}), z0, 6).constant_term().is_zero());
}

TEST(LogDiscSeries, NonUnitValue) {
  auto c = gm(5, 4);
  auto z0 = make_disc_point(c, Rat(5), Rat(5));
  try {
    log_f_disc_series(c, F({{1, 0, 1}}), z0, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAUnit);
  }
}

TEST(PredictSlopes, LogSeriesPattern) {
  auto pr = predict_slopes(1, Valuation::inf(), Int(5), 625);
  std::vector<HullVertex> expect{{1, 0}, {5, -1}, {25, -2}, {125, -3}, {625, -4}};
  EXPECT_EQ(pr.vertices, expect);
  ASSERT_EQ(pr.slopes.size(), 4u);
  EXPECT_EQ(pr.slopes[0].lambda, Rat(1, 4));
  EXPECT_EQ(pr.slopes[3].lambda, Rat(1, 500));
}

TEST(PredictSlopes, OrderTwo) {
  auto pr = predict_slopes(2, Valuation(1), Int(5), 250);
  std::vector<HullVertex> expect{{2, 0}, {10, -1}, {50, -2}, {250, -3}};
  EXPECT_EQ(pr.vertices, expect);
  EXPECT_EQ(pr.slopes[0].lambda, Rat(1, 8));
  EXPECT_EQ(pr.slopes[0].length, 8);
  try {
    predict_slopes(5, Valuation(1), Int(5), 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::HypothesisViolated);
  }
}

TEST(PredictSlopes, ValuationZeroClause) {
  auto pr = predict_slopes(1, Valuation(0), Int(3), 27);
  std::vector<HullVertex> expect{{0, 0}, {3, -1}, {9, -2}, {27, -3}};
  EXPECT_EQ(pr.vertices, expect);
  EXPECT_EQ(pr.slopes[0].lambda, Rat(1, 3));
  EXPECT_EQ(pr.case_tag, SlopeCase::NonPositiveValuation);
}

TEST(VerifySlopes, MultiplicativeGroup) {
  auto c = gm(5, 6);
  auto z0 = make_disc_point(c, Rat(1), Rat(1));
  auto rep = verify_slopes(c, F({{1, 0, 1}}), z0, 130);
  EXPECT_EQ(rep.verdict, SlopeVerdict::Match) << rep.details;
  EXPECT_EQ(rep.predicted.k, 1);
  ASSERT_EQ(rep.computed.vertices.size(), 4u);
  EXPECT_EQ(rep.computed.vertices.back(), (HullVertex{125, -3}));
  EXPECT_FALSE(ramified_slope_flag(rep));
}

TEST(VerifySlopes, CriticalPointOnLine) {
  // f = x(1 - x) has a critical point at x = 1/2, so k = 2 there.
  auto ctx = make_context(7, 6);
  auto c = make_curve(P({{1, 0, 1}, {0, 1, 1}, {0, 0, -1}}), 0, 3, ctx);
  auto z0 = make_disc_point(c, Rat(1, 2), Rat(1, 2));
  auto f = F({{1, 0, 1}, {2, 0, -1}});
  auto rep = verify_slopes(c, f, z0, 100);
  EXPECT_EQ(rep.predicted.k, 2);
  EXPECT_EQ(rep.verdict, SlopeVerdict::Match) << rep.details;
  auto neg = negative_slopes(rep.computed);
  ASSERT_GE(neg.size(), 2u);
  EXPECT_EQ(neg[1].first, Rat(1, 12));
  // The slope 1/2 from the constant term is non-integral and above 1/6, consistent with k > 1.
  EXPECT_TRUE(ramified_slope_flag(rep));
}

TEST(VerifySlopes, OutOfHypothesis) {
  // f = x^4 - x + 1 at p = 3: the dlog numerator 4x^3 - 1 = (x - 1)^3 mod 3 vanishes to order 3 at x = 1.
  auto ctx = make_context(3, 5);
  auto c = make_curve(P({{0, 1, 1}, {1, 0, -1}}), 0, 2, ctx);
  auto f = F({{4, 0, 1}, {1, 0, -1}, {0, 0, 1}});
  auto z0 = make_disc_point(c, Rat(1), Rat(1));
  auto rep = verify_slopes(c, f, z0, 20);
  EXPECT_GE(rep.predicted.k, 3);
  EXPECT_EQ(rep.verdict, SlopeVerdict::OutOfHypothesis);
}

TEST(RamifiedSlopeFlag, Synthetic) {
  // Slope 1/3 at p = 7: vertices (0,1), (3,0).
  auto np = newton_polygon({Rat(1), std::nullopt, Rat(5), Rat(0)}, 3, true);
  EXPECT_TRUE(ramified_slope_flag(np, Int(7)));
  // Slope 1/(2(p-1)) = 1/12 stays below 1/6.
  auto np2 = newton_polygon({Rat(1), std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                             std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                             Rat(0)},
                            12, true);
  EXPECT_FALSE(ramified_slope_flag(np2, Int(7)));
  // Integral slope 2 never counts.
  auto np3 = newton_polygon({Rat(2), Rat(0)}, 1, true);
  EXPECT_FALSE(ramified_slope_flag(np3, Int(7)));
}

TEST(RamificationBound, Values) {
  auto b = ramification_bound(0, 4, Int(5));
  EXPECT_EQ(b.bound, 4);
  EXPECT_TRUE(b.valid);
  EXPECT_EQ(ramification_bound(2, 6, Int(11)).bound, 10);
  EXPECT_FALSE(ramification_bound(0, 4, Int(3)).valid);
}

TEST(ThetaMaps, Examples) {
  auto maps = theta_maps({{1, 1}, {2, 0}, {0, 0}});
  ASSERT_EQ(maps.size(), 2u);
  std::vector<std::vector<Int>> e0{{-2, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(maps[0].exponents, e0);
  std::vector<std::vector<Int>> e1{{0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(maps[1].exponents, e1);
  try {
    theta_maps({{0}, {0}, {0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroColumn);
  }
}

TEST(ThetaMaps, AnnihilateTheirColumn) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::vector<Int>> a(3, std::vector<Int>(4));
    for (auto& row : a)
      for (auto& x : row) x = static_cast<long>(rng() % 9) - 4;
    for (std::size_t j = 0; j < 4; ++j)
      if (a[0][j] == 0 && a[1][j] == 0 && a[2][j] == 0) a[2][j] = 1;
    for (const auto& m : theta_maps(a))
      for (const auto& row : m.exponents) {
        Int s = 0;
        for (std::size_t i = 0; i < 3; ++i) s += row[i] * a[i][m.column];
        EXPECT_EQ(s, 0);
      }
  }
}

TEST(BuiumBound, Values) {
  EXPECT_EQ(buium_bound(2, Int(5)), Int(154687500));
  EXPECT_EQ(Int(6561) * 9 * 18 * 2, Int(2125764));
  EXPECT_EQ(buium_bound(2, Int(3)), Int(2125764));
  try {
    buium_bound(1, Int(5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::HypothesisViolated);
  }
}

TEST(PairMinor, EqualFunctionsVanish) {
  auto ctx = make_context(5, 5);
  auto c = make_curve(P({{0, 1, 1}, {1, 0, -1}, {0, 0, -1}}), 0, 3, ctx);
  auto z1 = make_disc_point(c, Rat(1), Rat(2));
  auto z2 = make_disc_point(c, Rat(2), Rat(3));
  auto m = pair_minor_series(c, F({{1, 0, 1}}), F({{1, 0, 1}}), z1, z2, 4);
  EXPECT_TRUE(m.identically_zero);
}

TEST(PairMinor, LineClosedForm) {
  // On y = x + 1 with T = x - x0: log x = log(x0 + T), log y = log(y0 + T).
  auto ctx = make_context(5, 6);
  PadicRing R{ctx};
  auto c = make_curve(P({{0, 1, 1}, {1, 0, -1}, {0, 0, -1}}), 0, 3, ctx);
  auto z1 = make_disc_point(c, Rat(1), Rat(2));
  auto z2 = make_disc_point(c, Rat(2), Rat(3));
  const long order = 4;
  auto logser = [&](long a) {
    std::vector<PadicScalar> v{log_unit(R.from_int(a))};
    for (long m = 1; m <= order; ++m) v.push_back(R.from_rational(Rat(m % 2 ? 1 : -1) / (Rat(m) * Rat(ipow(a, m)))));
    return v;
  };
  auto xi1 = logser(1), yj1 = logser(2), xi2 = logser(2), yj2 = logser(3);
  auto fi = F({{1, 0, 1}}), fj = F({{0, 1, 1}});
  auto m = pair_minor_series(c, fi, fj, z1, z2, order);
  EXPECT_FALSE(m.identically_zero);
  for (long a = 0; a <= order; ++a)
    for (long b = 0; b <= order; ++b)
      EXPECT_TRUE(m.coeffs[a][b].equals(xi1[a] * yj2[b] - yj1[a] * xi2[b])) << a << "," << b;
  auto swapped = pair_minor_series(c, fj, fi, z1, z2, order);
  for (long a = 0; a <= order; ++a)
    for (long b = 0; b <= order; ++b) EXPECT_TRUE(swapped.coeffs[a][b].equals(-m.coeffs[a][b]));
}

TEST(ColemanProperty, DerivativeIdentityAndHomomorphism) {
  std::mt19937_64 rng(99);
  const long primes[] = {5, 7, 11, 13};
  int done = 0;
  for (int trial = 0; trial < 200 && done < 50; ++trial) {
    long p = primes[trial % 4];
    auto ctx = make_context(p, 6);
    PadicRing R{ctx};
    long a = static_cast<long>(rng() % 5) - 2, b = static_cast<long>(rng() % 5) - 2;
    long x0 = static_cast<long>(rng() % 11) - 5, y0 = static_cast<long>(rng() % 11) - 5;
    // Conic y^2 + a x y + b x^2 = const through (x0, y0), or a cubic.
    bool cubic = rng() % 2;
    long cst = y0 * y0 + a * x0 * y0 + b * x0 * x0 + (cubic ? -x0 * x0 * x0 : 0);
    auto h = cubic ? P({{0, 2, 1}, {1, 1, a}, {2, 0, b}, {3, 0, -1}, {0, 0, -cst}})
                   : P({{0, 2, 1}, {1, 1, a}, {2, 0, b}, {0, 0, -cst}});
    PlaneCurve c;
    DiscPoint z0;
    try {
      c = make_curve(h, cubic ? 1 : 0, 2, ctx);
      z0 = make_disc_point(c, Rat(x0), Rat(y0));
    } catch (const Error&) {
      continue;
    }
    RationalFunction f{P({{1, 0, 1}, {0, 0, static_cast<long>(rng() % 7) + 1}}), P({{0, 1, 1}, {0, 0, p + 2}})};
    RationalFunction g = F({{1, 1, 1}, {0, 0, static_cast<long>(rng() % 5) + 1}});
    const long M = 10;
    Series<PadicRing> Lf, Lg, Lfg;
    try {
      Lf = log_f_disc_series(c, f, z0, M);
      Lg = log_f_disc_series(c, g, z0, M);
      Lfg = log_f_disc_series(c, f * g, z0, M);
    } catch (const Error&) {
      continue;
    }
    EXPECT_TRUE(series_equal(Lfg, add(Lf, Lg)));
    // d/dT log f = A / (num den h_y) * dx/dT along the branch.
    auto br = disc_branch(c, z0, M);
    auto toR = [&](const ZPoly2& q) { return bipoly::map_coeffs(q, R, [&](const Int& x) { return R.from_int(x); }); };
    auto A = eval_at_series(toR(dlog_numerator(c, f)), br.x, br.y);
    // On the y-chart dx/h_y = -dy/h_x.
    const bool xchart = z0.axis == Axis::X;
    auto D = eval_at_series(toR(bipoly::mul(bipoly::mul(f.num, f.den), xchart ? bipoly::dy(h) : bipoly::dx(h))), br.x, br.y);
    auto rhs = divide(A, D, M - 1);
    if (!xchart) rhs = neg(rhs);
    auto lhs = derivative(Lf);
    for (long i = 0; i < M; ++i) EXPECT_TRUE(lhs.coeff(i).equals(rhs.coeff(i))) << trial << ":" << i;
    ++done;
  }
  EXPECT_EQ(done, 50);
}
