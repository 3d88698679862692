#include <gtest/gtest.h>

#include <random>

#include "tori/arith/ff_factor.hpp"
#include "tori/frobenius_lift.hpp"

using namespace tori;

namespace {

const IntegerRing ZZ;
using Terms = std::vector<std::tuple<long, long, Int>>;

ZPoly2 P(Terms terms) { return ZPoly2::from_terms(ZZ, terms); }
RationalFunction F(Terms terms) { return RationalFunction::poly(P(std::move(terms))); }

FqPoly2 Fq(const GaloisField& K, std::vector<std::tuple<long, long, long>> terms) {
  FqPoly2 out(K);
  for (const auto& [ex, ey, c] : terms) out.add_term(ex, ey, K.from_int(Int(c)));
  return out;
}

// (H(x^p, y^p) - H^p) / p mod p for integer H, by plain integer expansion.
FqPoly2 integer_oracle(const ZPoly2& H, long p, const GaloisField& K) {
  ZPoly2 pw = ZPoly2::constant(ZZ, Int(1));
  for (long i = 0; i < p; ++i) pw = bipoly::mul(pw, H);
  ZPoly2 d = bipoly::sub(bipoly::inflate(H, p), pw);
  FqPoly2 out(K);
  for (const auto& [ex, ey, c] : d.terms()) {
    EXPECT_EQ(mod(c, Int(p)), 0);
    out.add_term(ex, ey, K.from_int(c / Int(p)));
  }
  return out;
}

Witt2Polynomial W(long p, Terms t, unsigned f = 1) { return witt2_from_integer(P(std::move(t)), make_context(p, 4, f)); }

}  // namespace

TEST(VolochG, MonomialIsZero) {
  for (long p : {3, 5, 7}) EXPECT_TRUE(voloch_G(W(p, {{1, 0, 1}})).is_zero());
}

TEST(VolochG, Line) {
  auto H = W(3, {{1, 0, 1}, {0, 1, 1}, {0, 0, -1}});
  auto G = voloch_G(H);
  const auto& K = G.ring;
  // -(x^2 y + x y^2 - x^2 - y^2 + x + y - 2xy)
  auto expect = Fq(K, {{2, 1, -1}, {1, 2, -1}, {2, 0, 1}, {0, 2, 1}, {1, 0, -1}, {0, 1, -1}, {1, 1, 2}});
  EXPECT_TRUE(bipoly::equal(G, expect)) << bipoly::to_string(G);
  EXPECT_TRUE(bipoly::equal(G, integer_oracle(P({{1, 0, 1}, {0, 1, 1}, {0, 0, -1}}), 3, K)));
}

TEST(VolochG, UnivariateBinomial) {
  auto G = voloch_G(W(5, {{1, 0, 1}, {0, 0, -1}}));
  const auto& K = G.ring;
  // -(1/5)[(x-1)^5 - x^5 + 1] = -(-x^4 + 2x^3 - 2x^2 + x)
  EXPECT_TRUE(bipoly::equal(G, Fq(K, {{4, 0, 1}, {3, 0, -2}, {2, 0, 2}, {1, 0, -1}})));
}

TEST(VolochG, WittCongruenceRandom) {
  std::mt19937_64 rng(11);
  for (auto [p, f] : std::vector<std::pair<long, unsigned>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    auto ctx = make_context(p, 3, f);
    Witt2Ring R{ctx};
    const Int p2 = Int(p) * Int(p);
    for (int trial = 0; trial < 50; ++trial) {
      Witt2Polynomial H(R);
      std::uniform_int_distribution<long> deg(1, 4), coef(0, p * p - 1);
      const long d = deg(rng);
      for (long i = 0; i <= d; ++i)
        for (long j = 0; i + j <= d; ++j) {
          Residue c(f);
          for (auto& v : c) v = Int(coef(rng));
          H.add_term(i, j, c);
        }
      if (reduce_mod_p(H).is_zero()) continue;
      auto G = voloch_G(H);
      // H^p by repeated multiplication, sigma coefficientwise.
      Witt2Polynomial pw = Witt2Polynomial::constant(R, R.one());
      for (long i = 0; i < p; ++i) pw = bipoly::mul(pw, H);
      Witt2Polynomial tw(R);
      for (const auto& [ex, ey, c] : H.terms()) tw.add_term(ex * p, ey * p, ctx.frobenius(c, 2));
      Witt2Polynomial diff = bipoly::sub(tw, pw);
      Witt2Polynomial lifted(R);
      for (const auto& [ex, ey, c] : G.terms()) lifted.add_term(ex, ey, ctx.scale(ctx.from_field(c), Int(p), 2));
      EXPECT_TRUE(bipoly::equal(diff, lifted)) << "p=" << p << " f=" << f;
      (void)p2;
    }
  }
}

TEST(DividesModH, Examples) {
  auto K = GaloisField::prime(3);
  auto h = Fq(K, {{1, 0, 1}, {0, 1, 1}, {0, 0, -1}});
  auto G = bipoly::mul(h, Fq(K, {{1, 0, 1}, {0, 1, 1}}));
  auto r = divides_mod_h(G, h);
  EXPECT_TRUE(r.divides);
  EXPECT_TRUE(r.remainder.is_zero());
  EXPECT_EQ(r.h_status, Irreducibility::Irreducible);
  EXPECT_TRUE(divides_mod_h(FqPoly2(K), h).divides);

  auto V = voloch_G(W(3, {{1, 0, 1}, {0, 1, 1}, {0, 0, -1}}));
  r = divides_mod_h(V, h);
  EXPECT_FALSE(r.divides);
  // G(x, 1 - x) by direct substitution, compared with x - x^2.
  upoly::Vec<GaloisField> one_minus_x{1, K.neg(1)};
  upoly::Vec<GaloisField> sub;
  for (std::size_t j = 0; j < V.rows.size(); ++j)
    sub = upoly::add(K, sub, upoly::mul(K, V.rows[j], upoly::pow(K, one_minus_x, j)));
  ASSERT_TRUE(r.remainder.y_free());
  EXPECT_TRUE(upoly::equal(K, r.remainder.rows[0], sub));
  upoly::Vec<GaloisField> target{0, 1, K.neg(1)};
  ASSERT_EQ(upoly::degree(sub), 2);
  auto s = K.mul(sub[2], K.inv(target[2]));
  EXPECT_TRUE(upoly::equal(K, sub, upoly::scale(K, target, s)));
}

TEST(DividesModH, YFreeModulus) {
  auto K = GaloisField::prime(5);
  auto h = Fq(K, {{1, 0, 1}, {0, 0, -2}});
  EXPECT_TRUE(divides_mod_h(bipoly::mul(h, Fq(K, {{0, 3, 1}, {2, 0, 1}})), h).divides);
  EXPECT_FALSE(divides_mod_h(Fq(K, {{0, 1, 1}}), h).divides);
}

TEST(Irreducibility, Cases) {
  auto K = GaloisField::prime(5);
  EXPECT_EQ(irreducibility(Fq(K, {{1, 1, 1}})), Irreducibility::Reducible);
  EXPECT_EQ(irreducibility(Fq(K, {{1, 1, 1}, {0, 0, -1}})), Irreducibility::Irreducible);
  EXPECT_EQ(irreducibility(Fq(K, {{0, 2, 1}, {3, 0, -1}, {0, 0, -1}})), Irreducibility::Irreducible);
  EXPECT_NE(irreducibility(Fq(K, {{2, 0, 1}, {0, 2, -1}})), Irreducibility::Irreducible);
}

TEST(DGCriterion, Examples) {
  auto K = GaloisField::prime(3);
  EXPECT_FALSE(dG_criterion(Fq(K, {{1, 0, 1}, {0, 1, 1}, {0, 0, -1}})));
  for (long p : {3, 5, 7}) EXPECT_TRUE(dG_criterion(Fq(GaloisField::prime(p), {{1, 0, 1}, {0, 1, -1}})));
  try {
    dG_criterion(Fq(K, {{1, 0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegenerateDerivatives);
  }
}

TEST(EulerRelation, Examples) {
  auto K = GaloisField::prime(5);
  auto e = euler_relation_check(Fq(K, {{1, 1, 1}, {0, 0, -1}}));
  ASSERT_TRUE(e);
  EXPECT_EQ(e->first, K.neg(1));
  EXPECT_EQ(e->second, 0u);
  EXPECT_FALSE(euler_relation_check(Fq(K, {{1, 0, 1}, {0, 1, 1}, {0, 0, -1}})));
  e = euler_relation_check(Fq(K, {{1, 0, 1}}));
  ASSERT_TRUE(e);
  EXPECT_EQ(e->first, 0u);
  EXPECT_EQ(e->second, K.neg(1));
}

TEST(FinitenessVerdict, Line) {
  auto v = finiteness_verdict(W(3, {{1, 0, 1}, {0, 1, 1}, {0, 0, -1}}));
  EXPECT_EQ(v.kind, FinitenessKind::Finite);
  EXPECT_FALSE(v.divisibility.divides);
}

TEST(FinitenessVerdict, SubtorusTranslate) {
  for (long p : {3, 5, 7}) {
    auto ctx = make_context(p, 4);
    Witt2Ring R{ctx};
    auto c = ctx.teichmueller(ctx.from_int(Int(2), 2), 2);
    auto H = Witt2Polynomial::from_terms(R, {{1, 1, R.one()}, {0, 0, ctx.neg(c, 2)}});
    auto v = finiteness_verdict(H);
    EXPECT_TRUE(v.divisibility.divides) << p;
    EXPECT_EQ(v.kind, FinitenessKind::DegenerateEuler) << p;
    ASSERT_TRUE(v.dG_holds);
    EXPECT_TRUE(*v.dG_holds);
  }
}

TEST(FinitenessVerdict, ZeroModP) {
  try {
    finiteness_verdict(W(3, {{1, 0, 3}, {0, 1, 6}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidInput);
  }
}

// Whenever h | G, the derivative identity holds.
TEST(FinitenessVerdict, ImplicationChain) {
  std::mt19937_64 rng(5);
  int antecedent = 0;
  for (long p : {3, 5, 7}) {
    auto ctx = make_context(p, 4);
    Witt2Ring R{ctx};
    std::uniform_int_distribution<long> coef(0, p * p - 1), ex(0, 3), pick(0, 2);
    for (int trial = 0; trial < 60; ++trial) {
      Witt2Polynomial H(R);
      if (pick(rng) == 0) {
        // Translates of subtori: x^a y^b - c with c a Teichmueller lift.
        long a = ex(rng) + 1, b = ex(rng);
        long u = 1 + coef(rng) % (p - 1);
        auto c = ctx.teichmueller(ctx.from_int(Int(u), 2), 2);
        H = Witt2Polynomial::from_terms(R, {{a, b, R.one()}, {0, 0, ctx.neg(c, 2)}});
      } else {
        for (int t = 0; t < 3; ++t) H.add_term(ex(rng), ex(rng), ctx.from_int(Int(coef(rng)), 2));
      }
      auto h = reduce_mod_p(H);
      if (h.is_constant()) continue;
      auto d = divides_mod_h(voloch_G(H), h);
      if (!d.divides || d.h_status != Irreducibility::Irreducible) continue;
      ++antecedent;
      try {
        EXPECT_TRUE(dG_criterion(h)) << bipoly::to_string(h);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DegenerateDerivatives);
      }
    }
  }
  EXPECT_GT(antecedent, 5);
}

TEST(DlogIndependent, Examples) {
  auto K = GaloisField::prime(5);
  auto line = P({{1, 0, 1}, {0, 1, 1}, {0, 0, -1}});
  auto x = F({{1, 0, 1}}), y = F({{0, 1, 1}});
  EXPECT_FALSE(dlog_independent(line, x, F({{2, 0, 1}}), K));
  EXPECT_TRUE(dlog_independent(line, x, y, K));
  EXPECT_FALSE(dlog_independent(line, x, x, K));
  try {
    dlog_independent(line, x, F({{1, 0, 1}, {0, 1, 1}, {0, 0, -1}}), K);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroFunction);
  }
}

TEST(DlogIndependent, PowersTimesConstantsAreDependent) {
  auto K = GaloisField::prime(7);
  auto ell = P({{0, 2, 1}, {3, 0, -1}, {1, 0, -1}, {0, 0, -1}});
  std::vector<RationalFunction> fs{F({{1, 0, 1}, {0, 0, 2}}), F({{0, 1, 1}, {1, 0, 1}}),
                                   RationalFunction{P({{1, 0, 1}}), P({{0, 1, 1}, {0, 0, 3}})}};
  for (const auto& f : fs)
    for (unsigned m : {1u, 2u, 3u, 8u})
      for (long c : {1, 3, -2}) {
        RationalFunction g{bipoly::scale(bipoly::pow(f.num, m), Int(c)), bipoly::pow(f.den, m)};
        EXPECT_FALSE(dlog_independent(ell, f, g, K)) << m << " " << c;
      }
  EXPECT_TRUE(dlog_independent(ell, fs[0], fs[1], K));
}

TEST(ExponentNormalize, Examples) {
  EXPECT_EQ(exponent_normalize({Int(6), Int(0), Int(0)}, Int(5)), (std::vector<long>{1, 0, 0}));
  EXPECT_EQ(exponent_normalize({Int(2), Int(4), Int(6)}, Int(5)), (std::vector<long>{1, 2, 3}));
  EXPECT_EQ(exponent_normalize({Int(5), Int(25), Int(0)}, Int(5)), (std::vector<long>{1, 0, 0}));
  try {
    exponent_normalize({Int(0), Int(0)}, Int(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroVector);
  }
}

TEST(ExponentNormalize, IdempotentAndProjective) {
  std::mt19937_64 rng(3);
  for (long p : {3, 5, 7, 11}) {
    std::uniform_int_distribution<long> d(-50, 50), s(1, p - 1);
    for (int t = 0; t < 100; ++t) {
      std::vector<Int> v{Int(d(rng)), Int(d(rng)), Int(d(rng))};
      if (std::all_of(v.begin(), v.end(), [](const Int& a) { return a == 0; })) continue;
      auto n = exponent_normalize(v, Int(p));
      std::vector<Int> nz(n.begin(), n.end());
      EXPECT_EQ(exponent_normalize(nz, Int(p)), n);
      const long k = s(rng);
      std::vector<Int> scaled;
      for (const auto& a : v) scaled.push_back(a * k * p);
      EXPECT_EQ(exponent_normalize(scaled, Int(p)), n);
    }
  }
}

namespace {

// Number of points over F_{p^m} where the combination of dlogs vanishes,
// evaluated from the partial derivatives at each point.
long brute_force(const PlaneCurve& c, const std::vector<RationalFunction>& fs, const std::vector<long>& n,
                 const GaloisField& K) {
  auto h = reduce_mod_p(c.h, K);
  auto hx = bipoly::dx(h), hy = bipoly::dy(h);
  long count = 0;
  for (GaloisField::Elem a = 0; a < K.order(); ++a)
    for (GaloisField::Elem b = 0; b < K.order(); ++b) {
      if (bipoly::eval(h, a, b) != 0) continue;
      auto vx = bipoly::eval(hx, a, b), vy = bipoly::eval(hy, a, b);
      if (vx == 0 && vy == 0) continue;
      GaloisField::Elem total = 0;
      bool ok = true;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        auto N = reduce_mod_p(fs[i].num, K), D = reduce_mod_p(fs[i].den, K);
        auto Nv = bipoly::eval(N, a, b), Dv = bipoly::eval(D, a, b);
        if (Nv == 0 || Dv == 0) {
          ok = false;
          break;
        }
        auto fx = K.sub(K.mul(bipoly::eval(bipoly::dx(N), a, b), Dv), K.mul(Nv, bipoly::eval(bipoly::dx(D), a, b)));
        auto fy = K.sub(K.mul(bipoly::eval(bipoly::dy(N), a, b), Dv), K.mul(Nv, bipoly::eval(bipoly::dy(D), a, b)));
        GaloisField::Elem w = vy != 0 ? K.sub(fx, K.mul(fy, K.mul(vx, K.inv(vy)))) : fy;
        w = K.mul(w, K.inv(K.mul(Nv, Dv)));
        total = K.add(total, K.mul(K.from_int(Int(n[i])), w));
      }
      if (ok && total == 0) ++count;
    }
  return count;
}

void compare_with_brute_force(const PlaneCurve& c, const std::vector<RationalFunction>& fs) {
  auto rep = anomalous_discs(c, fs);
  const auto p = to_u64(c.ctx.p());
  for (unsigned m : {1u, 2u}) {
    auto K = GaloisField::canonical(p, m);
    for (const auto& cls : rep.classes) {
      if (cls.nonradical) continue;
      long expected = 0;
      for (const auto& pt : cls.points)
        if (m % pt.degree == 0) expected += pt.degree;
      EXPECT_EQ(brute_force(c, fs, cls.exponents, K), expected)
          << bipoly::to_string(c.h) << " p=" << p << " m=" << m << " class " << cls.exponents[0] << ":"
          << cls.exponents[1];
    }
  }
}

}  // namespace

TEST(AnomalousDiscs, LineOracle) {
  auto c = make_curve(P({{1, 0, 1}, {0, 1, 1}, {0, 0, -1}}), 0, 3, make_context(5, 4));
  std::vector<RationalFunction> fs{F({{1, 0, 1}}), F({{0, 0, 1}, {1, 0, -1}})};
  auto rep = anomalous_discs(c, fs);
  EXPECT_EQ(rep.classes.size(), 6u);
  std::vector<GaloisField::Elem> xs;
  for (const auto& cls : rep.classes) {
    EXPECT_FALSE(cls.nonradical);
    EXPECT_LE(cls.points.size(), 1u);
    for (const auto& pt : cls.points) {
      EXPECT_EQ(pt.degree, 1u);
      xs.push_back(pt.x);
      EXPECT_EQ((pt.x + pt.y) % 5, 1u);
    }
  }
  std::sort(xs.begin(), xs.end());
  EXPECT_EQ(xs, (std::vector<GaloisField::Elem>{2, 3, 4}));
  EXPECT_EQ(rep.total, 3);
  EXPECT_LE(rep.total, rep.divisor_bound);
  EXPECT_EQ(rep.divisor_bound, 6);
  compare_with_brute_force(c, fs);
}

TEST(AnomalousDiscs, LiteralBoundFormula) {
  auto c = make_curve(P({{1, 0, 1}, {0, 1, 1}, {0, 0, -1}}), 0, 4, make_context(5, 4));
  auto rep = anomalous_discs(c, {F({{1, 0, 1}}), F({{0, 0, 1}, {1, 0, -1}}), F({{1, 0, 1}, {0, 0, 1}})});
  EXPECT_EQ(rep.classes.size(), 31u);
  EXPECT_EQ(rep.bound, 31);
}

TEST(AnomalousDiscs, IdenticalFunctionsAreNonradical) {
  auto c = make_curve(P({{1, 0, 1}, {0, 1, 1}, {0, 0, -1}}), 0, 3, make_context(5, 4));
  auto rep = anomalous_discs(c, {F({{1, 0, 1}}), F({{1, 0, 1}})});
  bool found = false;
  for (const auto& cls : rep.classes)
    if (cls.exponents == std::vector<long>{1, 4}) {
      EXPECT_TRUE(cls.nonradical);
      found = true;
    } else {
      EXPECT_FALSE(cls.nonradical);
    }
  EXPECT_TRUE(found);
}

TEST(AnomalousDiscs, BruteForceSmallCurves) {
  struct Case {
    Terms h;
    std::vector<RationalFunction> fs;
  };
  std::vector<Case> cases{
      {{{0, 2, 1}, {3, 0, -1}, {1, 0, -1}, {0, 0, -1}}, {F({{1, 0, 1}}), F({{0, 1, 1}, {0, 0, 1}})}},
      {{{1, 1, 1}, {0, 0, -1}}, {F({{1, 0, 1}, {0, 0, 1}}), F({{1, 0, 1}, {0, 0, -2}})}},
      {{{0, 2, 1}, {2, 0, 1}, {0, 0, -2}}, {F({{1, 0, 1}}), F({{0, 1, 1}}), F({{1, 0, 1}, {0, 1, 1}})}},
      {{{0, 3, 1}, {1, 2, 1}, {3, 0, 1}, {1, 0, 1}, {0, 0, 2}}, {F({{1, 0, 1}}), F({{0, 1, 1}, {0, 0, 1}})}},
      {{{0, 1, 1}, {2, 0, -1}, {0, 0, 1}}, {F({{1, 0, 1}}), RationalFunction{P({{0, 1, 1}}), P({{1, 0, 1}, {0, 0, 1}})}}},
  };
  int compared = 0;
  for (long p : {3, 5}) {
    for (const auto& cs : cases) {
      auto c = make_curve(P(cs.h), 1, 4, make_context(p, 4));
      if (reduce_mod_p(c.h, GaloisField::prime(p)).is_constant()) continue;
      try {
        compare_with_brute_force(c, cs.fs);
        ++compared;
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroFunction) << e.what();
      }
    }
  }
  EXPECT_GE(compared, 8);
}

TEST(AnomalousDiscs, PointRepresentation) {
  auto c = make_curve(P({{0, 2, 1}, {2, 0, 1}, {0, 0, -2}}), 0, 4, make_context(3, 4));
  auto rep = anomalous_discs(c, {F({{1, 0, 1}}), F({{0, 1, 1}})});
  for (const auto& cls : rep.classes)
    for (const auto& pt : cls.points) {
      auto K = GaloisField::canonical(3, pt.degree);
      upoly::Vec<GaloisField> mx(pt.x_minpoly.begin(), pt.x_minpoly.end());
      EXPECT_EQ(upoly::eval(K, mx, pt.x), 0u);
      EXPECT_EQ(ff::roots(K, mx).at(pt.x_root_index), pt.x);
      if (pt.y_in_x) {
        upoly::Vec<GaloisField> yy(pt.y_in_x->begin(), pt.y_in_x->end());
        EXPECT_EQ(upoly::eval(K, yy, pt.x), pt.y);
      }
      EXPECT_EQ(bipoly::eval(reduce_mod_p(c.h, K), pt.x, pt.y), 0u);
    }
}

TEST(ProjectiveClasses, Count) {
  EXPECT_EQ(projective_classes(2, 5).size(), 6u);
  EXPECT_EQ(projective_classes(3, 5).size(), 31u);
  EXPECT_EQ(projective_classes(3, 3).front(), (std::vector<long>{1, 0, 0}));
}
