#include "tori/slopes.hpp"

namespace tori {

Series<PadicRing> log_f_disc_series(const PlaneCurve& c, const RationalFunction& f, const DiscPoint& z0, long order) {
  auto F = eval_function_series(c, f, z0, order);
  if (!F.constant_term().is_unit()) throw Error(Errc::NotAUnit, "f(z0) is not a p-adic unit");
  return formal_log(F);
}

std::string to_string(SlopeVerdict v) {
  switch (v) {
    case SlopeVerdict::Match: return "match";
    case SlopeVerdict::Mismatch: return "mismatch";
    case SlopeVerdict::OutOfHypothesis: return "out_of_hypothesis";
  }
  return "unknown";
}

std::string to_string(SlopeCase c) {
  return c == SlopeCase::PositiveValuation ? "positive_valuation" : "nonpositive_valuation";
}

SlopePrediction predict_slopes(long k, const Valuation& v, const Int& p, long max_index) {
  if (k < 1) throw Error(Errc::InvalidInput, "k must be positive");
  if (Int(k) >= p) throw Error(Errc::HypothesisViolated, "k = " + std::to_string(k) + " is not below p");
  SlopePrediction out;
  out.k = k;
  out.v = v;
  out.p = p;
  if (v.infinite || v.value > 0) {
    out.case_tag = SlopeCase::PositiveValuation;
    Int idx = k;
    for (long n = 0; idx <= max_index; ++n) {
      out.vertices.push_back({to_long(idx), Rat(-n)});
      if (n > 0) {
        Int len = k * (ipow(p, n) - ipow(p, n - 1));
        out.slopes.push_back({Rat(Int(1), len), to_long(len), false});
      }
      idx *= p;
    }
    return out;
  }
  // Non-positive valuation: the clause as stated, vertices (0,0) and
  // (k p^n, -n) for n > v, first slope 1/(k p^{v+1}).
  out.case_tag = SlopeCase::NonPositiveValuation;
  const long vv = to_long(Int(v.value.get_num() / v.value.get_den()));
  out.vertices.push_back({0, Rat(0)});
  auto p_pow = [&](long e) { return e >= 0 ? Rat(ipow(p, e)) : Rat(Int(1), ipow(p, -e)); };
  Rat first = 1 / (Rat(k) * p_pow(vv + 1));
  out.slopes.push_back({first, 0, false});
  for (long n = vv + 1;; ++n) {
    Rat idx = Rat(k) * p_pow(n);
    if (idx > max_index) break;
    if (idx.get_den() == 1) out.vertices.push_back({to_long(Int(idx.get_num())), Rat(-n)});
    Rat lam = 1 / (Rat(k) * (p_pow(n + 1) - p_pow(n)));
    Rat len = Rat(k) * (p_pow(n + 1) - p_pow(n));
    if (Rat(k) * p_pow(n + 1) <= max_index)
      out.slopes.push_back({lam, len.get_den() == 1 ? to_long(Int(len.get_num())) : 0, false});
  }
  if (out.vertices.size() > 1) {
    Rat len = Rat(out.vertices[1].index - out.vertices[0].index);
    out.slopes[0].length = to_long(Int(len.get_num()));
  }
  return out;
}

SlopeReport verify_slopes(const PlaneCurve& c, const RationalFunction& f, const DiscPoint& z0, long order) {
  SlopeReport rep;
  const auto& F = c.ctx.residue_field();
  const auto xb = z0.x0.reduction(), yb = z0.y0.reduction();
  const long k = ord_at(c.h, f, F, xb, yb) + 1;
  auto L = log_f_disc_series(c, f, z0, order);
  rep.computed = newton_polygon(L);
  const auto& l0 = L.constant_term();
  Valuation v = l0.is_zero() ? Valuation::inf() : Valuation(l0.valuation());
  rep.log_value_at_precision_ceiling = l0.precision_exhausted();
  rep.predicted.k = k;
  rep.predicted.v = v;
  rep.predicted.p = c.ctx.p();
  if (Int(k) >= c.ctx.p()) {
    rep.verdict = SlopeVerdict::OutOfHypothesis;
    rep.details = "k = " + std::to_string(k) + " is not below p";
    return rep;
  }
  rep.predicted = predict_slopes(k, v, c.ctx.p(), L.trunc());
  std::vector<HullVertex> got;
  for (const auto& vx : rep.computed.vertices)
    if (rep.predicted.case_tag == SlopeCase::NonPositiveValuation || vx.index >= k) got.push_back(vx);
  if (got == rep.predicted.vertices) {
    rep.verdict = SlopeVerdict::Match;
    rep.details = std::to_string(got.size()) + " vertices agree up to index " + std::to_string(L.trunc());
  } else {
    rep.verdict = SlopeVerdict::Mismatch;
    std::string g, e;
    for (const auto& vx : got) g += " (" + std::to_string(vx.index) + "," + to_string(vx.value) + ")";
    for (const auto& vx : rep.predicted.vertices) e += " (" + std::to_string(vx.index) + "," + to_string(vx.value) + ")";
    rep.details = "computed" + g + "; predicted" + e;
  }
  return rep;
}

bool ramified_slope_flag(const NewtonPolygon& np, const Int& p) {
  const Rat threshold(Int(1), Int(p - 1));
  for (const auto& [lambda, len] : negative_slopes(np))
    if (lambda.get_den() != 1 && lambda > threshold) return true;
  return false;
}

bool ramified_slope_flag(const SlopeReport& report) { return ramified_slope_flag(report.computed, report.predicted.p); }

RamificationBound ramification_bound(long g, long d, const Int& p) {
  if (g < 0 || d < 0) throw Error(Errc::InvalidInput, "genus and boundary degree must be nonnegative");
  RamificationBound b;
  b.bound = 2 * g + d;
  b.valid = p >= b.bound;
  return b;
}

std::vector<ThetaMap> theta_maps(const std::vector<std::vector<Int>>& a) {
  if (a.empty()) throw Error(Errc::InvalidInput, "empty divisor matrix");
  const std::size_t n = a.size(), cols = a[0].size();
  for (const auto& row : a)
    if (row.size() != cols) throw Error(Errc::InvalidInput, "ragged divisor matrix");
  std::vector<ThetaMap> out;
  for (std::size_t j = 0; j < cols; ++j) {
    std::size_t l = n;
    for (std::size_t i = 0; i < n; ++i)
      if (a[i][j] != 0) {
        l = i;
        break;
      }
    if (l == n) throw Error(Errc::ZeroColumn, "column " + std::to_string(j + 1) + " of the divisor matrix is zero");
    ThetaMap m;
    m.column = static_cast<long>(j);
    m.pivot_row = static_cast<long>(l);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == l) continue;
      std::vector<Int> row(n, 0);
      row[i] += a[l][j];
      row[l] -= a[i][j];
      m.exponents.push_back(row);
    }
    out.push_back(std::move(m));
  }
  return out;
}

Int buium_bound(long g, const Int& p) {
  if (g <= 1) throw Error(Errc::HypothesisViolated, "genus must exceed 1");
  if (p % 2 == 0 || !is_prime(p)) throw Error(Errc::HypothesisViolated, "p must be an odd prime");
  Int fact = 1;
  for (long i = 2; i <= g; ++i) fact *= i;
  return ipow(p, 4 * g) * ipow(3, g) * (p * (2 * g - 2) + 6 * g) * fact;
}

PairMinor pair_minor_series(const PlaneCurve& c, const RationalFunction& fi, const RationalFunction& fj,
                            const DiscPoint& z1, const DiscPoint& z2, long order) {
  auto li1 = log_f_disc_series(c, fi, z1, order);
  auto lj1 = log_f_disc_series(c, fj, z1, order);
  auto li2 = log_f_disc_series(c, fi, z2, order);
  auto lj2 = log_f_disc_series(c, fj, z2, order);
  PairMinor out;
  out.order = order;
  out.coeffs.assign(order + 1, std::vector<PadicScalar>(order + 1));
  for (long a = 0; a <= order; ++a)
    for (long b = 0; b <= order; ++b) {
      auto m = li1.coeff(a) * lj2.coeff(b) - lj1.coeff(a) * li2.coeff(b);
      if (!m.is_zero()) out.identically_zero = false;
      out.coeffs[a][b] = m;
    }
  return out;
}

}  // namespace tori
