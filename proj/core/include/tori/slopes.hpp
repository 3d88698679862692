#ifndef TORI_SLOPES_HPP
#define TORI_SLOPES_HPP

#include <string>
#include <vector>

#include "tori/curve.hpp"
#include "tori/newton.hpp"

namespace tori {

// log f on the residue disc of z0, as a series in the disc parameter:
// log f(z0) + log(f(z)/f(z0)). Throws NotAUnit when f(z0) is not a unit.
Series<PadicRing> log_f_disc_series(const PlaneCurve& c, const RationalFunction& f, const DiscPoint& z0, long order);

enum class SlopeCase {
  PositiveValuation,     // log f(z0) has positive valuation (or vanishes to precision)
  NonPositiveValuation,  // log f(z0) has valuation <= 0
};

struct SlopePrediction {
  long k = 1;
  Valuation v;
  Int p;
  std::vector<HullVertex> vertices;
  std::vector<Slope> slopes;
  SlopeCase case_tag = SlopeCase::PositiveValuation;
};

// Predicted hull of log f for k = ord(df/f) + 1 < p and v = val(log f(z0)),
// listing vertices up to index max_index. Throws HypothesisViolated if k >= p.
SlopePrediction predict_slopes(long k, const Valuation& v, const Int& p, long max_index);

enum class SlopeVerdict { Match, Mismatch, OutOfHypothesis };

struct SlopeReport {
  NewtonPolygon computed;
  SlopePrediction predicted;
  SlopeVerdict verdict = SlopeVerdict::Mismatch;
  std::string details;
  // Set when log f(z0) vanished to the working precision and was treated as zero.
  bool log_value_at_precision_ceiling = false;
};

std::string to_string(SlopeVerdict v);
std::string to_string(SlopeCase c);

SlopeReport verify_slopes(const PlaneCurve& c, const RationalFunction& f, const DiscPoint& z0, long order);

// True iff the polygon has a non-integral negative slope strictly above 1/(p-1).
bool ramified_slope_flag(const NewtonPolygon& np, const Int& p);
bool ramified_slope_flag(const SlopeReport& report);

struct RamificationBound {
  long bound = 0;
  bool valid = false;  // p >= 2g + d
};

RamificationBound ramification_bound(long g, long d, const Int& p);

// One homomorphism G_m^n -> G_m^{n-1} per column j of the divisor matrix a
// (n rows, one per function). Row i of the exponent matrix is
// a[l][j] e_i - a[i][j] e_l for the first row l with a[l][j] != 0; the
// identically trivial row l is dropped.
struct ThetaMap {
  long column = 0;
  long pivot_row = 0;
  std::vector<std::vector<Int>> exponents;
};

std::vector<ThetaMap> theta_maps(const std::vector<std::vector<Int>>& a);

// p^{4g} 3^g [p(2g-2) + 6g] g! for g > 1 and odd p.
Int buium_bound(long g, const Int& p);

// M(T1, T2) = log f_i(z1) log f_j(z2) - log f_j(z1) log f_i(z2) on the product
// of two residue discs, truncated to total box [0, order]^2.
struct PairMinor {
  long order = 0;
  std::vector<std::vector<PadicScalar>> coeffs;  // coeffs[a][b] multiplies T1^a T2^b
  bool identically_zero = true;
};

PairMinor pair_minor_series(const PlaneCurve& c, const RationalFunction& fi, const RationalFunction& fj,
                            const DiscPoint& z1, const DiscPoint& z2, long order);

}  // namespace tori

#endif  // TORI_SLOPES_HPP
