#ifndef TORI_CURVE_HPP
#define TORI_CURVE_HPP

#include <optional>
#include <utility>

#include "tori/arith/bipoly.hpp"
#include "tori/arith/galois_field.hpp"
#include "tori/arith/ring.hpp"
#include "tori/padic.hpp"
#include "tori/series.hpp"

namespace tori {

using ZPoly2 = Poly2<IntegerRing>;

// Affine plane model h(x, y) = 0 with user-supplied genus and boundary
// degree (the degree of the divisor of zeros and poles of the functions).
struct PlaneCurve {
  ZPoly2 h;
  long genus = 0;
  long boundary_degree = 0;
  PadicContext ctx;
};

// Throws InvalidInput when h vanishes mod p.
PlaneCurve make_curve(ZPoly2 h, long genus, long boundary_degree, PadicContext ctx);

struct RationalFunction {
  ZPoly2 num;
  ZPoly2 den = ZPoly2::constant(IntegerRing{}, Int(1));

  static RationalFunction poly(ZPoly2 p) { return {std::move(p), ZPoly2::constant(IntegerRing{}, Int(1))}; }
};

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

// Which coordinate supplies the disc parameter T.
enum class Axis { X, Y };

struct DiscPoint {
  PadicScalar x0;
  PadicScalar y0;
  Axis axis = Axis::X;
};

// Checks that (x0, y0) lies on the curve to the context precision and is
// smooth mod p; picks T = x - x0 when h_y is a unit there, else T = y - y0.
DiscPoint make_disc_point(const PlaneCurve& c, const PadicScalar& x0, const PadicScalar& y0,
                          std::optional<Axis> axis = std::nullopt);
DiscPoint make_disc_point(const PlaneCurve& c, const Rat& x0, const Rat& y0, std::optional<Axis> axis = std::nullopt);

// Keeps x0 (resp. y0 when h_y vanishes mod p) and Newton-refines the other
// coordinate from an approximation that is correct mod p.
DiscPoint lift_point(const PlaneCurve& c, const PadicScalar& x0, const PadicScalar& y_approx);

// Coordinates along the disc: x(T), y(T) with h(x(T), y(T)) = 0 to precision.
struct Branch {
  Series<PadicRing> x;
  Series<PadicRing> y;
};

// The non-parameter coordinate as a series in T (y(T) for Axis::X).
Series<PadicRing> hensel_branch(const PlaneCurve& c, const DiscPoint& z0, long order);
Branch disc_branch(const PlaneCurve& c, const DiscPoint& z0, long order);

Series<PadicRing> eval_function_series(const PlaneCurve& c, const RationalFunction& f, const DiscPoint& z0, long order);

// Numerator A of df/f = A / (num * den * h_y) dx, reduced mod h when h is
// monic in y up to sign. Throws ZeroFunction when num vanishes on the curve.
ZPoly2 dlog_numerator(const PlaneCurve& c, const RationalFunction& f);
ZPoly2 dlog_numerator(const ZPoly2& h, const RationalFunction& f);

// Order of vanishing of A along the branch of h through (xb, yb) over F.
// Throws SingularPoint at singular points and ZeroFunction when A vanishes
// on the whole branch.
long ord_at(const ZPoly2& h, const ZPoly2& A, const GaloisField& F, GaloisField::Elem xb, GaloisField::Elem yb);
// Order of df/f at the point; f must be a unit there (PoleOnDisc otherwise).
long ord_at(const ZPoly2& h, const RationalFunction& f, const GaloisField& F, GaloisField::Elem xb,
            GaloisField::Elem yb);

// Evaluates a bivariate polynomial at a pair of series.
template <class S>
Series<S> eval_at_series(const Poly2<S>& a, const Series<S>& X, const Series<S>& Y) {
  const auto& r = a.ring;
  Series<S> acc = Series<S>::polynomial(r, {r.zero()});
  for (std::size_t j = a.rows.size(); j-- > 0;) {
    Series<S> row = Series<S>::polynomial(r, {r.zero()});
    const auto& rj = a.rows[j];
    for (std::size_t i = rj.size(); i-- > 0;) row = add(mul(row, X), Series<S>::polynomial(r, {rj[i]}));
    acc = add(mul(acc, Y), row);
  }
  return acc;
}

// Solves h(x0 + T, Y(T)) = 0 for Y with Y(0) = y0 by Newton iteration in the
// series ring; h_y(x0, y0) must be invertible.
template <class S>
Series<S> branch_series(const Poly2<S>& h, const typename S::Elem& x0, const typename S::Elem& y0, long order) {
  const auto& r = h.ring;
  const Poly2<S> hy = bipoly::dy(h);
  Series<S> X = Series<S>::linear(r, x0);
  Series<S> Y(r, {y0}, 0);
  long t = 0;
  for (;;) {
    t = std::min(order, 2 * t + 1);
    Series<S> Xt = X.truncate(t);
    Series<S> Yt(r, Y.coeffs(), t);
    Series<S> val = eval_at_series(h, Xt, Yt);
    Series<S> der = eval_at_series(hy, Xt, Yt);
    Y = sub(Yt, divide(val, der, t));
    if (t == order) break;
  }
  // One more pass at full order settles the constant term's p-adic digits.
  Series<S> val = eval_at_series(h, X.truncate(order), Y);
  Series<S> der = eval_at_series(hy, X.truncate(order), Y);
  return sub(Y, divide(val, der, order));
}

}  // namespace tori

#endif  // TORI_CURVE_HPP
