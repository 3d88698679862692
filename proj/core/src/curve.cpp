#include "tori/curve.hpp"

namespace tori {

namespace {

Poly2<PadicRing> to_padic(const ZPoly2& a, const PadicContext& ctx) {
  PadicRing R{ctx};
  return bipoly::map_coeffs(a, R, [&](const Int& c) { return R.from_int(c); });
}

Poly2<GaloisField> to_field(const ZPoly2& a, const GaloisField& F) {
  return bipoly::map_coeffs(a, F, [&](const Int& c) { return F.from_int(c); });
}

bool monic_in_y(const ZPoly2& h) {
  if (h.is_zero()) return false;
  const auto& lc = h.rows.back();
  return lc.size() == 1 && (lc[0] == 1 || lc[0] == -1);
}

}  // namespace

PlaneCurve make_curve(ZPoly2 h, long genus, long boundary_degree, PadicContext ctx) {
  bool nonzero = false;
  for (const auto& [ex, ey, c] : h.terms())
    if (!mpz_divisible_p(c.get_mpz_t(), ctx.p().get_mpz_t())) nonzero = true;
  if (!nonzero) throw Error(Errc::InvalidInput, "curve equation vanishes mod p");
  return PlaneCurve{std::move(h), genus, boundary_degree, std::move(ctx)};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {bipoly::mul(a.num, b.num), bipoly::mul(a.den, b.den)};
}

DiscPoint make_disc_point(const PlaneCurve& c, const PadicScalar& x0, const PadicScalar& y0, std::optional<Axis> axis) {
  auto H = to_padic(c.h, c.ctx);
  auto v = bipoly::eval(H, x0, y0);
  if (!v.is_zero()) throw Error(Errc::PointNotOnCurve, "h(x0, y0) = " + v.str());
  if (x0.valuation() < 0 || y0.valuation() < 0) throw Error(Errc::PointNotOnCurve, "point is not integral at p");
  auto hx = bipoly::eval(bipoly::dx(H), x0, y0);
  auto hy = bipoly::eval(bipoly::dy(H), x0, y0);
  const bool hx_unit = hx.is_unit(), hy_unit = hy.is_unit();
  if (!hx_unit && !hy_unit) throw Error(Errc::SingularPoint, "both partial derivatives vanish mod p");
  Axis chosen = hy_unit ? Axis::X : Axis::Y;
  if (axis) {
    if ((*axis == Axis::X && !hy_unit) || (*axis == Axis::Y && !hx_unit))
      throw Error(Errc::SingularPoint, "requested parameter axis is not a local parameter here");
    chosen = *axis;
  }
  return DiscPoint{x0, y0, chosen};
}

DiscPoint make_disc_point(const PlaneCurve& c, const Rat& x0, const Rat& y0, std::optional<Axis> axis) {
  return make_disc_point(c, PadicScalar::from_rational(c.ctx, x0), PadicScalar::from_rational(c.ctx, y0), axis);
}

DiscPoint lift_point(const PlaneCurve& c, const PadicScalar& x0, const PadicScalar& y_approx) {
  auto H = to_padic(c.h, c.ctx);
  auto hy = bipoly::dy(H);
  auto hx = bipoly::dx(H);
  const bool use_y = bipoly::eval(hy, x0, y_approx).is_unit();
  PadicScalar a = x0, b = y_approx;
  for (long prec = 1; prec < 2 * c.ctx.precision() + 2; prec *= 2) {
    if (use_y) b = b - bipoly::eval(H, a, b) / bipoly::eval(hy, a, b);
    else a = a - bipoly::eval(H, a, b) / bipoly::eval(hx, a, b);
  }
  return make_disc_point(c, a, b);
}

Branch disc_branch(const PlaneCurve& c, const DiscPoint& z0, long order) {
  if (order < 0) throw Error(Errc::InvalidInput, "negative series order");
  PadicRing R{c.ctx};
  auto H = to_padic(c.h, c.ctx);
  if (!bipoly::eval(H, z0.x0, z0.y0).is_zero()) throw Error(Errc::PointNotOnCurve, "disc centre is not on the curve");
  if (z0.axis == Axis::X) {
    if (!bipoly::eval(bipoly::dy(H), z0.x0, z0.y0).is_unit())
      throw Error(Errc::SingularPoint, "h_y is not a unit at the disc centre");
    auto y = branch_series(H, z0.x0, z0.y0, order);
    return {Series<PadicRing>::linear(R, z0.x0).truncate(order), y};
  }
  if (!bipoly::eval(bipoly::dx(H), z0.x0, z0.y0).is_unit())
    throw Error(Errc::SingularPoint, "h_x is not a unit at the disc centre");
  auto x = branch_series(bipoly::swap_xy(H), z0.y0, z0.x0, order);
  return {x, Series<PadicRing>::linear(R, z0.y0).truncate(order)};
}

Series<PadicRing> hensel_branch(const PlaneCurve& c, const DiscPoint& z0, long order) {
  auto b = disc_branch(c, z0, order);
  return z0.axis == Axis::X ? b.y : b.x;
}

Series<PadicRing> eval_function_series(const PlaneCurve& c, const RationalFunction& f, const DiscPoint& z0, long order) {
  auto b = disc_branch(c, z0, order);
  auto num = eval_at_series(to_padic(f.num, c.ctx), b.x, b.y);
  auto den = eval_at_series(to_padic(f.den, c.ctx), b.x, b.y);
  if (!den.constant_term().is_unit()) throw Error(Errc::PoleOnDisc, "denominator is not a unit at the disc centre");
  return divide(num, den, order);
}

ZPoly2 dlog_numerator(const ZPoly2& h, const RationalFunction& f) {
  using bipoly::dx;
  using bipoly::dy;
  using bipoly::mul;
  using bipoly::sub;
  if (f.num.is_zero()) throw Error(Errc::ZeroFunction, "function is identically zero");
  if (f.den.is_zero()) throw Error(Errc::DivisionByZero, "function has zero denominator");
  if (h.deg_y() > 0 && bipoly::prem_y(f.num, h).is_zero())
    throw Error(Errc::ZeroFunction, "function vanishes on the curve");
  ZPoly2 fx = sub(mul(dx(f.num), f.den), mul(f.num, dx(f.den)));
  ZPoly2 fy = sub(mul(dy(f.num), f.den), mul(f.num, dy(f.den)));
  ZPoly2 A = sub(mul(fx, dy(h)), mul(fy, dx(h)));
  if (monic_in_y(h) && h.deg_y() > 0) A = bipoly::prem_y(A, h);
  return A;
}

ZPoly2 dlog_numerator(const PlaneCurve& c, const RationalFunction& f) { return dlog_numerator(c.h, f); }

long ord_at(const ZPoly2& h, const ZPoly2& A, const GaloisField& F, GaloisField::Elem xb, GaloisField::Elem yb) {
  auto H = to_field(h, F);
  if (bipoly::eval(H, xb, yb) != 0) throw Error(Errc::PointNotOnCurve, "point is not on the reduced curve");
  const bool hy_ok = bipoly::eval(bipoly::dy(H), xb, yb) != 0;
  const bool hx_ok = bipoly::eval(bipoly::dx(H), xb, yb) != 0;
  if (!hy_ok && !hx_ok) throw Error(Errc::SingularPoint, "singular point of the reduced curve");
  const long L = std::max<long>(A.total_degree(), 1) * std::max<long>(h.total_degree(), 1) + 1;
  auto AF = to_field(A, F);
  Series<GaloisField> X, Y;
  if (hy_ok) {
    X = Series<GaloisField>::linear(F, xb).truncate(L);
    Y = branch_series(H, xb, yb, L);
  } else {
    Y = Series<GaloisField>::linear(F, yb).truncate(L);
    X = branch_series(bipoly::swap_xy(H), yb, xb, L);
  }
  auto s = eval_at_series(AF, X, Y);
  for (long i = 0; i <= L; ++i)
    if (s.coeff(i) != 0) return i;
  throw Error(Errc::ZeroFunction, "numerator vanishes along the whole branch");
}

long ord_at(const ZPoly2& h, const RationalFunction& f, const GaloisField& F, GaloisField::Elem xb, GaloisField::Elem yb) {
  auto N = to_field(f.num, F), D = to_field(f.den, F);
  if (bipoly::eval(N, xb, yb) == 0 || bipoly::eval(D, xb, yb) == 0)
    throw Error(Errc::PoleOnDisc, "function has a zero or pole at the point");
  return ord_at(h, dlog_numerator(h, f), F, xb, yb);
}

}  // namespace tori
