#ifndef TORI_FROBENIUS_LIFT_HPP
#define TORI_FROBENIUS_LIFT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tori/arith/bipoly.hpp"
#include "tori/curve.hpp"
#include "tori/padic.hpp"

namespace tori {

// Ring policy for W(F_q)/p^2, the length-two Witt vectors of the residue
// field of a context, with elements stored as residues modulo p^2.
struct Witt2Ring {
  using Elem = Residue;
  static constexpr bool is_field = false;
  PadicContext ctx;

  Elem zero() const { return ctx.zero(); }
  Elem one() const { return ctx.one(); }
  Elem from_int(const Int& n) const { return ctx.from_int(n, 2); }
  Elem add(const Elem& a, const Elem& b) const { return ctx.add(a, b, 2); }
  Elem sub(const Elem& a, const Elem& b) const { return ctx.sub(a, b, 2); }
  Elem mul(const Elem& a, const Elem& b) const { return ctx.mul(a, b, 2); }
  Elem neg(const Elem& a) const { return ctx.neg(a, 2); }
  Elem divexact(const Elem& a, const Elem& b) const { return ctx.mul(a, ctx.inv(b, 2), 2); }
  bool is_zero(const Elem& a) const {
    for (const auto& c : a)
      if (c != 0) return false;
    return true;
  }
  bool equal(const Elem& a, const Elem& b) const { return is_zero(sub(a, b)); }
  std::string str(const Elem& a) const { return ctx.residue_str(a); }
  bool operator==(const Witt2Ring& o) const { return ctx == o.ctx; }
};

using Witt2Polynomial = Poly2<Witt2Ring>;
using FqPoly2 = Poly2<GaloisField>;

Witt2Polynomial witt2_from_integer(const ZPoly2& H, const PadicContext& ctx);
// Coefficients reduced mod p into the residue field.
FqPoly2 reduce_mod_p(const Witt2Polynomial& H);
FqPoly2 reduce_mod_p(const ZPoly2& H, const GaloisField& F);

// G = ((H^sigma)(x^p, y^p) - H(x, y)^p) / p reduced mod p.
FqPoly2 voloch_G(const Witt2Polynomial& H);

enum class Irreducibility { Irreducible, Reducible, Unknown };
std::string to_string(Irreducibility s);

// Sufficient test over F_q: h is primitive in y and some specialisation
// h(a, y) (or h(x, a)) of full degree is irreducible.
Irreducibility irreducibility(const FqPoly2& h);

struct Divisibility {
  bool divides = false;
  FqPoly2 remainder;  // pseudo-remainder of G by h in y (in x when h is y-free)
  Irreducibility h_status = Irreducibility::Unknown;
};

// Whether h divides G in F_q[x, y]. A reducible or undetermined h is
// reported through h_status rather than rejected.
Divisibility divides_mod_h(const FqPoly2& G, const FqPoly2& h);

// x^{p-1} h_x^sigma(x^p, y^p) h_y == y^{p-1} h_y^sigma(x^p, y^p) h_x modulo h.
// Throws DegenerateDerivatives when h_x or h_y vanishes modulo h.
bool dG_criterion(const FqPoly2& h);

// Constants (a, b) with x h_x + a y h_y + b h = 0, if any.
std::optional<std::pair<GaloisField::Elem, GaloisField::Elem>> euler_relation_check(const FqPoly2& h);

// No a with dlog g == a dlog f modulo (h, p): the cleared dlog numerators
// span a rank-two space modulo h. Throws ZeroFunction if f or g vanishes mod (h, p).
bool dlog_independent(const ZPoly2& h, const RationalFunction& f, const RationalFunction& g, const GaloisField& F);

// Removes common factors of p, reduces mod p and scales the first nonzero
// entry to 1. Throws ZeroVector on the zero vector.
std::vector<long> exponent_normalize(const std::vector<Int>& n, const Int& p);

enum class FinitenessKind { Finite, DegenerateEuler, Inconclusive };
std::string to_string(FinitenessKind k);

struct FinitenessVerdict {
  FinitenessKind kind = FinitenessKind::Inconclusive;
  Divisibility divisibility;
  FqPoly2 G;
  // Filled only when h divides G.
  std::optional<bool> dG_holds;
  bool derivatives_degenerate = false;
  std::optional<std::pair<GaloisField::Elem, GaloisField::Elem>> euler;
  std::vector<std::string> chain;
};

FinitenessVerdict finiteness_verdict(const Witt2Polynomial& H);

// A point of the reduced curve over F_p-bar, given by its Galois orbit.
struct AnomalousPoint {
  unsigned degree = 1;  // [F_p(x, y) : F_p]; the orbit has this many discs
  // Representative in the canonical field F_{p^degree}.
  GaloisField::Elem x = 0;
  GaloisField::Elem y = 0;
  std::vector<std::uint64_t> x_minpoly;  // over F_p, monic, low to high
  std::size_t x_root_index = 0;          // position of x among the roots of x_minpoly in F_{p^degree}
  std::vector<std::uint64_t> y_minpoly;
  // y as a polynomial over F_p in the chosen root x, when y lies in F_p(x).
  std::optional<std::vector<std::uint64_t>> y_in_x;
};

struct AnomalousClass {
  std::vector<long> exponents;
  bool nonradical = false;  // the combination vanishes identically on h
  std::vector<AnomalousPoint> points;
};

struct AnomalousReport {
  std::vector<AnomalousClass> classes;
  long total = 0;  // distinct discs over all classes
  // (p^n - 1)/(p - 1) * (2g - 2 + d - 1)
  long bound = 0;
  // (p^n - 1)/(p - 1) * (2g - 2 + d): zeros of a differential with at most d simple poles
  long divisor_bound = 0;
};

AnomalousReport anomalous_discs(const PlaneCurve& c, const std::vector<RationalFunction>& fs);

// Projective classes of F_p^n \ 0, first nonzero coordinate 1.
std::vector<std::vector<long>> projective_classes(long n, long p);

}  // namespace tori

#endif  // TORI_FROBENIUS_LIFT_HPP
