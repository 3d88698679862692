#include "tori/frobenius_lift.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tori/arith/ff_factor.hpp"

namespace tori {

namespace {

using FqX = upoly::Vec<GaloisField>;
using Elem = GaloisField::Elem;

FqX content_y(const FqPoly2& h) {
  FqX c;
  for (const auto& r : h.rows) c = upoly::gcd(h.ring, c, r);
  return c;
}

FqPoly2 divide_rows(const FqPoly2& h, const FqX& c) {
  FqPoly2 out(h.ring);
  for (const auto& r : h.rows) out.rows.push_back(upoly::divexact(h.ring, r, c));
  out.normalize();
  return out;
}

bool rows_divisible(const FqPoly2& g, const FqX& c) {
  for (const auto& r : g.rows)
    if (!upoly::rem(g.ring, r, c).empty()) return false;
  return true;
}

// h | g for h with positive y-degree.
bool divides_y(const FqPoly2& g, const FqPoly2& h) {
  FqX c = content_y(h);
  if (upoly::degree(c) > 0) {
    if (!rows_divisible(g, c)) return false;
    return bipoly::prem_y(g, divide_rows(h, c)).is_zero();
  }
  return bipoly::prem_y(g, h).is_zero();
}

bool zero_mod_h(const FqPoly2& g, const FqPoly2& h) {
  if (g.is_zero()) return true;
  if (h.is_constant()) return true;
  if (h.y_free()) return divides_y(bipoly::swap_xy(g), bipoly::swap_xy(h));
  return divides_y(g, h);
}

// Solves A v = b over F, free unknowns set to zero.
std::optional<std::vector<Elem>> solve_linear(const GaloisField& F, std::vector<std::vector<Elem>> A,
                                              std::vector<Elem> b, std::size_t unknowns) {
  const std::size_t rows = A.size();
  std::vector<long> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < unknowns && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && A[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[r]);
    std::swap(b[piv], b[r]);
    Elem inv = F.inv(A[r][col]);
    for (auto& v : A[r]) v = F.mul(v, inv);
    b[r] = F.mul(b[r], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][col] == 0) continue;
      Elem f = A[i][col];
      for (std::size_t j = 0; j < unknowns; ++j) A[i][j] = F.sub(A[i][j], F.mul(f, A[r][j]));
      b[i] = F.sub(b[i], F.mul(f, b[r]));
    }
    pivot_col.push_back(static_cast<long>(col));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Elem> v(unknowns, 0);
  for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = b[i];
  return v;
}

FqPoly2 frobenius_twist(const FqPoly2& a) {
  const auto& F = a.ring;
  return bipoly::inflate(bipoly::map_coeffs(a, F, [&](Elem c) { return F.frobenius(c); }),
                         static_cast<long>(F.characteristic()));
}

FqPoly2 monomial(const GaloisField& F, long ex, long ey) { return FqPoly2::from_terms(F, {{ex, ey, F.one()}}); }

FqX to_field_poly(const GaloisField& F, const FqX& a) {
  // Prime-field encodings coincide in every extension.
  FqX out(a.begin(), a.end());
  upoly::trim(F, out);
  return out;
}

std::vector<std::uint64_t> as_digits(const FqX& a) { return std::vector<std::uint64_t>(a.begin(), a.end()); }

std::optional<std::vector<std::uint64_t>> express_in_root(const GaloisField& Fm, const GaloisField& Fp, Elem a, Elem b,
                                                          std::size_t d) {
  const unsigned m = Fm.degree();
  std::vector<std::vector<Elem>> A(m, std::vector<Elem>(d, 0));
  Elem pw = Fm.one();
  for (std::size_t i = 0; i < d; ++i) {
    auto dg = Fm.digits(pw);
    for (unsigned r = 0; r < m; ++r) A[r][i] = r < dg.size() ? dg[r] : 0;
    pw = Fm.mul(pw, a);
  }
  auto bd = Fm.digits(b);
  std::vector<Elem> rhs(m, 0);
  for (unsigned r = 0; r < m && r < bd.size(); ++r) rhs[r] = bd[r];
  auto sol = solve_linear(Fp, A, rhs, d);
  if (!sol) return std::nullopt;
  std::vector<std::uint64_t> out(sol->begin(), sol->end());
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

Witt2Polynomial witt2_from_integer(const ZPoly2& H, const PadicContext& ctx) {
  Witt2Ring W{ctx};
  return bipoly::map_coeffs(H, W, [&](const Int& c) { return ctx.from_int(c, 2); });
}

FqPoly2 reduce_mod_p(const Witt2Polynomial& H) {
  const auto& ctx = H.ring.ctx;
  return bipoly::map_coeffs(H, ctx.residue_field(), [&](const Residue& c) { return ctx.to_field(c); });
}

FqPoly2 reduce_mod_p(const ZPoly2& H, const GaloisField& F) {
  return bipoly::map_coeffs(H, F, [&](const Int& c) { return F.from_int(c); });
}

FqPoly2 voloch_G(const Witt2Polynomial& H) {
  const auto& W = H.ring;
  const auto& ctx = W.ctx;
  const long p = to_long(ctx.p());
  Witt2Polynomial twisted =
      bipoly::inflate(bipoly::map_coeffs(H, W, [&](const Residue& c) { return ctx.frobenius(c, 2); }), p);
  Witt2Polynomial diff = bipoly::sub(twisted, bipoly::pow(H, static_cast<unsigned long>(p)));
  const auto& F = ctx.residue_field();
  FqPoly2 G(F);
  for (const auto& [ex, ey, c] : diff.terms()) {
    Residue q(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (mod(c[i], ctx.p()) != 0) throw std::logic_error("Frobenius-lift difference not divisible by p");
      q[i] = c[i] / ctx.p();
    }
    G.add_term(ex, ey, ctx.to_field(q));
  }
  return G;
}

std::string to_string(Irreducibility s) {
  switch (s) {
    case Irreducibility::Irreducible: return "irreducible";
    case Irreducibility::Reducible: return "reducible";
    case Irreducibility::Unknown: return "unknown";
  }
  return "?";
}

Irreducibility irreducibility(const FqPoly2& h) {
  const auto& F = h.ring;
  if (h.is_constant()) return Irreducibility::Reducible;
  if (h.y_free()) return ff::is_irreducible(F, h.rows[0]) ? Irreducibility::Irreducible : Irreducibility::Reducible;
  FqPoly2 hs = bipoly::swap_xy(h);
  if (hs.y_free()) return ff::is_irreducible(F, hs.rows[0]) ? Irreducibility::Irreducible : Irreducibility::Reducible;
  if (upoly::degree(content_y(h)) > 0 || upoly::degree(content_y(hs)) > 0) return Irreducibility::Reducible;
  const std::uint64_t tries = std::min<std::uint64_t>(F.order(), 64);
  for (const FqPoly2* g : std::initializer_list<const FqPoly2*>{&h, &hs}) {
    for (std::uint64_t a = 0; a < tries; ++a) {
      if (upoly::eval(F, g->rows.back(), a) == 0) continue;
      if (ff::is_irreducible(F, bipoly::eval_x(*g, a))) return Irreducibility::Irreducible;
    }
  }
  return Irreducibility::Unknown;
}

Divisibility divides_mod_h(const FqPoly2& G, const FqPoly2& h) {
  if (h.is_zero() || h.is_constant()) throw Error(Errc::InvalidInput, "h must be nonconstant");
  Divisibility out;
  out.h_status = irreducibility(h);
  if (h.y_free()) {
    out.remainder = bipoly::swap_xy(bipoly::prem_y(bipoly::swap_xy(G), bipoly::swap_xy(h)));
  } else {
    out.remainder = bipoly::prem_y(G, h);
  }
  out.divides = zero_mod_h(G, h);
  return out;
}

bool dG_criterion(const FqPoly2& h) {
  const auto& F = h.ring;
  const long p = static_cast<long>(F.characteristic());
  FqPoly2 hx = bipoly::dx(h), hy = bipoly::dy(h);
  if (zero_mod_h(hx, h) || zero_mod_h(hy, h))
    throw Error(Errc::DegenerateDerivatives, "a partial derivative of h vanishes modulo h");
  FqPoly2 lhs = bipoly::mul(bipoly::mul(monomial(F, p - 1, 0), frobenius_twist(hx)), hy);
  FqPoly2 rhs = bipoly::mul(bipoly::mul(monomial(F, 0, p - 1), frobenius_twist(hy)), hx);
  return zero_mod_h(bipoly::sub(lhs, rhs), h);
}

std::optional<std::pair<Elem, Elem>> euler_relation_check(const FqPoly2& h) {
  const auto& F = h.ring;
  FqPoly2 X = bipoly::mul(monomial(F, 1, 0), bipoly::dx(h));
  FqPoly2 Y = bipoly::mul(monomial(F, 0, 1), bipoly::dy(h));
  std::set<std::pair<long, long>> monos;
  for (const FqPoly2* g : std::initializer_list<const FqPoly2*>{&X, &Y, &h})
    for (const auto& [ex, ey, c] : g->terms()) monos.insert({ex, ey});
  std::vector<std::vector<Elem>> A;
  std::vector<Elem> b;
  for (const auto& [ex, ey] : monos) {
    A.push_back({Y.coeff(ex, ey), h.coeff(ex, ey)});
    b.push_back(F.neg(X.coeff(ex, ey)));
  }
  auto sol = solve_linear(F, A, b, 2);
  if (!sol) return std::nullopt;
  return std::make_pair((*sol)[0], (*sol)[1]);
}

bool dlog_independent(const ZPoly2& h, const RationalFunction& f, const RationalFunction& g, const GaloisField& F) {
  FqPoly2 hF = reduce_mod_p(h, F);
  if (hF.is_constant()) throw Error(Errc::InvalidInput, "h must be nonconstant mod p");
  for (const auto* fn : {&f, &g})
    if (zero_mod_h(reduce_mod_p(fn->num, F), hF)) throw Error(Errc::ZeroFunction, "function vanishes on the curve mod p");
  ZPoly2 Af = dlog_numerator(h, f), Ag = dlog_numerator(h, g);
  FqPoly2 Pf = reduce_mod_p(bipoly::mul(Af, bipoly::mul(g.num, g.den)), F);
  FqPoly2 Pg = reduce_mod_p(bipoly::mul(Ag, bipoly::mul(f.num, f.den)), F);
  if (hF.y_free()) {
    hF = bipoly::swap_xy(hF);
    Pf = bipoly::swap_xy(Pf);
    Pg = bipoly::swap_xy(Pg);
  }
  FqX c = content_y(hF);
  if (upoly::degree(c) > 0) hF = divide_rows(hF, c);
  long ef = 0, eg = 0;
  FqPoly2 Rf = bipoly::prem_y(Pf, hF, &ef);
  FqPoly2 Rg = bipoly::prem_y(Pg, hF, &eg);
  const FqX& lc = hF.rows.back();
  for (; ef < eg; ++ef) Rf = bipoly::scale_x(Rf, lc);
  for (; eg < ef; ++eg) Rg = bipoly::scale_x(Rg, lc);
  if (Rf.is_zero() || Rg.is_zero()) return false;
  const auto [ex, ey, cf] = Rf.terms().front();
  Elem a = F.mul(Rg.coeff(ex, ey), F.inv(cf));
  return !bipoly::equal(Rg, bipoly::scale(Rf, a));
}

std::vector<long> exponent_normalize(const std::vector<Int>& n, const Int& p) {
  if (std::all_of(n.begin(), n.end(), [](const Int& v) { return v == 0; }))
    throw Error(Errc::ZeroVector, "zero exponent vector");
  std::vector<Int> v = n;
  while (std::all_of(v.begin(), v.end(), [&](const Int& a) { return mod(a, p) == 0; }))
    for (auto& a : v) a /= p;
  std::vector<long> out;
  for (const auto& a : v) out.push_back(to_long(mod(a, p)));
  const long pl = to_long(p);
  long lead = 0;
  for (long a : out)
    if (a != 0) {
      lead = a;
      break;
    }
  const long s = to_long(inverse_mod(Int(lead), p));
  for (auto& a : out) a = (a * s) % pl;
  return out;
}

std::string to_string(FinitenessKind k) {
  switch (k) {
    case FinitenessKind::Finite: return "FINITE";
    case FinitenessKind::DegenerateEuler: return "DEGENERATE_EULER";
    case FinitenessKind::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

FinitenessVerdict finiteness_verdict(const Witt2Polynomial& H) {
  FinitenessVerdict out;
  FqPoly2 h = reduce_mod_p(H);
  if (h.is_zero()) throw Error(Errc::InvalidInput, "H vanishes mod p");
  if (h.is_constant()) throw Error(Errc::InvalidInput, "H is constant mod p");
  out.G = voloch_G(H);
  out.divisibility = divides_mod_h(out.G, h);
  if (out.divisibility.h_status != Irreducibility::Irreducible)
    out.chain.push_back("warning: h is " + to_string(out.divisibility.h_status) + " over the residue field");
  if (!out.divisibility.divides) {
    out.chain.push_back("h does not divide G");
    out.kind = FinitenessKind::Finite;
    return out;
  }
  out.chain.push_back("h divides G");
  try {
    out.dG_holds = dG_criterion(h);
    out.chain.push_back(std::string("derivative identity ") + (*out.dG_holds ? "holds" : "fails") + " modulo h");
  } catch (const Error& e) {
    if (e.code() != Errc::DegenerateDerivatives) throw;
    out.derivatives_degenerate = true;
    out.chain.push_back("a partial derivative of h vanishes modulo h");
  }
  out.euler = euler_relation_check(h);
  if (out.euler) {
    const auto& F = h.ring;
    out.chain.push_back("x h_x + a y h_y + b h = 0 with a = " + F.str(out.euler->first) + ", b = " +
                        F.str(out.euler->second));
    out.kind = FinitenessKind::DegenerateEuler;
  } else {
    out.chain.push_back("no Euler-type relation");
    out.kind = FinitenessKind::Inconclusive;
  }
  return out;
}

std::vector<std::vector<long>> projective_classes(long n, long p) {
  std::vector<std::vector<long>> out;
  for (long lead = 0; lead < n; ++lead) {
    const long free = n - lead - 1;
    long count = 1;
    for (long i = 0; i < free; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      std::vector<long> v(n, 0);
      v[lead] = 1;
      long t = idx;
      for (long i = n - 1; i > lead; --i) {
        v[i] = t % p;
        t /= p;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

AnomalousReport anomalous_discs(const PlaneCurve& c, const std::vector<RationalFunction>& fs) {
  if (fs.empty()) throw Error(Errc::InvalidInput, "no functions given");
  const std::uint64_t p = to_u64(c.ctx.p());
  const GaloisField Fp = GaloisField::prime(p);
  const FqPoly2 h = reduce_mod_p(c.h, Fp);
  if (h.is_constant()) throw Error(Errc::InvalidInput, "h must be nonconstant mod p");
  const FqPoly2 hx = bipoly::dx(h), hy = bipoly::dy(h);
  const std::size_t n = fs.size();

  std::vector<FqPoly2> A, Q;
  for (const auto& f : fs) {
    if (zero_mod_h(reduce_mod_p(f.num, Fp), h)) throw Error(Errc::ZeroFunction, "function vanishes on the curve mod p");
    A.push_back(reduce_mod_p(dlog_numerator(c.h, f), Fp));
    Q.push_back(reduce_mod_p(bipoly::mul(f.num, f.den), Fp));
  }
  std::vector<FqPoly2> cof(n, FqPoly2::constant(Fp, 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) cof[i] = bipoly::mul(cof[i], Q[j]);

  std::map<unsigned, GaloisField> fields;
  auto field = [&](unsigned m) -> const GaloisField& {
    auto it = fields.find(m);
    if (it == fields.end()) it = fields.emplace(m, GaloisField::canonical(p, m)).first;
    return it->second;
  };
  auto lift = [](const FqPoly2& a, const GaloisField& F) { return bipoly::map_coeffs(a, F, [](Elem e) { return e; }); };

  AnomalousReport rep;
  std::set<std::tuple<unsigned, Elem, Elem>> seen;
  for (const auto& cls : projective_classes(static_cast<long>(n), static_cast<long>(p))) {
    AnomalousClass ac;
    ac.exponents = cls;
    FqPoly2 B(Fp);
    for (std::size_t i = 0; i < n; ++i)
      if (cls[i] != 0) B = bipoly::add(B, bipoly::scale(bipoly::mul(A[i], cof[i]), Fp.from_int(Int(cls[i]))));
    if (zero_mod_h(B, h)) {
      ac.nonradical = true;
      rep.classes.push_back(std::move(ac));
      continue;
    }
    FqX R = resultant_y(h, B);
    FqX S = resultant_y(bipoly::swap_xy(h), bipoly::swap_xy(B));
    if (R.empty() || S.empty()) {
      ac.nonradical = true;
      rep.classes.push_back(std::move(ac));
      continue;
    }
    std::vector<FqX> xs, ys;
    if (upoly::degree(R) > 0)
      for (const auto& [g, e] : ff::factor(Fp, R)) xs.push_back(g);
    if (upoly::degree(S) > 0)
      for (const auto& [g, e] : ff::factor(Fp, S)) ys.push_back(g);
    std::set<std::tuple<unsigned, Elem, Elem>> local;
    for (const auto& phi : xs) {
      for (const auto& psi : ys) {
        const unsigned d = static_cast<unsigned>(upoly::degree(phi));
        const unsigned e = static_cast<unsigned>(upoly::degree(psi));
        const unsigned m = std::lcm(d, e);
        const GaloisField& Fm = field(m);
        const auto ra = ff::roots(Fm, to_field_poly(Fm, phi));
        const auto rb = ff::roots(Fm, to_field_poly(Fm, psi));
        const FqPoly2 hm = lift(h, Fm), Bm = lift(B, Fm), hxm = lift(hx, Fm), hym = lift(hy, Fm);
        std::vector<FqPoly2> Qm;
        for (const auto& q : Q) Qm.push_back(lift(q, Fm));
        for (Elem a : ra) {
          for (Elem b : rb) {
            if (bipoly::eval(hm, a, b) != 0 || bipoly::eval(Bm, a, b) != 0) continue;
            if (bipoly::eval(hxm, a, b) == 0 && bipoly::eval(hym, a, b) == 0) continue;
            bool unit = true;
            for (const auto& q : Qm)
              if (bipoly::eval(q, a, b) == 0) unit = false;
            if (!unit) continue;
            // Orbit representative: smallest conjugate pair.
            Elem ba = a, bb = b, ca = a, cb = b;
            for (unsigned i = 1; i < m; ++i) {
              ca = Fm.frobenius(ca);
              cb = Fm.frobenius(cb);
              if (std::make_pair(ca, cb) < std::make_pair(ba, bb)) {
                ba = ca;
                bb = cb;
              }
            }
            if (!local.insert({m, ba, bb}).second) continue;
            AnomalousPoint pt;
            pt.degree = m;
            pt.x = ba;
            pt.y = bb;
            pt.x_minpoly = as_digits(phi);
            pt.y_minpoly = as_digits(psi);
            pt.x_root_index = static_cast<std::size_t>(std::find(ra.begin(), ra.end(), ba) - ra.begin());
            if (m == d) pt.y_in_x = express_in_root(Fm, Fp, ba, bb, d);
            ac.points.push_back(std::move(pt));
          }
        }
      }
    }
    for (const auto& key : local)
      if (seen.insert(key).second) rep.total += static_cast<long>(std::get<0>(key));
    rep.classes.push_back(std::move(ac));
  }
  const long classes = static_cast<long>(rep.classes.size());
  rep.bound = classes * (2 * c.genus - 2 + c.boundary_degree - 1);
  rep.divisor_bound = classes * (2 * c.genus - 2 + c.boundary_degree);
  return rep;
}

}  // namespace tori
