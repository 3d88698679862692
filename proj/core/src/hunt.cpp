#include "tori/hunt.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tori/arith/ff_factor.hpp"
#include "tori/newton.hpp"

namespace tori {

namespace {

const IntegerRing ZZ;
const RationalField QQ;
using zx::QX;
using zx::ZX;

struct ZXLess {
  bool operator()(const ZX& a, const ZX& b) const { return zx::less(a, b); }
};

ZX power(const ZX& a, long e) { return upoly::pow(ZZ, a, static_cast<unsigned long>(e)); }

// Numerator and denominator of prod f_i^{n_i}, coprime.
std::pair<ZX, ZX> monomial_value(const std::vector<RationalMap>& fs, const std::vector<long>& n) {
  ZX P{Int(1)}, Q{Int(1)};
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (n[i] > 0) {
      P = upoly::mul(ZZ, P, power(fs[i].num, n[i]));
      Q = upoly::mul(ZZ, Q, power(fs[i].den, n[i]));
    } else if (n[i] < 0) {
      P = upoly::mul(ZZ, P, power(fs[i].den, -n[i]));
      Q = upoly::mul(ZZ, Q, power(fs[i].num, -n[i]));
    }
  }
  ZX g = zx::gcd(P, Q);
  if (upoly::degree(g) > 0) {
    P = *zx::divide(P, g);
    Q = *zx::divide(Q, g);
  }
  return {P, Q};
}

// Q^phi * Phi_m(P / Q).
ZX cyclotomic_norm(const ZX& P, const ZX& Q, unsigned long m) {
  const ZX phi = zx::cyclotomic(m);
  const long d = upoly::degree(phi);
  ZX acc{phi[d]};
  ZX qpow{Int(1)};
  for (long k = d - 1; k >= 0; --k) {
    qpow = upoly::mul(ZZ, qpow, Q);
    acc = upoly::add(ZZ, upoly::mul(ZZ, acc, P), upoly::scale(ZZ, qpow, phi[k]));
  }
  return acc;
}

long height(const std::vector<long>& v) {
  long h = 0;
  for (long a : v) h = std::max(h, std::abs(a));
  return h;
}

long l1(const std::vector<long>& v) {
  long s = 0;
  for (long a : v) s += std::abs(a);
  return s;
}

std::optional<std::array<long, 3>> nonzero_minor(const std::vector<long>& a, const std::vector<long>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      long v = a[i] * b[j] - a[j] * b[i];
      if (v != 0) return std::array<long, 3>{static_cast<long>(i), static_cast<long>(j), v};
    }
  return std::nullopt;
}

QX inverse_mod_poly(const QX& a, const QX& m) {
  auto [g, s, t] = upoly::ext_gcd(QQ, a, m);
  if (upoly::degree(g) != 0) throw Error(Errc::PoleOnDisc, "function has a zero or pole at the point");
  return s;
}

ff::Poly reduce(const GaloisField& F, const ZX& f) {
  ff::Poly out;
  for (const auto& c : f) out.push_back(F.from_int(c));
  upoly::trim(F, out);
  return out;
}

PadicScalar eval_padic(const PadicContext& ctx, const ZX& f, const PadicScalar& x) {
  PadicScalar acc = PadicScalar::exact_zero(ctx);
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + PadicScalar::from_int(ctx, f[i]);
  return acc;
}

// Context whose defining polynomial is the residue factor, and the root of
// that factor as an element.
std::pair<PadicContext, PadicScalar> residue_disc(const Int& p, long N, const ff::Poly& phi) {
  const unsigned f = static_cast<unsigned>(upoly::degree(phi));
  std::vector<Int> modulus;
  for (auto c : phi) modulus.push_back(Int(static_cast<unsigned long>(c)));
  PadicContext ctx = make_context(p, N, f, modulus);
  Residue r(f, 0);
  if (f == 1) r[0] = mod(-modulus[0], p);
  else r[1] = 1;
  return {ctx, PadicScalar::from_residue(ctx, r, N)};
}

// Iwasawa branch: log(p^v u) = log(u).
PadicScalar iwasawa_log(const PadicScalar& x) {
  if (x.is_zero()) throw Error(Errc::NonUnitValue, "function value vanishes to the working precision");
  PadicScalar u = PadicScalar::from_residue(x.context(), x.unit(), x.relative_precision());
  return log_unit(u);
}

Int isqrt_half(const Int& m) {
  Int h = m / 2, r;
  mpz_sqrt(r.get_mpz_t(), h.get_mpz_t());
  return r;
}

}  // namespace

RationalMap make_rational_map(ZX num, ZX den) {
  upoly::trim(ZZ, num);
  upoly::trim(ZZ, den);
  if (den.empty()) throw Error(Errc::InvalidInput, "zero denominator");
  if (num.empty()) throw Error(Errc::InvalidInput, "zero function");
  ZX g = zx::gcd(num, den);
  if (upoly::degree(g) > 0) {
    num = *zx::divide(num, g);
    den = *zx::divide(den, g);
  }
  Int c = tori::gcd(zx::content(num), zx::content(den));
  if (den.back() < 0) c = -c;
  for (auto& v : num) v /= c;
  for (auto& v : den) v /= c;
  return {num, den};
}

void check_independent(const std::vector<RationalMap>& fs) {
  std::vector<ZX> primes;
  std::vector<std::map<std::size_t, long>> val(fs.size());
  auto index_of = [&](const ZX& g) {
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (primes[i] == g) return i;
    primes.push_back(g);
    return primes.size() - 1;
  };
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (upoly::degree(fs[i].num) <= 0 && upoly::degree(fs[i].den) <= 0)
      throw Error(Errc::InvalidInput, "function " + std::to_string(i + 1) + " is constant");
    for (const auto& [g, e] : zx::factor(fs[i].num).factors) val[i][index_of(g)] += e;
    if (upoly::degree(fs[i].den) > 0)
      for (const auto& [g, e] : zx::factor(fs[i].den).factors) val[i][index_of(g)] -= e;
  }
  // Rank of the divisor matrix over Q.
  std::vector<std::vector<Rat>> M(fs.size(), std::vector<Rat>(primes.size(), 0));
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (const auto& [j, e] : val[i]) M[i][j] = e;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < primes.size() && rank < fs.size(); ++col) {
    std::size_t piv = rank;
    while (piv < fs.size() && M[piv][col] == 0) ++piv;
    if (piv == fs.size()) continue;
    std::swap(M[piv], M[rank]);
    for (std::size_t i = rank + 1; i < fs.size(); ++i) {
      Rat f = M[i][col] / M[rank][col];
      for (std::size_t j = col; j < primes.size(); ++j) M[i][j] -= f * M[rank][j];
    }
    ++rank;
  }
  if (rank < fs.size())
    throw Error(Errc::DependentFunctions, "functions are multiplicatively dependent modulo constants");
}

bool verify_relation(const ZX& minpoly, const std::vector<RationalMap>& fs, const Relation& r) {
  const QX mu = zx::to_rational(minpoly);
  QX value = upoly::constant(QQ, Rat(1));
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (r.exponents[i] == 0) continue;
    QX v = upoly::mulmod(QQ, zx::to_rational(fs[i].num), inverse_mod_poly(zx::to_rational(fs[i].den), mu), mu);
    if (r.exponents[i] < 0) v = inverse_mod_poly(v, mu);
    value = upoly::mulmod(QQ, value, upoly::powmod(QQ, v, Int(std::abs(r.exponents[i])), mu), mu);
  }
  const ZX phi = zx::cyclotomic(r.order);
  QX acc;
  for (std::size_t k = phi.size(); k-- > 0;)
    acc = upoly::add(QQ, upoly::mulmod(QQ, acc, value, mu), upoly::constant(QQ, Rat(phi[k])));
  return upoly::rem(QQ, acc, mu).empty();
}

HuntResult relation_solve(const std::vector<RationalMap>& fs, long B, long M) {
  if (B < 1 || M < 1) throw Error(Errc::InvalidInput, "search bounds must be positive");
  check_independent(fs);
  HuntResult out;
  out.B = B;
  out.M = M;
  const std::size_t n = fs.size();
  std::map<ZX, std::vector<Relation>, ZXLess> found;

  std::vector<long> v(n, -B);
  for (;;) {
    // Primitive, first nonzero coordinate positive.
    long g = 0;
    for (long a : v) g = std::gcd(g, a);
    auto first = std::find_if(v.begin(), v.end(), [](long a) { return a != 0; });
    if (g == 1 && first != v.end() && *first > 0) {
      const long kmax = B / height(v);
      auto [P, Q] = monomial_value(fs, v);
      if (!(upoly::degree(P) <= 0 && upoly::degree(Q) <= 0)) {
        for (unsigned long m = 1; m <= static_cast<unsigned long>(M * kmax); ++m) {
          long k = 0;
          for (long j = 1; j <= kmax; ++j)
            if (static_cast<long>(m / std::gcd(m, static_cast<unsigned long>(j))) <= M) {
              k = j;
              break;
            }
          if (k == 0) continue;
          ZX N = cyclotomic_norm(P, Q, m);
          if (upoly::degree(N) <= 0) continue;
          ++out.norms_factored;
          for (const auto& [psi, e] : zx::factor(N).factors) {
            bool boundary = false;
            for (const auto& f : fs)
              if (zx::divide(f.num, psi) || (upoly::degree(f.den) > 0 && zx::divide(f.den, psi))) boundary = true;
            if (boundary) continue;
            Relation r;
            for (long a : v) r.exponents.push_back(a * k);
            r.order = m / std::gcd(m, static_cast<unsigned long>(k));
            found[psi].push_back(std::move(r));
          }
        }
      }
    }
    std::size_t i = n;
    while (i-- > 0) {
      if (v[i] < B) {
        ++v[i];
        break;
      }
      v[i] = -B;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }

  for (auto& [psi, rels] : found) {
    std::sort(rels.begin(), rels.end(), [](const Relation& a, const Relation& b) {
      if (l1(a.exponents) != l1(b.exponents)) return l1(a.exponents) < l1(b.exponents);
      if (a.order != b.order) return a.order < b.order;
      return a.exponents > b.exponents;
    });
    std::optional<std::size_t> partner;
    std::array<long, 3> minor{};
    for (std::size_t j = 1; j < rels.size(); ++j)
      if (auto mn = nonzero_minor(rels[0].exponents, rels[j].exponents)) {
        partner = j;
        minor = *mn;
        break;
      }
    if (!partner) continue;
    UnlikelyCertificate c;
    c.minpoly = psi;
    c.conjugates = static_cast<std::size_t>(upoly::degree(psi));
    c.first = rels[0];
    c.second = rels[*partner];
    c.minor = minor;
    c.relations = rels;
    c.verified = verify_relation(psi, fs, c.first) && verify_relation(psi, fs, c.second);
    for (std::size_t r = 0; r < c.conjugates; ++r) {
      c.root_index = r;
      out.certificates.push_back(c);
    }
  }
  std::stable_sort(out.certificates.begin(), out.certificates.end(),
                   [](const UnlikelyCertificate& a, const UnlikelyCertificate& b) {
                     return a.minpoly.size() < b.minpoly.size();
                   });
  out.bounds_too_small = out.certificates.empty();
  return out;
}

namespace {

FilterResult rank_filter(const ZX& minpoly, std::size_t root_index, const std::vector<RationalMap>& fs, const Int& p,
                         long N, long height_bound, const std::vector<Int>& candidate) {
  if (N < 1) throw Error(Errc::InvalidInput, "precision must be positive");
  const long d = upoly::degree(minpoly);
  if (d < 1 || root_index >= static_cast<std::size_t>(d)) throw Error(Errc::InvalidInput, "bad root label");
  const GaloisField Fp = GaloisField::prime(to_u64(p));
  const ff::Poly mp = reduce(Fp, minpoly);
  if (upoly::degree(mp) != d) throw Error(Errc::BadReduction, "leading coefficient divisible by p");
  auto factors = ff::factor(Fp, mp);
  for (const auto& [phi, e] : factors)
    if (e > 1) throw Error(Errc::BadReduction, "minimal polynomial is not square-free mod p");

  // Locate the residue factor and Frobenius power for this label.
  std::size_t label = root_index;
  const ff::Poly* phi = nullptr;
  for (const auto& [g, e] : factors) {
    const auto fdeg = static_cast<std::size_t>(upoly::degree(g));
    if (label < fdeg) {
      phi = &g;
      break;
    }
    label -= fdeg;
  }
  auto [ctx, root] = residue_disc(p, N, *phi);
  const ZX dpsi = upoly::derivative(ZZ, minpoly);
  for (int it = 0; it < 64; ++it) {
    PadicScalar val = eval_padic(ctx, minpoly, root);
    if (val.is_zero() && val.absolute_precision() >= N) break;
    root = root - val / eval_padic(ctx, dpsi, root);
  }
  for (std::size_t i = 0; i < label; ++i) root = frobenius(root);

  FilterResult out;
  out.height_bound = height_bound;
  out.precision = N;
  for (const auto& f : fs) {
    PadicScalar num = eval_padic(ctx, f.num, root), den = eval_padic(ctx, f.den, root);
    if (den.is_zero()) throw Error(Errc::NonUnitValue, "pole of a function at the point");
    out.logs.push_back(iwasawa_log(num) - iwasawa_log(den));
  }

  auto proportional = [&](const std::vector<Int>& dir) {
    for (std::size_t i = 0; i < dir.size(); ++i)
      for (std::size_t j = i + 1; j < dir.size(); ++j)
        if (!(out.logs[i] * PadicScalar::from_int(ctx, dir[j]) - out.logs[j] * PadicScalar::from_int(ctx, dir[i]))
                 .is_zero())
          return false;
    return true;
  };
  if (!candidate.empty()) {
    out.direction = candidate;
    out.pass = proportional(candidate);
    out.reason = out.pass ? "log vector lies on the certified direction"
                          : "log vector is not proportional to the certified direction";
    return out;
  }

  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < out.logs.size(); ++i)
    if (!out.logs[i].is_zero() && (!pivot || out.logs[i].valuation() < out.logs[*pivot].valuation())) pivot = i;
  if (!pivot) throw Error(Errc::PrecisionExhausted, "every logarithm vanishes to the working precision");

  const Int H(height_bound);
  std::vector<Rat> ratios(out.logs.size(), Rat(0));
  Int weakest = -1;  // smallest reconstruction bound used
  for (std::size_t i = 0; i < out.logs.size(); ++i) {
    if (i == *pivot) {
      ratios[i] = 1;
      continue;
    }
    PadicScalar r = out.logs[i] / out.logs[*pivot];
    const long abs = r.absolute_precision();
    if (abs <= 0) throw Error(Errc::PrecisionExhausted, "ratio of logarithms has no significant digits");
    Int a = 0;
    if (!r.is_zero()) {
      const Int pr = ipow(p, static_cast<unsigned long>(r.relative_precision()));
      for (std::size_t c = 1; c < r.unit().size(); ++c)
        if (mod(r.unit()[c], pr) != 0) {
          out.reason = "log ratio " + std::to_string(i + 1) + "/" + std::to_string(*pivot + 1) + " is not in Q_p";
          return out;
        }
      a = ipow(p, static_cast<unsigned long>(r.valuation())) * r.unit()[0];
    }
    const Int m = ipow(p, static_cast<unsigned long>(abs));
    const Int R = isqrt_half(m);
    if (weakest < 0 || R < weakest) weakest = R;
    auto q = zx::rational_reconstruction(a, m, R);
    if (!q) {
      if (R < H) throw Error(Errc::PrecisionExhausted, "precision too low to reconstruct the log direction");
      out.reason = "no rational log ratio of height at most " + R.get_str();
      return out;
    }
    ratios[i] = *q;
  }
  Int den = 1;
  for (const auto& r : ratios) den = lcm(den, r.get_den());
  std::vector<Int> dir;
  Int g = 0;
  for (const auto& r : ratios) {
    dir.push_back(Int(r * den));
    g = tori::gcd(g, dir.back());
  }
  Int hmax = 0;
  for (auto& v : dir) {
    v /= g;
    if (abs(v) > hmax) hmax = abs(v);
  }
  out.direction = dir;
  if (hmax > H) {
    if (weakest < H) throw Error(Errc::PrecisionExhausted, "precision too low to exclude a short log direction");
    out.reason = "log direction has height " + hmax.get_str() + " above " + H.get_str();
    return out;
  }
  if (!proportional(dir)) {
    out.reason = "log vector is not proportional to the reconstructed direction";
    return out;
  }
  out.pass = true;
  out.reason = "log vector lies on an integer line";
  return out;
}

}  // namespace

FilterResult padic_rank_filter(const ZX& minpoly, std::size_t root_index, const std::vector<RationalMap>& fs,
                               const Int& p, long N, long height_bound) {
  return rank_filter(minpoly, root_index, fs, p, N, height_bound, {});
}

FilterResult padic_rank_filter(const UnlikelyCertificate& c, const std::vector<RationalMap>& fs, const Int& p, long N) {
  const auto& a = c.first.exponents;
  const auto& b = c.second.exponents;
  if (a.size() != 3) return rank_filter(c.minpoly, c.root_index, fs, p, N, 2 * height(a) * height(b), {});
  std::vector<long> cross{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  long g = 0;
  for (long v : cross) g = std::gcd(g, v);
  if (auto it = std::find_if(cross.begin(), cross.end(), [](long v) { return v != 0; }); *it < 0) g = -g;
  std::vector<Int> dir;
  long h = 0;
  for (long v : cross) {
    dir.emplace_back(v / g);
    h = std::max(h, std::abs(v / g));
  }
  return rank_filter(c.minpoly, c.root_index, fs, p, N, h, dir);
}

RamificationClass classify_ramification(const ZX& minpoly, const Int& p, long N, long genus, long boundary_degree) {
  const GaloisField Fp = GaloisField::prime(to_u64(p));
  const ff::Poly mp = reduce(Fp, minpoly);
  if (upoly::degree(mp) != upoly::degree(minpoly))
    throw Error(Errc::BadReduction, "point is not integral at p");
  RamificationClass out;
  out.bound = 2 * genus + boundary_degree;
  for (const auto& [phi, e] : ff::factor(Fp, mp)) {
    auto [ctx, centre] = residue_disc(p, N, phi);
    PadicRing R{ctx};
    upoly::Vec<PadicRing> f;
    for (const auto& c : minpoly) f.push_back(PadicScalar::from_int(ctx, c));
    auto shifted = upoly::compose(R, f, upoly::Vec<PadicRing>{centre, R.one()});
    auto np = newton_polygon(Series<PadicRing>::polynomial(R, shifted));
    DiscSlopes ds;
    ds.residue_factor.assign(phi.begin(), phi.end());
    ds.slopes = negative_slopes(np);
    for (const auto& [lam, len] : ds.slopes) {
      Int q = lam.get_den();
      if (q > 1) out.ramified = true;
      out.degree = std::lcm(out.degree, to_long(q));
    }
    out.discs.push_back(std::move(ds));
  }
  out.within_bound = out.degree <= out.bound;
  return out;
}

ZPoly2 implicit_equation(const RationalMap& f, const RationalMap& g) {
  // Rows indexed by powers of t, each row a polynomial in x.
  ZPoly2 A(ZZ);
  for (std::size_t i = 0; i < std::max(f.num.size(), f.den.size()); ++i) {
    Int a = i < f.num.size() ? f.num[i] : Int(0);
    Int b = i < f.den.size() ? f.den[i] : Int(0);
    A.add_term(0, static_cast<long>(i), a);
    A.add_term(1, static_cast<long>(i), -b);
  }
  const long dy = std::max(upoly::degree(f.num), upoly::degree(f.den));
  std::vector<Rat> ys;
  std::vector<QX> vals;
  for (long s = 0; s <= dy; ++s) {
    ZPoly2 Bs(ZZ);
    for (std::size_t i = 0; i < std::max(g.num.size(), g.den.size()); ++i) {
      Int a = i < g.num.size() ? g.num[i] : Int(0);
      Int b = i < g.den.size() ? g.den[i] : Int(0);
      Bs.add_term(0, static_cast<long>(i), a - Int(s) * b);
    }
    ys.push_back(Rat(s));
    vals.push_back(zx::to_rational(resultant_y(A, Bs)));
  }
  // Lagrange interpolation in y, coefficientwise in x.
  Poly2<RationalField> Hq(QQ);
  for (std::size_t i = 0; i < ys.size(); ++i) {
    QX basis = upoly::constant(QQ, Rat(1));
    Rat denom = 1;
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (j == i) continue;
      basis = upoly::mul(QQ, basis, QX{-ys[j], Rat(1)});
      denom *= ys[i] - ys[j];
    }
    basis = upoly::scale(QQ, basis, 1 / denom);
    for (std::size_t ex = 0; ex < vals[i].size(); ++ex)
      for (std::size_t ey = 0; ey < basis.size(); ++ey)
        Hq.add_term(static_cast<long>(ex), static_cast<long>(ey), vals[i][ex] * basis[ey]);
  }
  Int den = 1;
  for (const auto& [ex, ey, c] : Hq.terms()) den = lcm(den, c.get_den());
  ZPoly2 H(ZZ);
  Int cont = 0;
  for (const auto& [ex, ey, c] : Hq.terms()) {
    Int v(c * den);
    H.add_term(ex, ey, v);
    cont = tori::gcd(cont, v);
  }
  if (cont > 1) H = bipoly::map_coeffs(H, ZZ, [&](const Int& c) { return Int(c / cont); });
  return H;
}

RationalFunction on_line(const RationalMap& f) {
  return RationalFunction{ZPoly2::from_x(ZZ, f.num), ZPoly2::from_x(ZZ, f.den)};
}

}  // namespace tori
