#include "tori/arith/zpoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "tori/arith/ff_factor.hpp"

namespace tori::zx {

namespace {

const IntegerRing ZZ;
using upoly::degree;

ff::Poly reduce(const GaloisField& F, const ZX& f) {
  ff::Poly out;
  for (const auto& c : f) out.push_back(F.from_int(c));
  upoly::trim(F, out);
  return out;
}

ZX lift_poly(const ff::Poly& f) {
  ZX out;
  for (auto c : f) out.push_back(Int(static_cast<unsigned long>(c)));
  return out;
}

ZX mod_poly(const ZX& f, const Int& m) {
  ZX out;
  for (const auto& c : f) out.push_back(mod(c, m));
  upoly::trim(ZZ, out);
  return out;
}

// Given Fm = G * H mod p with G, H monic and coprime mod p, returns monic
// lifts with Fm = G * H mod pk.
std::pair<ZX, ZX> hensel_pair(const ZX& Fm, ZX G, ZX H, const GaloisField& Fp, const Int& pk) {
  const Int p(static_cast<unsigned long>(Fp.characteristic()));
  const ff::Poly Gp = reduce(Fp, G), Hp = reduce(Fp, H);
  auto [g, s, t] = upoly::ext_gcd(Fp, Gp, Hp);
  for (Int pj = p; pj < pk; pj *= p) {
    const Int pj1 = pj * p;
    ZX e = mod_poly(upoly::sub(ZZ, Fm, upoly::mul(ZZ, G, H)), pj1);
    ZX cz;
    for (const auto& v : e) cz.push_back(v / pj);
    ff::Poly c = reduce(Fp, cz);
    ff::Poly dG = upoly::rem(Fp, upoly::mul(Fp, t, c), Gp);
    ff::Poly dH = upoly::divexact(Fp, upoly::sub(Fp, c, upoly::mul(Fp, Hp, dG)), Gp);
    G = mod_poly(upoly::add(ZZ, G, upoly::scale(ZZ, lift_poly(dG), pj)), pj1);
    H = mod_poly(upoly::add(ZZ, H, upoly::scale(ZZ, lift_poly(dH), pj)), pj1);
  }
  return {G, H};
}

// Monic Fm (mod pk) split along the monic irreducible factors us mod p.
void hensel_tree(const ZX& Fm, const std::vector<ff::Poly>& us, const GaloisField& Fp, const Int& pk,
                 std::vector<ZX>& out) {
  if (us.size() == 1) {
    out.push_back(Fm);
    return;
  }
  const std::size_t half = us.size() / 2;
  std::vector<ff::Poly> left(us.begin(), us.begin() + half), right(us.begin() + half, us.end());
  ff::Poly Gp = upoly::constant(Fp, Fp.one()), Hp = upoly::constant(Fp, Fp.one());
  for (const auto& u : left) Gp = upoly::mul(Fp, Gp, u);
  for (const auto& u : right) Hp = upoly::mul(Fp, Hp, u);
  auto [G, H] = hensel_pair(Fm, lift_poly(Gp), lift_poly(Hp), Fp, pk);
  hensel_tree(G, left, Fp, pk, out);
  hensel_tree(H, right, Fp, pk, out);
}

Int norm2_ceil(const ZX& f) {
  Int s = 0;
  for (const auto& c : f) s += c * c;
  Int r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  return r + 1;
}

ZX symmetric(const ZX& f, const Int& m) {
  ZX out;
  for (const auto& c : f) out.push_back(symmetric_mod(c, m));
  upoly::trim(ZZ, out);
  return out;
}

std::set<long> subset_sums(const std::vector<unsigned>& degs) {
  std::set<long> s{0};
  for (unsigned d : degs) {
    std::set<long> next = s;
    for (long v : s) next.insert(v + d);
    s = std::move(next);
  }
  return s;
}

// Factors of a primitive square-free f with positive leading coefficient.
std::vector<ZX> factor_squarefree(ZX f) {
  const long n = degree(f);
  if (n <= 1) return {f};
  // Probe a handful of primes; keep the one with the fewest factors and
  // intersect the admissible factor degrees.
  std::set<long> admissible;
  bool first = true;
  std::uint64_t best_p = 0;
  std::size_t best_r = 0;
  int probed = 0;
  for (std::uint64_t p = 3; probed < 6 && p < 10000; p += 2) {
    if (!is_prime(Int(static_cast<unsigned long>(p)))) continue;
    if (mod(f.back(), Int(static_cast<unsigned long>(p))) == 0) continue;
    GaloisField Fp = GaloisField::prime(p);
    ff::Poly fp = reduce(Fp, f);
    if (degree(upoly::gcd(Fp, fp, upoly::derivative(Fp, fp))) > 0) continue;
    ++probed;
    auto degs = ff::factor_degrees(Fp, upoly::monic(Fp, fp));
    auto sums = subset_sums(degs);
    if (first) {
      admissible = sums;
      first = false;
    } else {
      std::set<long> keep;
      for (long v : admissible)
        if (sums.count(v)) keep.insert(v);
      admissible = std::move(keep);
    }
    if (best_p == 0 || degs.size() < best_r) {
      best_p = p;
      best_r = degs.size();
    }
    if (admissible.size() == 2) return {f};
  }
  if (best_p == 0) throw Error(Errc::InvalidInput, "no good prime found for factorisation");

  const GaloisField Fp = GaloisField::prime(best_p);
  const Int p(static_cast<unsigned long>(best_p));
  std::vector<ff::Poly> us;
  for (const auto& [u, e] : ff::factor(Fp, reduce(Fp, f))) us.push_back(u);
  if (us.size() == 1) return {f};

  const Int lc = f.back();
  const Int bound = 2 * lc * (Int(1) << n) * norm2_ceil(f);
  Int pk = p;
  while (pk <= bound) pk *= p;
  ZX Fm = mod_poly(upoly::scale(ZZ, f, inverse_mod(lc, pk)), pk);
  std::vector<ZX> lifted;
  hensel_tree(Fm, us, Fp, pk, lifted);

  std::vector<ZX> out;
  std::vector<bool> used(lifted.size(), false);
  std::size_t remaining = lifted.size();
  for (std::size_t s = 1; 2 * s <= remaining; ++s) {
    bool restart = true;
    while (restart) {
      restart = false;
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < lifted.size(); ++i)
        if (!used[i]) idx.push_back(i);
      if (2 * s > idx.size()) break;
      std::vector<std::size_t> comb(s);
      for (std::size_t i = 0; i < s; ++i) comb[i] = i;
      const Int cur_lc = f.back();
      for (;;) {
        long dsum = 0;
        for (auto c : comb) dsum += degree(lifted[idx[c]]);
        if (admissible.empty() || admissible.count(dsum)) {
          // Constant-term screen before the full product.
          Int c0 = cur_lc;
          for (auto c : comb) c0 = mod(c0 * lifted[idx[c]][0], pk);
          c0 = symmetric_mod(c0, pk);
          if (c0 == 0 ? f[0] == 0 : mpz_divisible_p(Int(cur_lc * f[0]).get_mpz_t(), c0.get_mpz_t())) {
            ZX g = upoly::constant(ZZ, cur_lc);
            for (auto c : comb) g = mod_poly(upoly::mul(ZZ, g, lifted[idx[c]]), pk);
            g = primitive_part(symmetric(g, pk));
            if (auto q = divide(f, g)) {
              out.push_back(g);
              f = primitive_part(*q);
              for (auto c : comb) used[idx[c]] = true;
              remaining -= s;
              restart = true;
              break;
            }
          }
        }
        // Next combination.
        long i = static_cast<long>(s) - 1;
        while (i >= 0 && comb[i] == idx.size() - s + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (std::size_t j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
      }
    }
  }
  if (degree(f) > 0) out.push_back(f);
  return out;
}

// Square-free over Z whenever it is square-free of full degree mod some p;
// a handful of small primes settles almost every input.
bool squarefree_mod_small_prime(const ZX& f) {
  int tried = 0;
  for (std::uint64_t p = 3; tried < 5 && p < 200; p += 2) {
    if (!is_prime(Int(static_cast<unsigned long>(p)))) continue;
    if (mod(f.back(), Int(static_cast<unsigned long>(p))) == 0) continue;
    ++tried;
    GaloisField Fp = GaloisField::prime(p);
    ff::Poly fp = reduce(Fp, f);
    if (degree(upoly::gcd(Fp, fp, upoly::derivative(Fp, fp))) == 0) return true;
  }
  return false;
}

}  // namespace

bool less(const ZX& a, const ZX& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Int content(const ZX& f) {
  Int g = 0;
  for (const auto& c : f) g = tori::gcd(g, c);
  return g;
}

ZX primitive_part(const ZX& f) {
  if (f.empty()) return f;
  Int c = content(f);
  if (f.back() < 0) c = -c;
  ZX out;
  for (const auto& v : f) out.push_back(ZZ.divexact(v, c));
  return out;
}

ZX from_rational(const QX& f) {
  Int den = 1;
  for (const auto& c : f) den = lcm(den, c.get_den());
  ZX out;
  for (const auto& c : f) out.push_back(Int(c * den));
  upoly::trim(ZZ, out);
  return primitive_part(out);
}

QX to_rational(const ZX& f) {
  QX out;
  for (const auto& c : f) out.push_back(Rat(c));
  return out;
}

std::optional<ZX> divide(const ZX& f, const ZX& g) {
  if (g.empty()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");
  if (f.empty()) return ZX{};
  if (f.size() < g.size()) return std::nullopt;
  ZX rem = f;
  ZX quo(f.size() - g.size() + 1, 0);
  const Int& lc = g.back();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Int top = rem[k + g.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    Int c = ZZ.divexact(top, lc);
    quo[k] = c;
    for (std::size_t j = 0; j < g.size(); ++j) rem[k + j] -= c * g[j];
  }
  upoly::trim(ZZ, rem);
  if (!rem.empty()) return std::nullopt;
  upoly::trim(ZZ, quo);
  return quo;
}

ZX gcd(const ZX& f, const ZX& g) {
  if (f.empty()) return primitive_part(g);
  if (g.empty()) return primitive_part(f);
  ZX a = primitive_part(f), b = primitive_part(g);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // Primitive pseudo-remainder sequence.
    ZX r = a;
    while (!r.empty() && r.size() >= b.size()) {
      const std::size_t k = r.size() - b.size();
      const Int top = r.back();
      r = upoly::sub(ZZ, upoly::scale(ZZ, r, b.back()), upoly::shift(ZZ, upoly::scale(ZZ, b, top), k));
    }
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

std::vector<std::pair<ZX, unsigned>> squarefree(const ZX& f0) {
  std::vector<std::pair<ZX, unsigned>> out;
  ZX f = primitive_part(f0);
  if (degree(f) <= 0) return out;
  ZX c = gcd(f, upoly::derivative(ZZ, f));
  ZX w = primitive_part(*divide(f, c));
  unsigned i = 1;
  while (degree(w) > 0) {
    ZX y = gcd(w, c);
    ZX z = primitive_part(*divide(w, y));
    if (degree(z) > 0) out.emplace_back(z, i);
    ++i;
    w = y;
    c = primitive_part(*divide(c, y));
  }
  return out;
}

Factorization factor(const ZX& f) {
  if (f.empty()) throw Error(Errc::InvalidInput, "factorisation of the zero polynomial");
  Factorization out;
  out.unit = content(f);
  if (f.back() < 0) out.unit = -out.unit;
  ZX g = primitive_part(f);
  // Powers of t are split off first; they are common in Laurent-type inputs.
  unsigned tz = 0;
  while (g.size() > 1 && g[0] == 0) {
    g.erase(g.begin());
    ++tz;
  }
  if (tz) out.factors.emplace_back(ZX{0, 1}, tz);
  if (degree(g) > 0 && squarefree_mod_small_prime(g)) {
    for (auto& h : factor_squarefree(g)) out.factors.emplace_back(std::move(h), 1);
  } else {
    for (const auto& [s, e] : squarefree(g))
      for (auto& h : factor_squarefree(s)) out.factors.emplace_back(std::move(h), e);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

bool is_irreducible(const ZX& f) {
  if (degree(f) < 1) return false;
  if (content(f) != 1) return degree(f) == 0;
  auto fac = factor(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

unsigned long euler_phi(unsigned long m) {
  unsigned long r = m;
  for (unsigned long q = 2; q * q <= m; ++q)
    if (m % q == 0) {
      while (m % q == 0) m /= q;
      r -= r / q;
    }
  if (m > 1) r -= r / m;
  return r;
}

ZX cyclotomic(unsigned long m) {
  if (m == 0) throw Error(Errc::InvalidInput, "cyclotomic order must be positive");
  static std::map<unsigned long, ZX> cache;
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  ZX f(m + 1, 0);
  f[0] = -1;
  f[m] = 1;
  for (unsigned long d = 1; d < m; ++d)
    if (m % d == 0) f = *divide(f, cyclotomic(d));
  cache[m] = f;
  return f;
}

std::optional<Rat> rational_reconstruction(const Int& a, const Int& m, const Int& bound) {
  Int r0 = m, r1 = mod(a, m);
  Int t0 = 0, t1 = 1;
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (abs(t1) > bound || t1 == 0) return std::nullopt;
  if (tori::gcd(r1, t1) != 1) return std::nullopt;
  Rat out(r1, t1);
  out.canonicalize();
  return out;
}

}  // namespace tori::zx
