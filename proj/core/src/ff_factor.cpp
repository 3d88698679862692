#include "tori/arith/ff_factor.hpp"

#include <algorithm>
#include <random>
#include <tuple>

namespace tori::ff {

namespace {

using upoly::degree;

bool is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }

Poly pth_root(const GaloisField& F, const Poly& f) {
  const std::uint64_t p = F.characteristic();
  Poly out((f.size() + p - 1) / p, 0);
  // Inverse Frobenius on coefficients: a -> a^(q/p).
  std::uint64_t e = F.order() / p;
  for (std::size_t i = 0; i < f.size(); i += p) out[i / p] = F.pow(f[i], e);
  upoly::trim(F, out);
  return out;
}

void squarefree_rec(const GaloisField& F, Poly f, unsigned mult, std::vector<std::pair<Poly, unsigned>>& out) {
  if (degree(f) <= 0) return;
  Poly fd = upoly::derivative(F, f);
  if (fd.empty()) {
    squarefree_rec(F, pth_root(F, f), mult * static_cast<unsigned>(F.characteristic()), out);
    return;
  }
  Poly c = upoly::gcd(F, f, fd);
  Poly w = upoly::divexact(F, f, c);
  unsigned i = 1;
  while (!is_one(w)) {
    Poly y = upoly::gcd(F, w, c);
    Poly z = upoly::divexact(F, w, y);
    if (degree(z) > 0) out.emplace_back(upoly::monic(F, z), i * mult);
    ++i;
    w = std::move(y);
    c = upoly::divexact(F, c, w);
  }
  if (degree(c) > 0) squarefree_rec(F, pth_root(F, c), mult * static_cast<unsigned>(F.characteristic()), out);
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Poly random_poly(const GaloisField& F, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, F.order() - 1);
  Poly a(n);
  for (auto& c : a) c = dist(rng);
  upoly::trim(F, a);
  return a;
}

// Word-size prime field arithmetic for the distinct-degree split.
namespace nmod {

using V = std::vector<std::uint64_t>;
using u128 = unsigned __int128;

void trim(V& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

// a mod f, f monic.
void rem_inplace(V& a, const V& f, std::uint64_t p) {
  const std::size_t n = f.size() - 1;
  trim(a);
  while (a.size() > n) {
    const std::uint64_t c = a.back();
    const std::size_t s = a.size() - 1 - n;
    if (c != 0)
      for (std::size_t i = 0; i < n; ++i) a[s + i] = (a[s + i] + (p - c) * f[i]) % p;
    a.pop_back();
    trim(a);
  }
}

void make_monic(V& a, std::uint64_t p) {
  if (a.empty() || a.back() == 1) return;
  const std::uint64_t c = inv(a.back(), p);
  for (auto& x : a) x = static_cast<std::uint64_t>(static_cast<u128>(x) * c % p);
}

V gcd(V a, V b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    make_monic(b, p);
    rem_inplace(a, b, p);
    std::swap(a, b);
  }
  make_monic(a, p);
  return a;
}

V divexact(V a, const V& f, std::uint64_t p) {
  const std::size_t n = f.size() - 1;
  trim(a);
  if (a.size() < f.size()) return {};
  V q(a.size() - n, 0);
  const std::uint64_t li = inv(f.back(), p);
  for (std::size_t k = a.size(); k-- > n;) {
    const std::uint64_t c = static_cast<std::uint64_t>(static_cast<u128>(a[k]) * li % p);
    q[k - n] = c;
    if (c != 0)
      for (std::size_t i = 0; i <= n; ++i) a[k - n + i] = (a[k - n + i] + (p - c) * f[i]) % p;
  }
  trim(q);
  return q;
}

// Rows are x^(i p) mod f for i < deg f.
std::vector<V> frobenius_matrix(const V& f, std::uint64_t p) {
  const std::size_t n = f.size() - 1;
  std::vector<V> rows(n, V(n, 0));
  V cur(n, 0);
  cur[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    rows[i] = cur;
    for (std::uint64_t s = 0; s < p; ++s) {
      // cur *= x mod f.
      const std::uint64_t top = cur[n - 1];
      for (std::size_t j = n - 1; j > 0; --j) cur[j] = (cur[j - 1] + (p - top) * f[j]) % p;
      cur[0] = ((p - top) * f[0]) % p;
    }
  }
  return rows;
}

V apply(const std::vector<V>& rows, const V& h, std::uint64_t p) {
  const std::size_t n = rows.size();
  std::vector<u128> acc(n, 0);
  for (std::size_t i = 0; i < h.size(); ++i) {
    const std::uint64_t c = h[i];
    if (c == 0) continue;
    const V& r = rows[i];
    for (std::size_t j = 0; j < n; ++j) acc[j] += static_cast<u128>(c) * r[j];
  }
  V out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = static_cast<std::uint64_t>(acc[j] % p);
  trim(out);
  return out;
}

V mulmod(const V& a, const V& b, const V& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<u128> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<u128>(a[i]) * b[j];
  }
  V out(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) out[k] = static_cast<std::uint64_t>(acc[k] % p);
  rem_inplace(out, f, p);
  return out;
}

V powmod(V a, Int e, const V& f, std::uint64_t p) {
  rem_inplace(a, f, p);
  V r{1};
  for (std::size_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
    r = mulmod(r, r, f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, a, f, p);
  }
  return r;
}

bool usable(const GaloisField& F) { return F.degree() == 1 && F.characteristic() < (1ull << 31); }

// Monic square-free f over a small prime field.
std::vector<std::pair<V, unsigned>> distinct_degree(V f, std::uint64_t p) {
  std::vector<std::pair<V, unsigned>> out;
  make_monic(f, p);
  auto rows = frobenius_matrix(f, p);
  V h{0, 1};
  if (f.size() == 2) h = {static_cast<std::uint64_t>((p - f[0]) % p)};
  for (unsigned d = 1; 2 * (d) + 1 <= f.size(); ++d) {
    h = apply(rows, h, p);
    V t = h;
    if (t.size() < 2) t.resize(2, 0);
    t[1] = (t[1] + p - 1) % p;
    trim(t);
    V g = gcd(f, t, p);
    if (g.size() > 1) {
      out.emplace_back(g, d);
      f = divexact(f, g, p);
      if (f.size() <= 1) break;
      rows = frobenius_matrix(f, p);
      rem_inplace(h, f, p);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<unsigned>(f.size() - 1));
  return out;
}

}  // namespace nmod

void edf_rec(const GaloisField& F, const Poly& f, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
  const long n = degree(f);
  if (n <= static_cast<long>(d)) {
    out.push_back(f);
    return;
  }
  const Int q(static_cast<unsigned long>(F.order()));
  const Int qd = [&] {
    Int r = 1;
    for (unsigned i = 0; i < d; ++i) r *= q;
    return r;
  }();
  for (;;) {
    Poly a = random_poly(F, static_cast<std::size_t>(n), rng);
    if (degree(a) <= 0) continue;
    Poly b;
    if (F.characteristic() == 2) {
      // Absolute trace map a + a^2 + ... + a^(2^(k-1)), q^d = 2^k.
      unsigned k = F.degree() * d;
      Poly t = upoly::rem(F, a, f);
      b = t;
      for (unsigned i = 1; i < k; ++i) {
        t = upoly::mulmod(F, t, t, f);
        b = upoly::add(F, b, t);
      }
    } else {
      b = nmod::usable(F) ? nmod::powmod(a, Int((qd - 1) / 2), f, F.characteristic())
                          : upoly::powmod(F, a, Int((qd - 1) / 2), f);
      b = upoly::sub(F, b, upoly::constant(F, F.one()));
    }
    Poly g = upoly::gcd(F, f, b);
    if (degree(g) > 0 && degree(g) < n) {
      edf_rec(F, g, d, rng, out);
      edf_rec(F, upoly::divexact(F, f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

Poly frobenius_x(const GaloisField& F, const Poly& f) {
  return upoly::powmod(F, upoly::x_poly(F), Int(static_cast<unsigned long>(F.order())), f);
}

std::vector<std::pair<Poly, unsigned>> squarefree(const GaloisField& F, const Poly& f) {
  std::vector<std::pair<Poly, unsigned>> out;
  if (f.empty()) throw Error(Errc::InvalidInput, "square-free decomposition of zero");
  squarefree_rec(F, upoly::monic(F, f), 1, out);
  return out;
}

std::vector<std::pair<Poly, unsigned>> distinct_degree(const GaloisField& F, const Poly& f_in) {
  if (nmod::usable(F) && degree(f_in) > 1) return nmod::distinct_degree(f_in, F.characteristic());
  std::vector<std::pair<Poly, unsigned>> out;
  Poly f = upoly::monic(F, f_in);
  Poly x = upoly::x_poly(F);
  Poly h = x;
  const Int q(static_cast<unsigned long>(F.order()));
  for (unsigned d = 1; 2 * static_cast<long>(d) <= degree(f); ++d) {
    h = upoly::powmod(F, h, q, f);
    Poly g = upoly::gcd(F, f, upoly::sub(F, h, x));
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      f = upoly::divexact(F, f, g);
      h = upoly::rem(F, h, f);
    }
  }
  if (degree(f) > 0) out.emplace_back(f, static_cast<unsigned>(degree(f)));
  return out;
}

std::vector<Poly> equal_degree(const GaloisField& F, const Poly& f, unsigned d) {
  std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(degree(f)) * 131u + d);
  std::vector<Poly> out;
  edf_rec(F, upoly::monic(F, f), d, rng, out);
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<std::pair<Poly, unsigned>> factor(const GaloisField& F, const Poly& f) {
  std::vector<std::pair<Poly, unsigned>> out;
  for (auto& [g, e] : squarefree(F, f))
    for (auto& [h, d] : distinct_degree(F, g))
      for (auto& irr : equal_degree(F, h, d)) out.emplace_back(irr, e);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (poly_less(a.first, b.first)) return true;
    if (poly_less(b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

std::vector<GaloisField::Elem> roots(const GaloisField& F, const Poly& f) {
  std::vector<GaloisField::Elem> out;
  if (f.empty()) throw Error(Errc::InvalidInput, "roots of the zero polynomial");
  if (degree(f) == 0) return out;
  Poly fm = upoly::monic(F, f);
  Poly g = upoly::gcd(F, fm, upoly::sub(F, frobenius_x(F, fm), upoly::x_poly(F)));
  if (degree(g) <= 0) return out;
  for (auto& lin : equal_degree(F, g, 1)) out.push_back(F.neg(lin[0]));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_irreducible(const GaloisField& F, const Poly& f) {
  const long n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  if (nmod::usable(F)) {
    auto dd = nmod::distinct_degree(f, F.characteristic());
    return dd.size() == 1 && dd[0].second == static_cast<unsigned>(n);
  }
  Poly fm = upoly::monic(F, f);
  Poly x = upoly::x_poly(F);
  Poly h = x;
  const Int q(static_cast<unsigned long>(F.order()));
  for (long i = 1; 2 * i <= n; ++i) {
    h = upoly::powmod(F, h, q, fm);
    if (degree(upoly::gcd(F, fm, upoly::sub(F, h, x))) > 0) return false;
  }
  return true;
}

std::vector<unsigned> factor_degrees(const GaloisField& F, const Poly& f) {
  std::vector<unsigned> out;
  for (auto& [g, d] : distinct_degree(F, f))
    for (long k = 0; k < degree(g) / static_cast<long>(d); ++k) out.push_back(d);
  return out;
}

}  // namespace tori::ff
