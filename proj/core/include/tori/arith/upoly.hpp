#ifndef TORI_ARITH_UPOLY_HPP
#define TORI_ARITH_UPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tori/arith/integer.hpp"
#include "tori/error.hpp"

// Dense univariate polynomials over a ring policy R, stored as coefficient
// vectors (constant term first). Every function trims trailing zeros, so
// the zero polynomial is the empty vector.
namespace tori::upoly {

template <class R>
using Vec = std::vector<typename R::Elem>;

template <class R>
void trim(const R& r, Vec<R>& a) {
  while (!a.empty() && r.is_zero(a.back())) a.pop_back();
}

template <class V>
long degree(const V& a) {
  return static_cast<long>(a.size()) - 1;
}

template <class R>
Vec<R> constant(const R& r, const typename R::Elem& c) {
  Vec<R> out;
  if (!r.is_zero(c)) out.push_back(c);
  return out;
}

template <class R>
Vec<R> monomial(const R& r, const typename R::Elem& c, std::size_t e) {
  if (r.is_zero(c)) return {};
  Vec<R> out(e + 1, r.zero());
  out[e] = c;
  return out;
}

template <class R>
Vec<R> x_poly(const R& r) {
  return Vec<R>{r.zero(), r.one()};
}

template <class R>
bool equal(const R& r, const Vec<R>& a, const Vec<R>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!r.equal(a[i], b[i])) return false;
  return true;
}

template <class R>
Vec<R> add(const R& r, const Vec<R>& a, const Vec<R>& b) {
  Vec<R> out(std::max(a.size(), b.size()), r.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = r.add(out[i], b[i]);
  trim(r, out);
  return out;
}

template <class R>
Vec<R> sub(const R& r, const Vec<R>& a, const Vec<R>& b) {
  Vec<R> out(std::max(a.size(), b.size()), r.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = r.sub(out[i], b[i]);
  trim(r, out);
  return out;
}

template <class R>
Vec<R> neg(const R& r, const Vec<R>& a) {
  Vec<R> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = r.neg(a[i]);
  return out;
}

template <class R>
Vec<R> scale(const R& r, const Vec<R>& a, const typename R::Elem& c) {
  if (r.is_zero(c)) return {};
  Vec<R> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = r.mul(a[i], c);
  trim(r, out);
  return out;
}

template <class R>
Vec<R> shift(const R& r, const Vec<R>& a, std::size_t k) {
  if (a.empty()) return {};
  Vec<R> out(a.size() + k, r.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i + k] = a[i];
  return out;
}

template <class R>
Vec<R> mul(const R& r, const Vec<R>& a, const Vec<R>& b) {
  if (a.empty() || b.empty()) return {};
  Vec<R> out(a.size() + b.size() - 1, r.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (r.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = r.add(out[i + j], r.mul(a[i], b[j]));
  }
  trim(r, out);
  return out;
}

template <class R>
Vec<R> pow(const R& r, Vec<R> a, unsigned long e) {
  Vec<R> out = constant(r, r.one());
  while (e) {
    if (e & 1) out = mul(r, out, a);
    e >>= 1;
    if (e) a = mul(r, a, a);
  }
  return out;
}

template <class R>
typename R::Elem eval(const R& r, const Vec<R>& a, const typename R::Elem& x) {
  typename R::Elem acc = r.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = r.add(r.mul(acc, x), a[i]);
  return acc;
}

// a(b(x)).
template <class R>
Vec<R> compose(const R& r, const Vec<R>& a, const Vec<R>& b) {
  Vec<R> acc;
  for (std::size_t i = a.size(); i-- > 0;) acc = add(r, mul(r, acc, b), constant(r, a[i]));
  return acc;
}

template <class R>
Vec<R> derivative(const R& r, const Vec<R>& a) {
  if (a.size() <= 1) return {};
  Vec<R> out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = r.mul(a[i], r.from_int(Int(static_cast<unsigned long>(i))));
  trim(r, out);
  return out;
}

// Division with remainder. The leading coefficient of b must be invertible
// through R::divexact (always true over a field; over Z it requires that
// every intermediate quotient coefficient be integral).
template <class R>
std::pair<Vec<R>, Vec<R>> divrem(const R& r, const Vec<R>& a, const Vec<R>& b) {
  if (b.empty()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Vec<R> rem = a;
  Vec<R> quo(a.size() - b.size() + 1, r.zero());
  const auto& lc = b.back();
  [[maybe_unused]] typename R::Elem lc_inv{};
  if constexpr (R::is_field) lc_inv = r.inv(lc);
  for (std::size_t k = quo.size(); k-- > 0;) {
    const auto& top = rem[k + b.size() - 1];
    if (r.is_zero(top)) continue;
    typename R::Elem c;
    if constexpr (R::is_field) c = r.mul(top, lc_inv);
    else c = r.divexact(top, lc);
    quo[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] = r.sub(rem[k + j], r.mul(c, b[j]));
  }
  trim(r, quo);
  trim(r, rem);
  return {std::move(quo), std::move(rem)};
}

template <class R>
Vec<R> rem(const R& r, const Vec<R>& a, const Vec<R>& b) {
  return divrem(r, a, b).second;
}

// Quotient when b divides a; throws DomainMismatch otherwise.
template <class R>
Vec<R> divexact(const R& r, const Vec<R>& a, const Vec<R>& b) {
  auto [q, m] = divrem(r, a, b);
  if (!m.empty()) throw Error(Errc::DomainMismatch, "inexact polynomial division");
  return q;
}

template <class R>
Vec<R> monic(const R& r, const Vec<R>& a) {
  if (a.empty()) return a;
  return scale(r, a, r.inv(a.back()));
}

// Monic gcd over a field.
template <class R>
Vec<R> gcd(const R& r, Vec<R> a, Vec<R> b) {
  while (!b.empty()) {
    Vec<R> t = rem(r, a, b);
    a = std::move(b);
    b = std::move(t);
  }
  return monic(r, a);
}

// Returns (g, s, t) with s*a + t*b = g monic, over a field.
template <class R>
std::tuple<Vec<R>, Vec<R>, Vec<R>> ext_gcd(const R& r, const Vec<R>& a, const Vec<R>& b) {
  Vec<R> r0 = a, r1 = b;
  Vec<R> s0 = constant(r, r.one()), s1;
  Vec<R> t0, t1 = constant(r, r.one());
  while (!r1.empty()) {
    auto [q, m] = divrem(r, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(m);
    Vec<R> s2 = sub(r, s0, mul(r, q, s1));
    Vec<R> t2 = sub(r, t0, mul(r, q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {r0, s0, t0};
  auto li = r.inv(r0.back());
  return {scale(r, r0, li), scale(r, s0, li), scale(r, t0, li)};
}

template <class R>
Vec<R> mulmod(const R& r, const Vec<R>& a, const Vec<R>& b, const Vec<R>& m) {
  return rem(r, mul(r, a, b), m);
}

template <class R>
Vec<R> powmod(const R& r, Vec<R> a, const Int& e, const Vec<R>& m) {
  Vec<R> out = rem(r, constant(r, r.one()), m);
  a = rem(r, a, m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    out = mulmod(r, out, out, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) out = mulmod(r, out, a, m);
  }
  return out;
}

template <class R>
std::vector<typename R::Elem> coefficients_padded(const Vec<R>& a, std::size_t n, const R& r) {
  std::vector<typename R::Elem> out(n, r.zero());
  for (std::size_t i = 0; i < a.size() && i < n; ++i) out[i] = a[i];
  return out;
}

template <class R>
std::string to_string(const R& r, const Vec<R>& a, const std::string& var = "x") {
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (r.is_zero(a[i])) continue;
    if (!out.empty()) out += " + ";
    std::string c = r.str(a[i]);
    if (i == 0) {
      out += c;
    } else {
      if (!r.equal(a[i], r.one())) out += "(" + c + ")*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace tori::upoly

#endif  // TORI_ARITH_UPOLY_HPP
