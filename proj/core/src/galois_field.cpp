#include "tori/arith/galois_field.hpp"

#include <algorithm>

#include "tori/arith/ff_factor.hpp"
#include "tori/error.hpp"

namespace tori {

namespace {

constexpr std::uint64_t kTableLimit = 1u << 16;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

}  // namespace

GaloisField::GaloisField(std::uint64_t p, std::vector<std::uint64_t> modulus) : impl_(std::make_shared<Impl>()) {
  if (!is_prime(Int(static_cast<unsigned long>(p)))) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (modulus.size() < 2 || modulus.back() != 1) throw Error(Errc::InvalidInput, "field modulus must be monic of degree >= 1");
  for (auto c : modulus)
    if (c >= p) throw Error(Errc::InvalidInput, "field modulus coefficient out of range");
  impl_->p = p;
  impl_->m = static_cast<unsigned>(modulus.size() - 1);
  impl_->modulus = std::move(modulus);
  impl_->pw.assign(impl_->m + 1, 1);
  for (unsigned i = 1; i <= impl_->m; ++i) {
    if (impl_->pw[i - 1] > UINT64_MAX / p) throw Error(Errc::InvalidInput, "field too large for 64-bit encoding");
    impl_->pw[i] = impl_->pw[i - 1] * p;
  }
  impl_->q = impl_->pw[impl_->m];
  if (impl_->m > 1) {
    GaloisField Fp(p, {0, 1});
    upoly::Vec<GaloisField> mu(impl_->modulus.begin(), impl_->modulus.end());
    if (!ff::is_irreducible(Fp, mu)) throw Error(Errc::ReducibleModulus, "field modulus is reducible");
    if (impl_->q <= kTableLimit) build_tables();
  }
}

GaloisField GaloisField::canonical(std::uint64_t p, unsigned m) {
  if (m == 0) throw Error(Errc::InvalidInput, "field degree must be positive");
  return GaloisField(p, default_irreducible(p, m));
}

std::vector<std::uint64_t> default_irreducible(std::uint64_t p, unsigned m) {
  if (!is_prime(Int(static_cast<unsigned long>(p)))) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (m == 1) return {0, 1};
  GaloisField Fp(p, {0, 1});
  std::vector<std::uint64_t> digits(m, 0);
  for (;;) {
    upoly::Vec<GaloisField> cand(digits.begin(), digits.end());
    cand.push_back(1);
    if (ff::is_irreducible(Fp, cand)) return cand;
    unsigned i = 0;
    while (i < m && ++digits[i] == p) digits[i++] = 0;
    if (i == m) throw Error(Errc::InvalidInput, "no irreducible polynomial found");
  }
}

GaloisField::Elem GaloisField::from_digits(const std::vector<std::uint64_t>& digits) const {
  Elem e = 0;
  for (unsigned i = 0; i < impl_->m && i < digits.size(); ++i) e += (digits[i] % impl_->p) * impl_->pw[i];
  return e;
}

std::vector<std::uint64_t> GaloisField::digits(Elem a) const {
  std::vector<std::uint64_t> d(impl_->m);
  for (unsigned i = 0; i < impl_->m; ++i) {
    d[i] = a % impl_->p;
    a /= impl_->p;
  }
  return d;
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
  const auto p = impl_->p;
  if (impl_->m == 1) {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem out = 0;
  for (unsigned i = 0; i < impl_->m; ++i) {
    Elem s = a % p + b % p;
    if (s >= p) s -= p;
    out += s * impl_->pw[i];
    a /= p;
    b /= p;
  }
  return out;
}

GaloisField::Elem GaloisField::neg(Elem a) const {
  const auto p = impl_->p;
  if (impl_->m == 1) return a == 0 ? 0 : p - a;
  Elem out = 0;
  for (unsigned i = 0; i < impl_->m; ++i) {
    Elem d = a % p;
    out += (d == 0 ? 0 : p - d) * impl_->pw[i];
    a /= p;
  }
  return out;
}

GaloisField::Elem GaloisField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (impl_->m == 1) return mulmod_u64(a, b, impl_->p);
  if (!impl_->log_table.empty()) {
    std::uint64_t s = impl_->log_table[a] + impl_->log_table[b];
    if (s >= impl_->q - 1) s -= impl_->q - 1;
    return impl_->exp_table[s];
  }
  return mul_slow(a, b);
}

GaloisField::Elem GaloisField::mul_slow(Elem a, Elem b) const {
  const auto p = impl_->p;
  const unsigned m = impl_->m;
  auto da = digits(a), db = digits(b);
  std::vector<std::uint64_t> prod(2 * m - 1, 0);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + mulmod_u64(da[i], db[j], p)) % p;
  const auto& mu = impl_->modulus;
  for (unsigned k = 2 * m - 1; k-- > m;) {
    std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (unsigned j = 0; j < m; ++j) {
      std::uint64_t t = mulmod_u64(c, mu[j], p);
      prod[k - m + j] = (prod[k - m + j] + p - t) % p;
    }
  }
  prod.resize(m);
  return from_digits(prod);
}

void GaloisField::build_tables() {
  const std::uint64_t q = impl_->q;
  std::vector<std::uint64_t> primes;
  std::uint64_t n = q - 1;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) primes.push_back(n);
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  Elem g = 0;
  for (Elem c = 2; c < q; ++c) {
    bool ok = true;
    for (auto r : primes)
      if (slow_pow(c, (q - 1) / r) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      g = c;
      break;
    }
  }
  if (g == 0) g = 1;  // q == 2 is handled by m == 1; unreachable otherwise
  impl_->exp_table.assign(q - 1, 0);
  impl_->log_table.assign(q, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < q - 1; ++i) {
    impl_->exp_table[i] = static_cast<std::uint32_t>(x);
    impl_->log_table[x] = static_cast<std::uint32_t>(i);
    x = mul_slow(x, g);
  }
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero in F_" + std::to_string(impl_->q));
  if (impl_->m == 1) {
    // Extended Euclid on machine words.
    std::int64_t r0 = static_cast<std::int64_t>(impl_->p), r1 = static_cast<std::int64_t>(a), t0 = 0, t1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t r2 = r0 - q * r1, t2 = t0 - q * t1;
      r0 = r1;
      r1 = r2;
      t0 = t1;
      t1 = t2;
    }
    return static_cast<Elem>(t0 < 0 ? t0 + static_cast<std::int64_t>(impl_->p) : t0);
  }
  if (!impl_->log_table.empty()) {
    std::uint64_t l = impl_->log_table[a];
    return impl_->exp_table[l == 0 ? 0 : impl_->q - 1 - l];
  }
  return pow(a, impl_->q - 2);
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

GaloisField::Elem GaloisField::pow(Elem a, const Int& e) const {
  if (e < 0) return pow(inv(a), Int(-e));
  if (a == 0) return e == 0 ? 1 : 0;
  Int r = mod(e, Int(static_cast<unsigned long>(impl_->q - 1)));
  return pow(a, to_u64(r));
}

unsigned GaloisField::element_degree(Elem a) const {
  Elem b = a;
  for (unsigned d = 1; d <= impl_->m; ++d) {
    b = pow(b, impl_->p);
    if (b == a) return d;
  }
  return impl_->m;
}

std::string GaloisField::str(Elem a) const {
  if (impl_->m == 1) return std::to_string(a);
  auto d = digits(a);
  std::string out;
  for (unsigned i = impl_->m; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
    } else {
      if (d[i] != 1) out += std::to_string(d[i]) + "*";
      out += "a";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace tori
