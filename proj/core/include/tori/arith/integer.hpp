#ifndef TORI_ARITH_INTEGER_HPP
#define TORI_ARITH_INTEGER_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tori {

using Int = mpz_class;
using Rat = mpq_class;

// p-adic valuation of a nonzero integer.
long valuation(const Int& a, const Int& p);
long valuation(const Rat& a, const Int& p);

Int ipow(const Int& base, unsigned long e);
bool is_prime(const Int& n);

// Accepts "a", "-a", "a/b".
Rat parse_rational(std::string_view text);
std::string to_string(const Int& a);
std::string to_string(const Rat& a);

// Least nonnegative residue.
inline Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Residue in (-m/2, m/2].
Int symmetric_mod(const Int& a, const Int& m);

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Inverse of a modulo m; throws Errc::NotAUnit when gcd(a, m) != 1.
Int inverse_mod(const Int& a, const Int& m);

// floor(log_p n) for n >= 1.
long floor_log(const Int& n, const Int& p);

std::uint64_t to_u64(const Int& a);
long to_long(const Int& a);

}  // namespace tori

#endif  // TORI_ARITH_INTEGER_HPP
