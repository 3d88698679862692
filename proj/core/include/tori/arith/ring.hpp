#ifndef TORI_ARITH_RING_HPP
#define TORI_ARITH_RING_HPP

#include <string>

#include "tori/arith/integer.hpp"
#include "tori/error.hpp"

// Coefficient-ring policies. Generic polynomial and series code takes a
// policy value `R` and manipulates `typename R::Elem` only through it, so
// rings whose elements need a context (finite fields, p-adic residue
// rings) plug into the same algorithms as Z and Q.
namespace tori {

struct IntegerRing {
  using Elem = Int;
  static constexpr bool is_field = false;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(const Int& n) const { return n; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  // Exact quotient; the caller guarantees b | a.
  Elem divexact(const Elem& a, const Elem& b) const {
    Elem q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  std::string str(const Elem& a) const { return a.get_str(); }
  bool operator==(const IntegerRing&) const { return true; }
};

struct RationalField {
  using Elem = Rat;
  static constexpr bool is_field = true;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(const Int& n) const { return Rat(n); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero rational");
    return 1 / a;
  }
  Elem divexact(const Elem& a, const Elem& b) const { return a / b; }
  Elem div_int(const Elem& a, long n) const { return a / Rat(n); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  std::string str(const Elem& a) const { return a.get_str(); }
  bool operator==(const RationalField&) const { return true; }
};

}  // namespace tori

#endif  // TORI_ARITH_RING_HPP
