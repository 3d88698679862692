#include "tori/arith/integer.hpp"

#include <limits>

#include "tori/error.hpp"

namespace tori {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::ComposeNonzeroConstant: return "ComposeNonzeroConstant";
    case Errc::ConstantTermNotUnit: return "ConstantTermNotUnit";
    case Errc::ZeroSeries: return "ZeroSeries";
    case Errc::SingularPoint: return "SingularPoint";
    case Errc::PointNotOnCurve: return "PointNotOnCurve";
    case Errc::PoleOnDisc: return "PoleOnDisc";
    case Errc::ZeroFunction: return "ZeroFunction";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::ZeroColumn: return "ZeroColumn";
    case Errc::ReducibleH: return "ReducibleH";
    case Errc::DegenerateDerivatives: return "DegenerateDerivatives";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NonradicalSystem: return "NonradicalSystem";
    case Errc::DependentFunctions: return "DependentFunctions";
    case Errc::BoundsTooSmall: return "BoundsTooSmall";
    case Errc::NonUnitValue: return "NonUnitValue";
    case Errc::BadReduction: return "BadReduction";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

long valuation(const Int& a, const Int& p) {
  if (a == 0) throw Error(Errc::InvalidInput, "valuation of zero");
  Int q = a;
  long v = 0;
  while (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

long valuation(const Rat& a, const Int& p) {
  return valuation(Int(a.get_num()), p) - valuation(Int(a.get_den()), p);
}

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Rat parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '+') s.push_back(c);
  if (s.empty()) throw Error(Errc::InvalidInput, "empty rational");
  Rat r;
  if (r.set_str(s, 10) != 0) throw Error(Errc::InvalidInput, "bad rational '" + s + "'");
  if (r.get_den() == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Int& a) { return a.get_str(); }

std::string to_string(const Rat& a) { return a.get_str(); }

Int symmetric_mod(const Int& a, const Int& m) {
  Int r = mod(a, m);
  if (2 * r > m) r -= m;
  return r;
}

Int inverse_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error(Errc::NotAUnit, to_string(a) + " is not invertible mod " + to_string(m));
  return r;
}

long floor_log(const Int& n, const Int& p) {
  long k = 0;
  Int q = p;
  while (q <= n) {
    q *= p;
    ++k;
  }
  return k;
}

std::uint64_t to_u64(const Int& a) {
  if (a < 0 || mpz_sizeinbase(a.get_mpz_t(), 2) > 64)
    throw Error(Errc::InvalidInput, "integer out of 64-bit range: " + to_string(a));
  return mpz_get_ui(a.get_mpz_t());
}

long to_long(const Int& a) {
  if (!a.fits_slong_p()) throw Error(Errc::InvalidInput, "integer out of range: " + to_string(a));
  return a.get_si();
}

}  // namespace tori
