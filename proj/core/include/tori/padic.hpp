#ifndef TORI_PADIC_HPP
#define TORI_PADIC_HPP

#include <climits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tori/arith/galois_field.hpp"
#include "tori/arith/integer.hpp"
#include "tori/error.hpp"

namespace tori {

// A rational valuation or +infinity.
struct Valuation {
  bool infinite = true;
  Rat value = 0;

  Valuation() = default;
  Valuation(const Rat& v) : infinite(false), value(v) {}  // NOLINT(google-explicit-constructor)
  Valuation(long v) : infinite(false), value(v) {}        // NOLINT(google-explicit-constructor)
  static Valuation inf() { return Valuation(); }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite || b.infinite) return inf();
    return Valuation(Rat(a.value + b.value));
  }
  std::string str() const { return infinite ? "inf" : to_string(value); }
};

// Elements of W(F_q)/p^k are vectors of f_deg integer coefficients in
// [0, p^k) for the basis 1, X, ..., X^{f_deg-1} of Z_p[X]/(modulus).
using Residue = std::vector<Int>;

// Shared, immutable description of an unramified extension of Q_p truncated
// at absolute precision N. Copies are cheap handles to the same data.
class PadicContext {
 public:
  static constexpr long kInf = LONG_MAX / 4;

  const Int& p() const { return impl_->p; }
  long precision() const { return impl_->N; }
  unsigned degree() const { return impl_->f; }
  Int q() const { return ipow(impl_->p, impl_->f); }
  const std::vector<Int>& modulus() const { return impl_->modulus; }
  const GaloisField& residue_field() const { return impl_->field; }

  Int pk(long k) const;

  Residue zero() const { return Residue(impl_->f, 0); }
  Residue one() const;
  Residue from_int(const Int& a, long k) const;
  Residue reduce(const Residue& a, long k) const;
  Residue add(const Residue& a, const Residue& b, long k) const;
  Residue sub(const Residue& a, const Residue& b, long k) const;
  Residue neg(const Residue& a, long k) const;
  Residue mul(const Residue& a, const Residue& b, long k) const;
  Residue scale(const Residue& a, const Int& c, long k) const;
  Residue pow(const Residue& a, const Int& e, long k) const;
  // Requires a to be a unit modulo p.
  Residue inv(const Residue& a, long k) const;
  // Largest j <= k with p^j dividing every coefficient (k if a == 0 mod p^k).
  long valuation(const Residue& a, long k) const;
  Residue divide_by_p_power(const Residue& a, long j) const;
  Residue teichmueller(const Residue& a, long k) const;
  Residue frobenius(const Residue& a, long k) const;
  // log of a unit, returned modulo p^k.
  Residue log_unit(const Residue& a, long k) const;

  GaloisField::Elem to_field(const Residue& a) const;
  Residue from_field(GaloisField::Elem e) const;

  std::string residue_str(const Residue& a) const;

  bool operator==(const PadicContext& o) const;
  bool operator!=(const PadicContext& o) const { return !(*this == o); }

 private:
  friend PadicContext make_context(const Int&, long, unsigned, std::optional<std::vector<Int>>);
  struct Impl {
    Int p;
    long N = 0;
    unsigned f = 1;
    std::vector<Int> modulus;
    GaloisField field{2, {0, 1}};
    long root_precision = 0;
    Residue frobenius_root;  // root of modulus congruent to X^p
    std::vector<Int> powers;
  };
  Residue reduce_degree(std::vector<Int> prod, long k) const;
  std::shared_ptr<Impl> impl_;
};

// Throws NotPrime, ReducibleModulus, InvalidInput.
PadicContext make_context(const Int& p, long N, unsigned f_deg = 1,
                          std::optional<std::vector<Int>> modulus = std::nullopt);

// p^v * unit with the unit known modulo p^rel. Zero is either exact, or
// known only to vanish modulo p^abs (a precision-exhausted zero).
class PadicScalar {
 public:
  PadicScalar() = default;

  static PadicScalar exact_zero(const PadicContext& ctx);
  // Zero known modulo p^abs_precision.
  static PadicScalar inexact_zero(const PadicContext& ctx, long abs_precision);
  static PadicScalar one(const PadicContext& ctx);
  // Throws DivisionByZero on a zero denominator.
  static PadicScalar from_rational(const PadicContext& ctx, const Rat& a);
  static PadicScalar from_int(const PadicContext& ctx, const Int& a) { return from_rational(ctx, Rat(a)); }
  // The element represented by `a`, known modulo p^abs_precision.
  static PadicScalar from_residue(const PadicContext& ctx, const Residue& a, long abs_precision);
  static PadicScalar from_field(const PadicContext& ctx, GaloisField::Elem e);

  const PadicContext& context() const { return ctx_; }
  long valuation() const { return is_zero() ? PadicContext::kInf : v_; }
  Valuation val() const { return is_zero() ? Valuation::inf() : Valuation(v_); }
  bool is_zero() const { return rel_ == 0; }
  bool is_exact_zero() const { return rel_ == 0 && v_ == PadicContext::kInf; }
  bool precision_exhausted() const { return rel_ == 0 && v_ != PadicContext::kInf; }
  bool is_unit() const { return !is_zero() && v_ == 0; }
  long relative_precision() const { return rel_; }
  long absolute_precision() const { return rel_ == 0 ? v_ : v_ + rel_; }
  const Residue& unit() const { return unit_; }

  PadicScalar operator-() const;
  friend PadicScalar operator+(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator-(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator*(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator/(const PadicScalar& a, const PadicScalar& b);
  PadicScalar inverse() const;
  PadicScalar pow(long e) const;

  // a - b vanishes to the precision available.
  bool equals(const PadicScalar& b) const { return (*this - b).is_zero(); }

  // Element mod p; requires valuation >= 0.
  GaloisField::Elem reduction() const;
  // p^v * unit as a residue vector modulo p^k (requires v >= 0).
  Residue to_residue(long k) const;
  // The integer representative p^v * unit for f_deg = 1 (requires v >= 0).
  Int to_integer() const;

  std::string str() const;

 private:
  PadicContext ctx_;
  long v_ = PadicContext::kInf;
  long rel_ = 0;
  Residue unit_;
};

PadicScalar teichmueller(const PadicScalar& u);
PadicScalar frobenius(const PadicScalar& x);
// Logarithm of a unit, extended from 1 + pZ_p by killing roots of unity.
// The result is known to absolute precision equal to the relative precision of u.
PadicScalar log_unit(const PadicScalar& u);

// Ring policy over the scalars of a fixed context.
struct PadicRing {
  using Elem = PadicScalar;
  static constexpr bool is_field = true;
  PadicContext ctx;

  Elem zero() const { return PadicScalar::exact_zero(ctx); }
  Elem one() const { return PadicScalar::one(ctx); }
  Elem from_int(const Int& n) const { return PadicScalar::from_int(ctx, n); }
  Elem from_rational(const Rat& a) const { return PadicScalar::from_rational(ctx, a); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return a.inverse(); }
  Elem divexact(const Elem& a, const Elem& b) const { return a / b; }
  Elem div_int(const Elem& a, long n) const { return a / from_int(Int(n)); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a.equals(b); }
  std::string str(const Elem& a) const { return a.str(); }
  bool operator==(const PadicRing& o) const { return ctx == o.ctx; }
};

}  // namespace tori

#endif  // TORI_PADIC_HPP
