#ifndef TORI_ARITH_GALOIS_FIELD_HPP
#define TORI_ARITH_GALOIS_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tori/arith/integer.hpp"

namespace tori {

// Finite field F_q, q = p^m, realised as F_p[X]/(modulus). Elements are
// encoded as integers 0..q-1 whose base-p digits are the coefficients of
// the residue polynomial (constant term least significant), so F_p sits
// inside every F_{p^m} as the encodings 0..p-1.
//
// Copies share the underlying tables.
class GaloisField {
 public:
  using Elem = std::uint64_t;
  static constexpr bool is_field = true;

  // F_2; placeholder for default-constructed containers.
  GaloisField() : GaloisField(2, {0, 1}) {}
  // `modulus` is monic of degree m >= 1, coefficients low to high, each in [0, p).
  GaloisField(std::uint64_t p, std::vector<std::uint64_t> modulus);

  // F_{p^m} with the lexicographically first monic irreducible modulus.
  static GaloisField canonical(std::uint64_t p, unsigned m);
  static GaloisField prime(std::uint64_t p) { return canonical(p, 1); }

  std::uint64_t characteristic() const { return impl_->p; }
  unsigned degree() const { return impl_->m; }
  std::uint64_t order() const { return impl_->q; }
  const std::vector<std::uint64_t>& modulus() const { return impl_->modulus; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(const Int& n) const { return to_u64(mod(n, Int(static_cast<unsigned long>(impl_->p)))); }
  Elem from_digits(const std::vector<std::uint64_t>& digits) const;
  std::vector<std::uint64_t> digits(Elem a) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem divexact(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem div_int(Elem a, long n) const { return mul(a, inv(from_int(Int(n)))); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem pow(Elem a, const Int& e) const;
  Elem frobenius(Elem a) const { return pow(a, impl_->p); }
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  // Smallest d >= 1 with a^(p^d) = a.
  unsigned element_degree(Elem a) const;
  std::string str(Elem a) const;

  bool operator==(const GaloisField& o) const {
    return impl_ == o.impl_ || (impl_->p == o.impl_->p && impl_->modulus == o.impl_->modulus);
  }

 private:
  struct Impl {
    std::uint64_t p = 0;
    unsigned m = 0;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> modulus;
    std::vector<std::uint64_t> pw;  // p^i
    std::vector<std::uint32_t> exp_table;
    std::vector<std::uint32_t> log_table;
  };

  Elem mul_slow(Elem a, Elem b) const;
  void build_tables();

  std::shared_ptr<Impl> impl_;
};

// First monic irreducible polynomial of degree m over F_p, scanning the
// encodings 0, 1, 2, ... of the non-leading coefficients.
std::vector<std::uint64_t> default_irreducible(std::uint64_t p, unsigned m);

}  // namespace tori

#endif  // TORI_ARITH_GALOIS_FIELD_HPP
