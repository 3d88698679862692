#ifndef TORI_ARITH_ZPOLY_HPP
#define TORI_ARITH_ZPOLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tori/arith/ring.hpp"
#include "tori/arith/upoly.hpp"

// Univariate polynomials over Z and Q: gcd, square-free decomposition,
// factorisation (Hensel lifting with Zassenhaus recombination),
// cyclotomic polynomials and rational reconstruction.
namespace tori::zx {

using ZX = upoly::Vec<IntegerRing>;
using QX = upoly::Vec<RationalField>;

Int content(const ZX& f);
// f / content, with positive leading coefficient.
ZX primitive_part(const ZX& f);
// Clears denominators and takes the primitive part.
ZX from_rational(const QX& f);
QX to_rational(const ZX& f);

// q with f = q * g when g divides f over Z.
std::optional<ZX> divide(const ZX& f, const ZX& g);

// Primitive gcd with positive leading coefficient (zero when both vanish).
ZX gcd(const ZX& f, const ZX& g);

// Primitive square-free factors g_i with f = c * prod g_i^i.
std::vector<std::pair<ZX, unsigned>> squarefree(const ZX& f);

struct Factorization {
  Int unit;  // content with sign
  std::vector<std::pair<ZX, unsigned>> factors;  // primitive, positive leading coefficient, sorted
};

Factorization factor(const ZX& f);
bool is_irreducible(const ZX& f);

ZX cyclotomic(unsigned long m);
unsigned long euler_phi(unsigned long m);

// r/s with |r|, |s| <= bound and r = a s mod m, if one exists.
std::optional<Rat> rational_reconstruction(const Int& a, const Int& m, const Int& bound);

// Sort order used for factor lists and map keys: degree, then coefficients from the top.
bool less(const ZX& a, const ZX& b);

}  // namespace tori::zx

#endif  // TORI_ARITH_ZPOLY_HPP
