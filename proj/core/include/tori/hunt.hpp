#ifndef TORI_HUNT_HPP
#define TORI_HUNT_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tori/arith/zpoly.hpp"
#include "tori/curve.hpp"
#include "tori/padic.hpp"

namespace tori {

// f(t) = num(t) / den(t) with coprime integer polynomials.
struct RationalMap {
  zx::ZX num;
  zx::ZX den{Int(1)};
};

// Cancels common factors and makes the denominator's leading coefficient positive.
RationalMap make_rational_map(zx::ZX num, zx::ZX den);

// prod f_i^{exponents_i} is a primitive root of unity of this order.
struct Relation {
  std::vector<long> exponents;
  unsigned long order = 1;
};

struct UnlikelyCertificate {
  zx::ZX minpoly;              // irreducible over Q, primitive, positive leading coefficient
  std::size_t root_index = 0;  // label among the conjugate roots
  std::size_t conjugates = 1;
  Relation first;
  Relation second;
  std::array<long, 3> minor{};  // (i, j, n_i m_j - n_j m_i), nonzero
  std::vector<Relation> relations;  // every relation found at this point
  bool verified = false;
};

struct HuntResult {
  long B = 0;
  long M = 0;
  std::vector<UnlikelyCertificate> certificates;
  std::size_t norms_factored = 0;
  bool bounds_too_small = false;  // no pair of independent relations met
};

// Throws InvalidInput for a constant function and DependentFunctions when
// the functions are multiplicatively dependent modulo constants.
void check_independent(const std::vector<RationalMap>& fs);

// Points t where two independent relations prod f_i^{n_i} = zeta hold, with
// primitive n, |n_i| <= B, zeta of order at most M (orders up to M * k are
// admitted for n when k n still satisfies |k n_i| <= B).
HuntResult relation_solve(const std::vector<RationalMap>& fs, long B, long M);

// Exact check of Phi_order(prod f_i(t)^{e_i}) = 0 in Q[t]/(minpoly).
bool verify_relation(const zx::ZX& minpoly, const std::vector<RationalMap>& fs, const Relation& r);

struct FilterResult {
  bool pass = false;
  std::vector<PadicScalar> logs;   // log f_i at the point, with log p = 0
  std::vector<Int> direction;      // primitive integer direction of the log vector
  long height_bound = 0;
  long precision = 0;
  std::string reason;
};

// Roots of minpoly are ordered by the residue factors of minpoly mod p
// (sorted), then by Frobenius powers. Throws BadReduction when minpoly mod p
// is not square-free of full degree, NonUnitValue when some f_i(root) cannot
// be resolved, PrecisionExhausted when the reconstruction cannot separate
// directions of the given height.
FilterResult padic_rank_filter(const zx::ZX& minpoly, std::size_t root_index, const std::vector<RationalMap>& fs,
                               const Int& p, long N, long height_bound);
// Tests the log vector against the direction orthogonal to both relations.
FilterResult padic_rank_filter(const UnlikelyCertificate& c, const std::vector<RationalMap>& fs, const Int& p, long N);

struct DiscSlopes {
  std::vector<std::uint64_t> residue_factor;  // monic over F_p, low to high
  std::vector<std::pair<Rat, long>> slopes;   // root valuations in the disc with multiplicities
};

struct RamificationClass {
  bool ramified = false;
  long degree = 1;  // lcm of slope denominators
  std::vector<DiscSlopes> discs;
  long bound = 0;   // 2g + d
  bool within_bound = true;
};

// Throws BadReduction when p divides the leading coefficient.
RamificationClass classify_ramification(const zx::ZX& minpoly, const Int& p, long N, long genus, long boundary_degree);

// Defining equation of the image of t -> (f(t), g(t)), as Res_t(f_num - x f_den, g_num - y g_den).
ZPoly2 implicit_equation(const RationalMap& f, const RationalMap& g);

// f(x) as a function on the line y = 0.
RationalFunction on_line(const RationalMap& f);

}  // namespace tori

#endif  // TORI_HUNT_HPP
