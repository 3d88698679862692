#ifndef TORI_ARITH_FF_FACTOR_HPP
#define TORI_ARITH_FF_FACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "tori/arith/galois_field.hpp"
#include "tori/arith/upoly.hpp"

// Factorisation of univariate polynomials over a finite field.
namespace tori::ff {

using Poly = upoly::Vec<GaloisField>;

// x^q mod f.
Poly frobenius_x(const GaloisField& F, const Poly& f);

// Square-free decomposition: f = lc * prod g_i^{e_i} with g_i monic, square-free, pairwise coprime.
std::vector<std::pair<Poly, unsigned>> squarefree(const GaloisField& F, const Poly& f);

// Splits a monic square-free f into (product of irreducible factors of degree d, d).
std::vector<std::pair<Poly, unsigned>> distinct_degree(const GaloisField& F, const Poly& f);

// Splits a monic square-free f whose irreducible factors all have degree d.
std::vector<Poly> equal_degree(const GaloisField& F, const Poly& f, unsigned d);

// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
std::vector<std::pair<Poly, unsigned>> factor(const GaloisField& F, const Poly& f);

// Distinct roots in F, sorted by encoding.
std::vector<GaloisField::Elem> roots(const GaloisField& F, const Poly& f);

bool is_irreducible(const GaloisField& F, const Poly& f);

// Degrees of the irreducible factors of a square-free f, with multiplicity.
std::vector<unsigned> factor_degrees(const GaloisField& F, const Poly& f);

}  // namespace tori::ff

#endif  // TORI_ARITH_FF_FACTOR_HPP
