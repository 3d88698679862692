#ifndef TORI_NEWTON_HPP
#define TORI_NEWTON_HPP

#include <optional>
#include <string>
#include <vector>

#include "tori/padic.hpp"
#include "tori/series.hpp"

namespace tori {

struct HullVertex {
  long index = 0;
  Rat value = 0;
  friend bool operator==(const HullVertex& a, const HullVertex& b) { return a.index == b.index && a.value == b.value; }
};

// A hull segment of gradient -lambda spanning `length` indices.
struct Slope {
  Rat lambda = 0;
  long length = 0;
  // The segment ends where the truncation cut the hull; unseen
  // coefficients could still change it.
  bool provisional = false;
};

struct NewtonPolygon {
  std::vector<HullVertex> vertices;
  std::vector<Slope> slopes;
  long trunc = 0;
  bool exact = false;
  // Indices whose coefficient vanished only to the available precision;
  // they carry no hull support.
  std::vector<long> uncertain_indices;

  std::string str() const;
};

// Point data: valuation of the n-th coefficient, nullopt for a zero coefficient.
// For a truncated (non-exact) series the hull is cut at its rightmost vertex of
// minimal valuation, since rising segments of a truncation say nothing about
// the series; the final segment is then marked provisional.
NewtonPolygon newton_polygon(const std::vector<std::optional<Rat>>& valuations, long trunc, bool exact,
                             std::vector<long> uncertain = {});

NewtonPolygon newton_polygon(const Series<RationalField>& s, const Int& p);
NewtonPolygon newton_polygon(const Series<PadicRing>& s);

// Segments with lambda > 0, as (lambda, length).
std::vector<std::pair<Rat, long>> negative_slopes(const NewtonPolygon& np);

// Total length of negative slopes with lambda in [lo, hi].
long zero_count(const NewtonPolygon& np, const Rat& lo, const Rat& hi);

}  // namespace tori

#endif  // TORI_NEWTON_HPP
