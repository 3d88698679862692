#include "tori/newton.hpp"

namespace tori {

NewtonPolygon newton_polygon(const std::vector<std::optional<Rat>>& valuations, long trunc, bool exact,
                             std::vector<long> uncertain) {
  std::vector<HullVertex> pts;
  for (long n = 0; n < static_cast<long>(valuations.size()) && n <= trunc; ++n)
    if (valuations[n]) pts.push_back({n, *valuations[n]});
  if (pts.empty()) throw Error(Errc::ZeroSeries, "Newton polygon of a series that vanishes to its truncation");

  std::vector<HullVertex> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // Drop b unless a -> b -> pt turns strictly upward.
      Rat cross = Rat(b.index - a.index) * (pt.value - a.value) - Rat(pt.index - a.index) * (b.value - a.value);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }

  if (!exact) {
    std::size_t cut = 0;
    for (std::size_t i = 0; i < hull.size(); ++i)
      if (hull[i].value <= hull[cut].value) cut = i;
    hull.resize(cut + 1);
  }

  NewtonPolygon np;
  np.vertices = hull;
  np.trunc = trunc;
  np.exact = exact;
  np.uncertain_indices = std::move(uncertain);
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    Slope s;
    s.length = hull[i + 1].index - hull[i].index;
    s.lambda = -(hull[i + 1].value - hull[i].value) / Rat(s.length);
    s.lambda.canonicalize();
    np.slopes.push_back(s);
  }
  if (!exact && !np.slopes.empty()) np.slopes.back().provisional = true;
  return np;
}

NewtonPolygon newton_polygon(const Series<RationalField>& s, const Int& p) {
  std::vector<std::optional<Rat>> vals(s.size());
  for (long i = 0; i < s.size(); ++i)
    if (s.coeffs()[i] != 0) vals[i] = Rat(valuation(s.coeffs()[i], p));
  return newton_polygon(vals, s.trunc(), s.exact());
}

NewtonPolygon newton_polygon(const Series<PadicRing>& s) {
  std::vector<std::optional<Rat>> vals(s.size());
  std::vector<long> uncertain;
  for (long i = 0; i < s.size(); ++i) {
    const auto& c = s.coeffs()[i];
    if (c.precision_exhausted()) uncertain.push_back(i);
    else if (!c.is_zero()) vals[i] = Rat(c.valuation());
  }
  return newton_polygon(vals, s.trunc(), s.exact(), std::move(uncertain));
}

std::vector<std::pair<Rat, long>> negative_slopes(const NewtonPolygon& np) {
  std::vector<std::pair<Rat, long>> out;
  for (const auto& s : np.slopes)
    if (s.lambda > 0) out.emplace_back(s.lambda, s.length);
  return out;
}

long zero_count(const NewtonPolygon& np, const Rat& lo, const Rat& hi) {
  long n = 0;
  for (const auto& [lambda, len] : negative_slopes(np))
    if (lambda >= lo && lambda <= hi) n += len;
  return n;
}

std::string NewtonPolygon::str() const {
  std::string out = "vertices:";
  for (const auto& v : vertices) out += " (" + std::to_string(v.index) + "," + to_string(v.value) + ")";
  out += "; slopes:";
  for (const auto& s : slopes)
    out += " " + to_string(s.lambda) + "x" + std::to_string(s.length) + (s.provisional ? "?" : "");
  return out;
}

}  // namespace tori
