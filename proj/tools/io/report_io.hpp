#ifndef TORI_TOOLS_REPORT_IO_HPP
#define TORI_TOOLS_REPORT_IO_HPP

#include <string>

#include "io/spec_io.hpp"
#include "tori/newton.hpp"
#include "tori/series.hpp"

namespace tori::io {

// Human-readable polynomial text, e.g. "t^2 - t + 1".
std::string poly_text(const zx::ZX& f, const std::string& var = "t");
std::string bipoly_text(const ZPoly2& f);

json newton_json(const NewtonPolygon& np);
json series_json(const Series<PadicRing>& s);
json slope_report_json(const SlopeReport& r);
json anomalous_json(const AnomalousReport& a, const Int& p);
json verdict_json(const FinitenessVerdict& v);
json pair_json(const PairVerdict& pv);
json relation_json(const Relation& r);
json certificate_json(const UnlikelyCertificate& c);
json hunt_json(const HuntResult& h);
json filter_json(const FilterResult& f);
json ramification_json(const RamificationClass& r);
json bounds_json(const BoundTable& b, long genus, long boundary_degree, const Int& p);
json error_json(const StageError& e);
json report_json(const Report& r);

// Indented key: value rendering of a JSON document.
std::string render_text(const json& j);

}  // namespace tori::io

#endif  // TORI_TOOLS_REPORT_IO_HPP
