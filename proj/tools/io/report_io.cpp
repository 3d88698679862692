#include "io/report_io.hpp"

#include <sstream>

namespace tori::io {

namespace {

std::string monomial_text(const Int& c, bool first, const std::string& mono) {
  std::string out;
  Int a = abs(c);
  if (first)
    out = c < 0 ? "-" : "";
  else
    out = c < 0 ? " - " : " + ";
  if (mono.empty()) return out + a.get_str();
  if (a != 1) out += a.get_str() + "*";
  return out + mono;
}

std::string power(const std::string& var, long e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

json field_poly_json(const std::vector<std::uint64_t>& f) {
  json out = json::array();
  for (auto c : f) out.push_back(c);
  return out;
}

json padic_json(const PadicScalar& a) {
  json j{{"value", a.str()}, {"absolute_precision", a.absolute_precision()}};
  if (a.is_zero())
    j["valuation"] = nullptr;
  else
    j["valuation"] = a.valuation();
  return j;
}

json slopes_json(const std::vector<Slope>& slopes) {
  json out = json::array();
  for (const auto& s : slopes)
    out.push_back({{"lambda", to_string(s.lambda)}, {"length", s.length}, {"provisional", s.provisional}});
  return out;
}

json vertices_json(const std::vector<HullVertex>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back({v.index, to_string(v.value)});
  return out;
}

void render(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto is_scalar_list = [](const json& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v)
      if (e.is_object()) return false;
    return true;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !is_scalar_list(v))) {
        os << pad << k << ":\n";
        render(os, v, indent + 1);
      } else {
        os << pad << k << ": " << (v.is_array() ? v.dump() : scalar(v)) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        os << pad << "-\n";
        render(os, v, indent + 1);
      } else {
        os << pad << "- " << (v.is_array() ? v.dump() : scalar(v)) << "\n";
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string poly_text(const zx::ZX& f, const std::string& var) {
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    out += monomial_text(f[i], out.empty(), power(var, static_cast<long>(i)));
  }
  return out.empty() ? "0" : out;
}

std::string bipoly_text(const ZPoly2& f) {
  std::string out;
  for (long d = f.total_degree(); d >= 0; --d)
    for (long ey = d; ey >= 0; --ey) {
      const long ex = d - ey;
      if (ey >= static_cast<long>(f.rows.size()) || ex >= static_cast<long>(f.rows[ey].size())) continue;
      const Int& c = f.rows[ey][ex];
      if (c == 0) continue;
      std::string mono = power("x", ex);
      if (ey > 0) mono += (mono.empty() ? "" : "*") + power("y", ey);
      out += monomial_text(c, out.empty(), mono);
    }
  return out.empty() ? "0" : out;
}

json newton_json(const NewtonPolygon& np) {
  json neg = json::array();
  for (const auto& [lambda, len] : negative_slopes(np)) neg.push_back({{"lambda", to_string(lambda)}, {"length", len}});
  return {{"vertices", vertices_json(np.vertices)},
          {"slopes", slopes_json(np.slopes)},
          {"negative_slopes", neg},
          {"truncation", np.trunc},
          {"exact", np.exact}};
}

json series_json(const Series<PadicRing>& s) {
  json cs = json::array();
  for (const auto& c : s.coeffs()) cs.push_back(c.str());
  return {{"truncation", s.trunc()}, {"coefficients", cs}};
}

json slope_report_json(const SlopeReport& r) {
  return {{"verdict", to_string(r.verdict)},
          {"details", r.details},
          {"computed", newton_json(r.computed)},
          {"predicted",
           {{"k", r.predicted.k},
            {"log_valuation", r.predicted.v.str()},
            {"case", to_string(r.predicted.case_tag)},
            {"vertices", vertices_json(r.predicted.vertices)},
            {"slopes", slopes_json(r.predicted.slopes)}}},
          {"log_value_at_precision_ceiling", r.log_value_at_precision_ceiling}};
}

json anomalous_json(const AnomalousReport& a, const Int& p) {
  json classes = json::array();
  const auto pu = to_u64(p);
  for (const auto& c : a.classes) {
    json pts = json::array();
    for (const auto& pt : c.points) {
      const GaloisField F = GaloisField::canonical(pu, pt.degree);
      json jp{{"degree", pt.degree},
              {"x", field_poly_json(F.digits(pt.x))},
              {"y", field_poly_json(F.digits(pt.y))},
              {"x_minpoly", field_poly_json(pt.x_minpoly)},
              {"x_root_index", pt.x_root_index},
              {"y_minpoly", field_poly_json(pt.y_minpoly)}};
      if (pt.y_in_x) jp["y_in_x"] = field_poly_json(*pt.y_in_x);
      pts.push_back(jp);
    }
    classes.push_back({{"exponents", c.exponents}, {"nonradical", c.nonradical}, {"points", pts}});
  }
  return {{"classes", classes},
          {"total", a.total},
          {"bound", a.bound},
          {"divisor_bound", a.divisor_bound},
          {"within_bound", a.total <= a.bound},
          {"within_divisor_bound", a.total <= a.divisor_bound}};
}

json verdict_json(const FinitenessVerdict& v) {
  json j{{"kind", to_string(v.kind)},
         {"h_divides_G", v.divisibility.divides},
         {"h_status", to_string(v.divisibility.h_status)},
         {"G", bipoly::to_string(v.G)},
         {"remainder", bipoly::to_string(v.divisibility.remainder)},
         {"derivatives_degenerate", v.derivatives_degenerate},
         {"chain", v.chain}};
  if (v.dG_holds) j["dG_criterion"] = *v.dG_holds;
  if (v.euler) j["euler_relation"] = {v.euler->first, v.euler->second};
  return j;
}

json pair_json(const PairVerdict& pv) {
  json j{{"functions", {pv.i + 1, pv.j + 1}}, {"image", bipoly_text(pv.image)}};
  if (pv.dlog_independent) j["dlog_independent"] = *pv.dlog_independent;
  if (pv.verdict) j["verdict"] = verdict_json(*pv.verdict);
  if (pv.error) j["error"] = error_json(*pv.error);
  return j;
}

json relation_json(const Relation& r) { return {{"exponents", r.exponents}, {"order", r.order}}; }

json certificate_json(const UnlikelyCertificate& c) {
  json rels = json::array();
  for (const auto& r : c.relations) rels.push_back(relation_json(r));
  return {{"minpoly", poly_text(c.minpoly)},
          {"minpoly_terms", upoly_json(c.minpoly)},
          {"root_index", c.root_index},
          {"conjugates", c.conjugates},
          {"first", relation_json(c.first)},
          {"second", relation_json(c.second)},
          {"minor", {{"i", c.minor[0] + 1}, {"j", c.minor[1] + 1}, {"value", c.minor[2]}}},
          {"relations", rels},
          {"verified", c.verified}};
}

json hunt_json(const HuntResult& h) {
  json certs = json::array();
  for (const auto& c : h.certificates) certs.push_back(certificate_json(c));
  return {{"B", h.B},
          {"M", h.M},
          {"norms_factored", h.norms_factored},
          {"bounds_too_small", h.bounds_too_small},
          {"certificates", certs}};
}

json filter_json(const FilterResult& f) {
  json logs = json::array();
  for (const auto& l : f.logs) logs.push_back(padic_json(l));
  json dir = json::array();
  for (const auto& d : f.direction) dir.push_back(int_json(d));
  return {{"pass", f.pass},
          {"reason", f.reason},
          {"logs", logs},
          {"direction", dir},
          {"height_bound", f.height_bound},
          {"precision", f.precision}};
}

json ramification_json(const RamificationClass& r) {
  json discs = json::array();
  for (const auto& d : r.discs) {
    json sl = json::array();
    for (const auto& [v, m] : d.slopes) sl.push_back({{"valuation", to_string(v)}, {"multiplicity", m}});
    discs.push_back({{"residue_factor", field_poly_json(d.residue_factor)}, {"root_valuations", sl}});
  }
  return {{"ramified", r.ramified},
          {"degree", r.degree},
          {"bound", r.bound},
          {"within_bound", r.within_bound},
          {"discs", discs}};
}

json bounds_json(const BoundTable& b, long genus, long boundary_degree, const Int& p) {
  json j{{"inputs", {{"genus", genus}, {"boundary_degree", boundary_degree}, {"prime", int_json(p)}}},
         {"ramification_degree_bound", b.ramification.bound},
         {"ramification_bound_valid", b.ramification.valid}};
  j["buium_bound"] = b.buium ? json(b.buium->get_str()) : json(nullptr);
  j["anomalous_bound"] = b.anomalous ? json(*b.anomalous) : json(nullptr);
  j["anomalous_divisor_bound"] = b.anomalous_divisor ? json(*b.anomalous_divisor) : json(nullptr);
  return j;
}

json error_json(const StageError& e) {
  return {{"stage", e.stage}, {"code", std::string(to_string(e.code))}, {"message", e.message}};
}

json report_json(const Report& r) {
  const auto& s = r.spec;
  json stages = json::array();
  auto stage_errors = [&](const std::string& name) {
    json out = json::array();
    for (const auto& e : r.errors)
      if (e.stage == name) out.push_back(error_json(e));
    return out;
  };

  json dep = json::array();
  for (const auto& [i, j] : r.dlog_dependent_pairs) dep.push_back({i + 1, j + 1});
  stages.push_back({{"stage", kStageIndependence},
                    {"provenance", "multiplicative independence of the functions modulo constants"},
                    {"inputs", {{"model", s.model == ModelKind::Rational ? "rational" : "plane"}}},
                    {"outputs", {{"dlog_dependent_pairs_mod_p", dep}}},
                    {"verdict", r.independent ? "independent" : "dependent"},
                    {"errors", stage_errors(kStageIndependence)}});
  if (r.stopped) return {{"spec", spec_json(s)}, {"stages", stages}, {"stopped", true},
                         {"errors", stage_errors(kStageIndependence)}};

  json anomalous{{"stage", kStageAnomalous},
                 {"provenance", "residue discs where an F_p-combination of the dlog f_i vanishes"},
                 {"inputs", {{"prime", int_json(s.prime)}, {"genus", s.genus}, {"boundary_degree", s.boundary_degree}}},
                 {"errors", stage_errors(kStageAnomalous)}};
  if (r.anomalous) {
    anomalous["outputs"] = anomalous_json(*r.anomalous, s.prime);
    anomalous["verdict"] = r.anomalous->total <= r.anomalous->divisor_bound ? "within bound" : "bound exceeded";
  }
  stages.push_back(anomalous);

  json pairs = json::array();
  bool all_finite = true;
  for (const auto& pv : r.pairs) {
    pairs.push_back(pair_json(pv));
    if (!pv.verdict || pv.verdict->kind != FinitenessKind::Finite) all_finite = false;
  }
  stages.push_back({{"stage", kStageFiniteness},
                    {"provenance", "mod p^2 Frobenius-lift test for unramified points in the torsion locus"},
                    {"outputs", {{"pairs", pairs}}},
                    {"verdict", all_finite ? "FINITE for every pair" : "not conclusive for every pair"},
                    {"errors", stage_errors(kStageFiniteness)}});

  json hunt{{"stage", kStageHunt},
            {"provenance", "points in rank-one subgroups via two independent multiplicative relations"},
            {"inputs", {{"B", s.B}, {"M", s.M}}},
            {"searched_region", "primitive exponent vectors with |n_i| <= B and torsion orders up to M"},
            {"errors", stage_errors(kStageHunt)}};
  if (r.hunt) {
    hunt["outputs"] = hunt_json(*r.hunt);
    hunt["verdict"] = std::to_string(r.hunt->certificates.size()) + " certificates";
  } else {
    hunt["verdict"] = s.model == ModelKind::Plane ? "skipped for plane models" : "failed";
  }
  stages.push_back(hunt);

  json checks = json::array();
  std::size_t passed = 0, unramified = 0;
  for (const auto& c : r.certificates) {
    json cj{{"minpoly", poly_text(c.certificate.minpoly)}, {"root_index", c.certificate.root_index}};
    if (c.filter) {
      cj["filter"] = filter_json(*c.filter);
      if (c.filter->pass) ++passed;
    }
    if (c.ramification) {
      cj["ramification"] = ramification_json(*c.ramification);
      if (!c.ramification->ramified) ++unramified;
    }
    json errs = json::array();
    for (const auto& e : c.errors) errs.push_back(error_json(e));
    cj["errors"] = errs;
    checks.push_back(cj);
  }
  stages.push_back({{"stage", kStageFilter},
                    {"provenance", "p-adic logarithms of a rank-one point lie on an integer line"},
                    {"inputs", {{"prime", int_json(s.prime)}, {"precision", s.precision}}},
                    {"outputs", {{"certificates", checks}}},
                    {"verdict", std::to_string(passed) + " of " + std::to_string(r.certificates.size()) + " pass"},
                    {"errors", stage_errors(kStageFilter)}});
  stages.push_back({{"stage", kStageRamification},
                    {"provenance", "Newton polygon of the shifted minimal polynomial in each residue disc"},
                    {"verdict", std::to_string(unramified) + " of " + std::to_string(r.certificates.size()) +
                                    " unramified"},
                    {"errors", stage_errors(kStageRamification)}});
  stages.push_back({{"stage", kStageBounds},
                    {"provenance", "ramification degree, unramified-count and anomalous-disc bounds"},
                    {"outputs", bounds_json(r.bounds, s.genus, s.boundary_degree, s.prime)},
                    {"verdict", r.bounds.ramification.valid ? "valid" : "validity=false (p < 2g + d)"},
                    {"errors", stage_errors(kStageBounds)}});

  json errs = json::array();
  for (const auto& e : r.errors) errs.push_back(error_json(e));
  return {{"spec", spec_json(s)}, {"stages", stages}, {"stopped", false}, {"errors", errs}};
}

std::string render_text(const json& j) {
  std::ostringstream os;
  render(os, j, 0);
  return os.str();
}

}  // namespace tori::io
