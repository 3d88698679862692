#include "io/spec_io.hpp"

#include <fstream>

#include "tori/error.hpp"

namespace tori::io {

namespace {

const IntegerRing ZZ;

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::InvalidInput, "spec: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

long small(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long>();
}

RationalMap parse_map(const json& j) {
  zx::ZX den = j.contains("den") ? parse_upoly(j.at("den")) : zx::ZX{Int(1)};
  zx::ZX num = parse_upoly(field(j, "num"));
  if (num.empty() || den.empty()) throw Error(Errc::ZeroFunction, "spec: zero numerator or denominator");
  return make_rational_map(std::move(num), std::move(den));
}

RationalFunction parse_function(const json& j) {
  RationalFunction f{parse_bipoly(field(j, "num")), ZPoly2::constant(ZZ, Int(1))};
  if (j.contains("den")) f.den = parse_bipoly(j.at("den"));
  return f;
}

}  // namespace

Int parse_int(const json& j) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Rat r = parse_rational(j.get<std::string>());
    if (r.get_den() != 1) bad("expected an integer, got " + j.get<std::string>());
    return r.get_num();
  }
  bad("expected an integer");
}

Rat parse_rat(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  return Rat(parse_int(j));
}

json int_json(const Int& a) {
  if (a.fits_slong_p()) return a.get_si();
  return a.get_str();
}

zx::ZX parse_upoly(const json& j) {
  if (!j.is_array()) bad("polynomial must be a list of [exponent, coefficient] terms");
  zx::ZX out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) bad("univariate term must be [exponent, coefficient]");
    const long e = small(t[0], "exponent");
    if (e < 0) bad("negative exponent");
    if (static_cast<long>(out.size()) <= e) out.resize(e + 1, Int(0));
    out[e] += parse_int(t[1]);
  }
  upoly::trim(ZZ, out);
  return out;
}

ZPoly2 parse_bipoly(const json& j) {
  if (!j.is_array()) bad("polynomial must be a list of [ex, ey, coefficient] terms");
  ZPoly2 out(ZZ);
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) bad("bivariate term must be [ex, ey, coefficient]");
    const long ex = small(t[0], "exponent"), ey = small(t[1], "exponent");
    if (ex < 0 || ey < 0) bad("negative exponent");
    out.add_term(ex, ey, parse_int(t[2]));
  }
  return out;
}

json upoly_json(const zx::ZX& f) {
  json terms = json::array();
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0) terms.push_back({i, int_json(f[i])});
  return terms;
}

json bipoly_json(const ZPoly2& f) {
  json terms = json::array();
  for (std::size_t j = 0; j < f.rows.size(); ++j)
    for (std::size_t i = 0; i < f.rows[j].size(); ++i)
      if (f.rows[j][i] != 0) terms.push_back({i, j, int_json(f.rows[j][i])});
  return terms;
}

TorusCurveSpec parse_spec(const json& j) {
  TorusCurveSpec s;
  s.prime = parse_int(field(j, "prime"));
  s.precision = small(field(j, "precision"), "precision");
  s.genus = j.contains("genus") ? small(j.at("genus"), "genus") : 0;
  s.boundary_degree = small(field(j, "boundary_degree"), "boundary_degree");
  const json& bounds = field(j, "bounds");
  s.B = small(field(bounds, "B"), "B");
  s.M = small(field(bounds, "M"), "M");
  const json& model = field(j, "model");
  if (model.contains("rational")) {
    s.model = ModelKind::Rational;
    for (const auto& f : model.at("rational")) s.maps.push_back(parse_map(f));
  } else if (model.contains("plane")) {
    s.model = ModelKind::Plane;
    const json& pl = model.at("plane");
    s.H = parse_bipoly(field(pl, "H"));
    for (const auto& f : field(pl, "functions")) s.functions.push_back(parse_function(f));
  } else {
    bad("model must be 'rational' or 'plane'");
  }
  validate(s);
  return s;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::InvalidInput, path + ": " + e.what());
  }
}

TorusCurveSpec read_spec(const std::string& path) {
  try {
    return parse_spec(read_json(path));
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidInput, path + ": " + e.what());
  }
}

json spec_json(const TorusCurveSpec& s) {
  json j{{"prime", int_json(s.prime)},
         {"precision", s.precision},
         {"genus", s.genus},
         {"boundary_degree", s.boundary_degree},
         {"bounds", {{"B", s.B}, {"M", s.M}}}};
  if (s.model == ModelKind::Rational) {
    json fs = json::array();
    for (const auto& f : s.maps) fs.push_back({{"num", upoly_json(f.num)}, {"den", upoly_json(f.den)}});
    j["model"] = {{"rational", fs}};
  } else {
    json fs = json::array();
    for (const auto& f : s.functions) fs.push_back({{"num", bipoly_json(f.num)}, {"den", bipoly_json(f.den)}});
    j["model"] = {{"plane", {{"H", bipoly_json(s.H)}, {"functions", fs}}}};
  }
  return j;
}

}  // namespace tori::io
