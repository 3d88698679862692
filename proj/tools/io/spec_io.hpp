#ifndef TORI_TOOLS_SPEC_IO_HPP
#define TORI_TOOLS_SPEC_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "tori/pipeline.hpp"

namespace tori::io {

using json = nlohmann::ordered_json;

// Integers are JSON numbers or decimal strings; rationals are "a/b" strings.
Int parse_int(const json& j);
Rat parse_rat(const json& j);
json int_json(const Int& a);

// Univariate terms [[e, c], ...] and bivariate terms [[ex, ey, c], ...].
zx::ZX parse_upoly(const json& j);
ZPoly2 parse_bipoly(const json& j);
json upoly_json(const zx::ZX& f);
json bipoly_json(const ZPoly2& f);

TorusCurveSpec parse_spec(const json& j);
TorusCurveSpec read_spec(const std::string& path);
json spec_json(const TorusCurveSpec& s);

json read_json(const std::string& path);

}  // namespace tori::io

#endif  // TORI_TOOLS_SPEC_IO_HPP
