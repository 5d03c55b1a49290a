// Shared JSON vector and decomposition formats.
#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "jkl/decompose.hpp"
#include "jkl/module.hpp"

namespace jkl {

using Json = nlohmann::ordered_json;

inline Json rational_to_json(const Rational& q) {
    if (is_integer(q) && q.get_num().fits_slong_p())
        return Json(static_cast<int64_t>(q.get_num().get_si()));
    return Json(rat_to_string(q));
}

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw error("expected an integer or \"p/q\" string coefficient");
}

// {"module": "...", "coords": {"<basis name>": coeff, ...}} with coordinates
// in basis order, so printing is canonical and round-trips byte-identically.
inline Json element_to_json(const ModuleElement& e) {
    Json coords = Json::object();
    for (const auto& [o, c] : e.coords) coords[e.module->basis_name(o)] = rational_to_json(c);
    return Json{{"module", e.module->name()}, {"coords", coords}};
}

inline ModuleElement element_from_json(const Json& j, const ModulePtr& m) {
    if (!j.contains("coords")) throw error("element JSON needs a coords object");
    if (j.contains("module") && j["module"].get<std::string>() != m->name())
        throw error("element module \"" + j["module"].get<std::string>() +
                    "\" does not match expected \"" + m->name() + "\"");
    SparseVec coords;
    for (const auto& [name, val] : j["coords"].items())
        coords.emplace_back(m->ordinal_of_name(name), rational_from_json(val));
    sv_normalize(coords);
    return {m, std::move(coords)};
}

inline Json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return Json(static_cast<int64_t>(z.get_si()));
    return Json(z.get_str());
}

inline Json decomposition_to_json(const Decomposition& d) {
    Json out = Json::array();
    for (const auto& c : d) {
        out.push_back(Json{{"phi", c.phi},
                           {"lambda", c.lambda},
                           {"multiplicity", c.multiplicity},
                           {"dimension", integer_to_json(c.dimension)}});
    }
    return out;
}

}  // namespace jkl
