#pragma once

#include <json.hpp>

#include "ti/amplitude.hpp"
#include "ti/layout.hpp"

namespace ti {

using Json = nlohmann::ordered_json;

inline Json layout_json(const CodeLayout& lay) {
    Json j;
    j["distance"] = lay.distance;
    j["num_data"] = lay.num_data;
    auto supports = [&](const std::vector<BitWord>& stabs) {
        Json arr = Json::array();
        for (const BitWord& s : stabs) arr.push_back(to_indices(s, lay.num_data));
        return arr;
    };
    j["x_stabs"] = supports(lay.x_stabs);
    j["z_stabs"] = supports(lay.z_stabs);
    j["logical_z"] = to_indices(lay.logical_z, lay.num_data);
    j["logical_x"] = to_indices(lay.logical_x, lay.num_data);
    return j;
}

inline Json poly_json(const AmplitudePoly& p) {
    return Json{{"N", p.num_data()}, {"coeffs", p.coeffs()}};
}

inline Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

}  // namespace ti
