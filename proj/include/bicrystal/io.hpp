/* Copyright 2026 The bicrystal Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// JSON encodings. Elements are {"cartan": "A3", "entries": [[s, t, v], ...]};
// a "tuple" array in canonical order is accepted instead of "entries".
// Extended elements carry "slots": {"k": entries}.
//
// Needs nlohmann/json on the include path.

#ifndef BICRYSTAL_IO_HPP
#define BICRYSTAL_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "bicrystal/extended.hpp"
#include "bicrystal/verify.hpp"

namespace bicrystal {

using json = nlohmann::json;

namespace detail {

inline json entries_json(const Element& b) {
    json out = json::array();
    for (const Coord& c : index_domain(b.cartan())) {
        if (b(c) != 0) out.push_back({c.s, c.t, b(c)});
    }
    return out;
}

inline Element entries_from(const CartanType& cartan, const json& entries) {
    if (!entries.is_array()) throw invalid_input("\"entries\" must be an array of [s, t, value]");
    std::vector<std::pair<Coord, int>> list;
    for (const json& e : entries) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
            !e[2].is_number_integer()) {
            throw invalid_input("bad entry " + e.dump() + ", expected [s, t, value]");
        }
        list.push_back({{e[0].get<int>(), e[1].get<int>()}, e[2].get<int>()});
    }
    return make_element(cartan, list);
}

inline CartanType cartan_from(const json& j) {
    if (!j.is_object() || !j.contains("cartan") || !j["cartan"].is_string()) {
        throw invalid_input("missing \"cartan\" string");
    }
    return CartanType::parse(j["cartan"].get<std::string>());
}

}  // namespace detail

inline json to_json(const Element& b) {
    return {{"cartan", b.cartan().name()}, {"entries", detail::entries_json(b)}, {"tuple", b.tuple()}};
}

inline Element element_from_json(const json& j) {
    const CartanType cartan = detail::cartan_from(j);
    if (j.contains("entries")) return detail::entries_from(cartan, j["entries"]);
    if (j.contains("tuple")) {
        if (!j["tuple"].is_array()) throw invalid_input("\"tuple\" must be an array");
        std::vector<int> values;
        for (const json& v : j["tuple"]) {
            if (!v.is_number_integer()) throw invalid_input("tuple entries must be integers");
            values.push_back(v.get<int>());
        }
        return from_tuple(cartan, values);
    }
    throw invalid_input("element needs \"entries\" or \"tuple\"");
}

inline json to_json(const ExtendedElement& bb) {
    json slots = json::object();
    for (const auto& [k, b] : bb.slots()) slots[std::to_string(k)] = detail::entries_json(b);
    return {{"cartan", bb.cartan().name()}, {"slots", slots}};
}

inline ExtendedElement extended_from_json(const json& j) {
    const CartanType cartan = detail::cartan_from(j);
    if (!j.contains("slots") || !j["slots"].is_object()) throw invalid_input("missing \"slots\" object");
    ExtendedElement out(cartan);
    for (const auto& [key, entries] : j["slots"].items()) {
        int k = 0;
        std::size_t used = 0;
        try {
            k = std::stoi(key, &used);
        } catch (const std::exception&) {
            throw invalid_input("slot key '" + key + "' is not an integer");
        }
        if (used != key.size()) throw invalid_input("slot key '" + key + "' is not an integer");
        out.set(k, detail::entries_from(cartan, entries));
    }
    return out;
}

inline json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        throw invalid_input(std::string("malformed JSON: ") + err.what());
    }
}

/// Report with at most `limit` violations listed; the count is always exact.
inline json to_json(const SuiteReport& r, std::size_t limit = 50) {
    json v = json::array();
    for (std::size_t k = 0; k < r.violations.size() && k < limit; ++k) {
        const Violation& x = r.violations[k];
        v.push_back({{"condition", x.condition}, {"witness", x.witness.to_string()}, {"detail", x.detail}});
    }
    return {{"suite", r.name},   {"cartan", r.cartan}, {"depth", r.depth},
            {"seed", r.seed},    {"cases", r.cases},   {"passed", r.passed()},
            {"violation_count", r.violations.size()},  {"violations", v}};
}

}  // namespace bicrystal

#endif  // BICRYSTAL_IO_HPP
