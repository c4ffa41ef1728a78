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
// Truncated crystal graphs with DOT and JSON export.

#ifndef BICRYSTAL_GRAPH_HPP
#define BICRYSTAL_GRAPH_HPP

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bicrystal/enumerate.hpp"
#include "bicrystal/io.hpp"

namespace bicrystal {

struct GraphEdge {
    std::string from;
    std::string to;
    int node = 0;
    bool star = false;
    friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

struct GraphSlice {
    std::string cartan;
    std::vector<std::string> vertices;  ///< canonical ids, sorted
    std::vector<GraphEdge> edges;       ///< sorted
    friend bool operator==(const GraphSlice&, const GraphSlice&) = default;
};

/// "2,4,0,5,1,3": the canonical tuple without parentheses.
inline std::string vertex_id(const Element& b) {
    const std::string s = b.to_string();
    return s.substr(1, s.size() - 2);
}

enum class EdgeSet { usual, star, both };

/// Vertices are the members of height <= depth; an edge u -> v labelled i
/// (or i*) is kept when f_i(u) = v and v is in the slice.
inline GraphSlice build_graph(const CartanType& cartan, int depth, EdgeSet which) {
    GraphSlice g{cartan.name(), {}, {}};
    const auto members = enumerate_scan(cartan, depth);
    for (const Element& b : members) g.vertices.push_back(vertex_id(b));
    for (const Element& b : members) {
        if (b.height() >= depth) continue;
        for (int i = 1; i <= cartan.rank(); ++i) {
            for (bool star : {false, true}) {
                if (star && which == EdgeSet::usual) continue;
                if (!star && which == EdgeSet::star) continue;
                g.edges.push_back({vertex_id(b), vertex_id(f(b, i, star)), i, star});
            }
        }
    }
    std::sort(g.vertices.begin(), g.vertices.end());
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

inline std::string to_dot(const GraphSlice& g) {
    std::ostringstream os;
    os << "digraph \"" << g.cartan << "\" {\n";
    for (const auto& v : g.vertices) os << "  \"" << v << "\";\n";
    for (const auto& e : g.edges) {
        os << "  \"" << e.from << "\" -> \"" << e.to << "\" [label=\"" << e.node << (e.star ? "*" : "") << "\"";
        if (e.star) os << ", style=dashed";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

/// Reads back the subset of DOT written by to_dot.
inline GraphSlice parse_dot(const std::string& text) {
    static const std::regex header(R"re(^\s*digraph\s+"([^"]*)"\s*\{\s*$)re");
    static const std::regex vertex(R"re(^\s*"([^"]*)"\s*;\s*$)re");
    static const std::regex edge(R"re(^\s*"([^"]*)"\s*->\s*"([^"]*)"\s*\[label="(\d+)(\*?)"[^\]]*\]\s*;\s*$)re");
    GraphSlice g;
    bool opened = false, closed = false;
    std::istringstream in(text);
    std::string line;
    std::smatch m;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!opened) {
            if (!std::regex_match(line, m, header)) throw invalid_input("DOT: expected digraph header");
            g.cartan = m[1];
            opened = true;
        } else if (std::regex_match(line, m, edge)) {
            g.edges.push_back({m[1], m[2], std::stoi(m[3]), m[4] == "*"});
        } else if (std::regex_match(line, m, vertex)) {
            g.vertices.push_back(m[1]);
        } else if (line.find('}') != std::string::npos) {
            closed = true;
            break;
        } else {
            throw invalid_input("DOT: unreadable line '" + line + "'");
        }
    }
    if (!closed) throw invalid_input("DOT: missing closing brace");
    std::sort(g.vertices.begin(), g.vertices.end());
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

inline json to_json(const GraphSlice& g) {
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"i", e.node}, {"star", e.star}});
    return {{"cartan", g.cartan}, {"vertices", g.vertices}, {"edges", edges}};
}

inline GraphSlice graph_from_json(const json& j) {
    try {
        GraphSlice g;
        g.cartan = j.at("cartan").get<std::string>();
        g.vertices = j.at("vertices").get<std::vector<std::string>>();
        for (const json& e : j.at("edges")) {
            g.edges.push_back({e.at("from").get<std::string>(), e.at("to").get<std::string>(), e.at("i").get<int>(),
                               e.at("star").get<bool>()});
        }
        std::sort(g.vertices.begin(), g.vertices.end());
        std::sort(g.edges.begin(), g.edges.end());
        return g;
    } catch (const json::exception& err) {
        throw invalid_input(std::string("bad graph JSON: ") + err.what());
    }
}

}  // namespace bicrystal

#endif  // BICRYSTAL_GRAPH_HPP
