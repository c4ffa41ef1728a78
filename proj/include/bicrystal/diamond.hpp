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
// Sliding diamonds: a planar layout of the coordinates and weighted diamond
// sums, evaluated without going through the linear-form code in tableaux.hpp.

#ifndef BICRYSTAL_DIAMOND_HPP
#define BICRYSTAL_DIAMOND_HPP

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bicrystal/cartan.hpp"
#include "bicrystal/lattice.hpp"

namespace bicrystal {

struct Point {
    int x = 0;
    int y = 0;
    friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

using Configuration = std::map<Coord, Point>;

inline Configuration configuration(const CartanType& cartan) {
    Configuration out;
    const int n = cartan.rank();
    for (const Coord& c : index_domain(cartan)) {
        if (cartan.family() == Family::D && c.t == n) {
            out[c] = {2 * c.s + n - 4, n - 2};
        } else {
            out[c] = {2 * c.s + c.t - 3, c.t};
        }
    }
    return out;
}

struct Diamond {
    Coord center;
    bool star = false;
    std::vector<std::pair<Coord, int>> members;
};

/// Members are b_{s,t} and b_{s+1,t} plus the neighbours of t in the Dynkin
/// diagram, on row s above t and row s+1 below t (shifted up one row for the
/// star diamond). Coefficients are 1 on column t and <h_t, alpha_v> elsewhere.
inline Diamond diamond(const CartanType& cartan, int s, int t, bool star) {
    if (!cartan.in_domain(s, t)) {
        throw invalid_input("diamond centre (" + std::to_string(s) + "," + std::to_string(t) +
                            ") is outside the index domain");
    }
    Diamond d{{s, t}, star, {}};
    const int top = star ? s - 1 : s;
    const int bottom = top + 1;
    auto push = [&](int u, int v, int coeff) {
        if (cartan.in_domain(u, v)) d.members.push_back({{u, v}, coeff});
    };
    push(top, t, 1);
    push(bottom, t, 1);
    for (int k = 1; k <= cartan.rank(); ++k) {
        if (k == t || cartan.pairing_unchecked(k, t) == 0) continue;
        push(k > t ? top : bottom, k, cartan.pairing_unchecked(t, k));
    }
    return d;
}

inline int diamond_sum(const Element& b, int s, int t, bool star) {
    int total = 0;
    for (const auto& [c, coeff] : diamond(b.cartan(), s, t, star).members) total += coeff * b(c);
    return total;
}

/// Places labelled points on a character grid; highlighted points are bracketed.
inline std::string render_points(const std::map<Point, std::pair<std::string, bool>>& points) {
    if (points.empty()) return "";
    int xmin = points.begin()->first.x, xmax = xmin, ymin = points.begin()->first.y, ymax = ymin;
    std::size_t width = 1;
    for (const auto& [p, label] : points) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
        width = std::max(width, label.first.size() + 2);
    }
    std::ostringstream os;
    for (int y = ymax; y >= ymin; --y) {
        std::string line;
        for (int x = xmin; x <= xmax; ++x) {
            auto it = points.find({x, y});
            std::string cell;
            if (it != points.end()) {
                const auto& [label, hot] = it->second;
                cell = hot ? "[" + label + "]" : " " + label + " ";
            }
            cell.resize(width, ' ');
            line += cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

/// The element on its configuration grid, with one diamond bracketed.
inline std::string render_diamond(const Element& b, int s, int t, bool star) {
    const Diamond d = diamond(b.cartan(), s, t, star);
    std::set<Coord> hot;
    for (const auto& m : d.members) hot.insert(m.first);
    std::map<Point, std::pair<std::string, bool>> points;
    for (const auto& [c, p] : configuration(b.cartan())) {
        points[p] = {std::to_string(b(c)), hot.count(c) > 0};
    }
    return render_points(points);
}

}  // namespace bicrystal

#endif  // BICRYSTAL_DIAMOND_HPP
