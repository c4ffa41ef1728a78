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
// The usual and star crystal structures on the lattice points.

#ifndef BICRYSTAL_BICRYSTAL_HPP
#define BICRYSTAL_BICRYSTAL_HPP

#include <limits>
#include <optional>
#include <vector>

#include "bicrystal/lattice.hpp"
#include "bicrystal/tableaux.hpp"

namespace bicrystal {

struct SelectorResult {
    int value = 0;
    Partition argmin;  ///< intersection of all maximizers
    Partition argmax;  ///< union of all maximizers
};

inline void require_member(const Element& b) {
    if (!is_member_chains(b)) throw invalid_input("not an element of B(inf): " + b.to_string());
}

inline SelectorResult select(const Element& b, int i, bool star) {
    const PartitionFamily& fam = partition_family(b.cartan(), i, star);
    int best = std::numeric_limits<int>::min();
    std::vector<std::size_t> winners;
    for (std::size_t k = 0; k < fam.members.size(); ++k) {
        const int v = fam.forms[k].eval(b);
        if (v > best) {
            best = v;
            winners.clear();
        }
        if (v == best) winners.push_back(k);
    }
    SelectorResult out{best, fam.members[winners.front()], fam.members[winners.front()]};
    for (std::size_t k : winners) {
        out.argmin = out.argmin & fam.members[k];
        out.argmax = out.argmax | fam.members[k];
    }
    return out;
}

inline int epsilon(const Element& b, int i) { return select(b, i, false).value; }
inline int epsilon_star(const Element& b, int i) { return select(b, i, true).value; }

inline int phi(const Element& b, int i, bool star = false) {
    const int eps = star ? epsilon_star(b, i) : epsilon(b, i);
    return eps + pair_with(b.cartan(), i, weight(b));
}

inline int jump(const Element& b, int i) {
    return epsilon(b, i) + epsilon_star(b, i) + pair_with(b.cartan(), i, weight(b));
}

/// sum over the cells of lambda of v(I_T(cell)), with v(a,c) = e_{a,c} - e_{a-1,c}.
inline void apply_moves(Element& b, const Tableau& T, const Partition& lambda, int sign) {
    for (int r = 1; r <= lambda.length(); ++r) {
        for (int c = 1; c <= lambda.part(r); ++c) {
            const Coord idx = T.at(r, c).index;
            b.add(idx.s, idx.t, sign);
            b.add(idx.s - 1, idx.t, -sign);
        }
    }
}

namespace detail {

inline void require_result(const Element& out, const char* op) {
    if (!is_member_chains(out)) {
        throw invariant_error(std::string(op) + " left B(inf): " + out.to_string());
    }
}

}  // namespace detail

/// f_i (star = false) or f_i* (star = true). Total on members.
inline Element f(const Element& b, int i, bool star = false) {
    require_member(b);
    const SelectorResult sel = select(b, i, star);
    Element out = b;
    apply_moves(out, tableau(b.cartan(), i, star), sel.argmin, +1);
    detail::require_result(out, star ? "f*" : "f");
    return out;
}

/// e_i or e_i*; nullopt stands for the zero of the crystal.
inline std::optional<Element> e(const Element& b, int i, bool star = false) {
    require_member(b);
    const SelectorResult sel = select(b, i, star);
    if (sel.value <= 0) return std::nullopt;
    Element out = b;
    apply_moves(out, tableau(b.cartan(), i, star), sel.argmax, -1);
    detail::require_result(out, star ? "e*" : "e");
    return out;
}

/// Strict-addable and strict-removable nodes of a strict partition mu, with
/// addable nodes restricted to a bounding shape, and the shifted nodes
/// R'_p = (s_p, t_{p+1} + s_{p+1} - s_p), A'_q = (u_{q+1}, v_q + u_q - u_{q+1}).
struct StrictNodes {
    std::vector<Coord> removable;
    std::vector<Coord> addable;
    std::vector<Coord> removable_shifted;
    std::vector<Coord> addable_shifted;
};

inline StrictNodes strict_nodes(const Partition& mu, const Partition& shape) {
    StrictNodes out;
    for (int r = 1; r <= mu.length(); ++r) {
        const int p = mu.part(r);
        if (p - 1 > mu.part(r + 1) || (p == 1 && mu.part(r + 1) == 0)) out.removable.push_back({r, p});
    }
    for (int r = 1; r <= mu.length() + 1; ++r) {
        const int col = mu.part(r) + 1;
        const bool fits = r == 1 || mu.part(r - 1) > col;
        if (fits && shape.contains(r, col)) out.addable.push_back({r, col});
    }
    for (std::size_t p = 0; p + 1 < out.removable.size(); ++p) {
        const Coord a = out.removable[p];
        const Coord b = out.removable[p + 1];
        out.removable_shifted.push_back({a.s, b.t + (b.s - a.s)});
    }
    for (std::size_t q = 0; q + 1 < out.addable.size(); ++q) {
        const Coord a = out.addable[q];
        const Coord b = out.addable[q + 1];
        out.addable_shifted.push_back({b.s, a.t + (a.s - b.s)});
    }
    return out;
}

}  // namespace bicrystal

#endif  // BICRYSTAL_BICRYSTAL_HPP
