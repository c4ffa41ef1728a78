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
// Finite slices of B(inf) and the Kostant partition function.

#ifndef BICRYSTAL_ENUMERATE_HPP
#define BICRYSTAL_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "bicrystal/bicrystal.hpp"

namespace bicrystal {

/// Every nonnegative lattice point with coordinate sum at most `depth`,
/// members or not, in a fixed order.
inline void for_each_point(const CartanType& cartan, int depth,
                           const std::function<void(const Element&)>& visit) {
    const auto domain = index_domain(cartan);
    Element b(cartan);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
        if (k == domain.size()) {
            visit(b);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            b.set(domain[k].s, domain[k].t, v);
            rec(k + 1, left - v);
        }
        b.set(domain[k].s, domain[k].t, 0);
    };
    rec(0, depth);
}

/// Members of height <= depth found by scanning the lattice under the chains.
inline std::vector<Element> enumerate_scan(const CartanType& cartan, int depth) {
    if (depth < 0) throw invalid_input("depth must be nonnegative");
    std::vector<Element> out;
    for_each_point(cartan, depth, [&out](const Element& b) {
        if (is_member_chains(b)) out.push_back(b);
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Members of height <= depth reached from 1 by the lowering operators f_i.
inline std::vector<Element> enumerate_bfs(const CartanType& cartan, int depth, bool star = false) {
    if (depth < 0) throw invalid_input("depth must be nonnegative");
    std::set<Element> seen{Element(cartan)};
    std::deque<Element> queue{Element(cartan)};
    while (!queue.empty()) {
        const Element b = queue.front();
        queue.pop_front();
        if (b.height() >= depth) continue;
        for (int i = 1; i <= cartan.rank(); ++i) {
            Element next = f(b, i, star);
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

/// Members of weight -mu, mu given in simple-root coordinates.
inline std::vector<Element> enumerate_weight(const CartanType& cartan, const std::vector<int>& mu) {
    if (static_cast<int>(mu.size()) != cartan.rank()) throw invalid_input("weight has wrong length");
    int height = 0;
    for (int m : mu) {
        if (m < 0) throw invalid_input("weight must be nonnegative in simple-root coordinates");
        height += m;
    }
    Weight target(mu.size());
    for (std::size_t k = 0; k < mu.size(); ++k) target[k] = -mu[k];
    std::vector<Element> out;
    for (const Element& b : enumerate_scan(cartan, height)) {
        if (weight(b) == target) out.push_back(b);
    }
    return out;
}

/// Number of multisets of positive roots summing to mu.
inline std::int64_t kostant_count(const CartanType& cartan, const std::vector<int>& mu) {
    if (static_cast<int>(mu.size()) != cartan.rank()) throw invalid_input("weight has wrong length");
    for (int m : mu) {
        if (m < 0) throw invalid_input("weight must be nonnegative in simple-root coordinates");
    }
    const auto roots = positive_roots(cartan);
    std::map<std::pair<std::size_t, std::vector<int>>, std::int64_t> memo;
    std::function<std::int64_t(std::size_t, const std::vector<int>&)> count =
        [&](std::size_t k, const std::vector<int>& rest) -> std::int64_t {
        if (k == roots.size()) {
            for (int v : rest) {
                if (v != 0) return 0;
            }
            return 1;
        }
        auto key = std::make_pair(k, rest);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::int64_t total = 0;
        std::vector<int> cur = rest;
        while (true) {
            total += count(k + 1, cur);
            bool ok = true;
            for (std::size_t t = 0; t < cur.size(); ++t) {
                cur[t] -= roots[k][t];
                if (cur[t] < 0) ok = false;
            }
            if (!ok) break;
        }
        memo.emplace(std::move(key), total);
        return total;
    };
    return count(0, mu);
}

/// All nonnegative simple-root vectors of height <= depth.
inline std::vector<std::vector<int>> weights_up_to(const CartanType& cartan, int depth) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(cartan.rank()), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
        if (k == cur.size()) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[k] = v;
            rec(k + 1, left - v);
        }
        cur[k] = 0;
    };
    rec(0, depth);
    return out;
}

}  // namespace bicrystal

#endif  // BICRYSTAL_ENUMERATE_HPP
