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
// Root-system data for the finite types A_n, B_n and D_n.

#ifndef BICRYSTAL_CARTAN_HPP
#define BICRYSTAL_CARTAN_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bicrystal {

/// Malformed user input: bad type strings, out-of-range indices, negative coordinates.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A result that the combinatorics guarantees could not be produced. Always a bug.
class invariant_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class Family { A, B, D };

/// Position of a coordinate b_{s,t}: s is the repetition count along the fixed
/// reduced sequence, t the simple-root label.
struct Coord {
    int s = 0;
    int t = 0;
    friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
};

class CartanType {
public:
    CartanType(Family family, int rank) : family_(family), rank_(rank) {
        const int minimum = family == Family::A ? 1 : family == Family::B ? 2 : 4;
        if (rank < minimum) {
            throw invalid_input("rank " + std::to_string(rank) + " is not supported for type " +
                                std::string(1, letter(family)) + " (need n >= " +
                                std::to_string(minimum) + ")");
        }
    }

    /// Parses "A3", "B2", "D4".
    static CartanType parse(std::string_view text) {
        if (text.size() < 2) throw invalid_input("bad Cartan type '" + std::string(text) + "'");
        Family family;
        switch (text.front()) {
            case 'A': case 'a': family = Family::A; break;
            case 'B': case 'b': family = Family::B; break;
            case 'D': case 'd': family = Family::D; break;
            default: throw invalid_input("unsupported Cartan family in '" + std::string(text) + "'");
        }
        int rank = 0;
        for (char c : text.substr(1)) {
            if (c < '0' || c > '9') throw invalid_input("bad Cartan rank in '" + std::string(text) + "'");
            rank = rank * 10 + (c - '0');
            if (rank > 64) throw invalid_input("Cartan rank too large in '" + std::string(text) + "'");
        }
        return CartanType(family, rank);
    }

    Family family() const noexcept { return family_; }
    int rank() const noexcept { return rank_; }

    std::string name() const { return std::string(1, letter(family_)) + std::to_string(rank_); }

    /// <h_i, alpha_j>; 1-based indices.
    int pairing(int i, int j) const {
        check_node(i);
        check_node(j);
        return pairing_unchecked(i, j);
    }

    int pairing_unchecked(int i, int j) const noexcept {
        if (i == j) return 2;
        const int n = rank_;
        switch (family_) {
            case Family::A:
                return (i - j == 1 || j - i == 1) ? -1 : 0;
            case Family::B:
                if (i == n && j == n - 1) return -2;
                return (i - j == 1 || j - i == 1) ? -1 : 0;
            case Family::D: {
                // chain 1 - 2 - ... - (n-2), with n-1 and n both attached to n-2
                auto adjacent = [n](int a, int b) {
                    if (a > b) std::swap(a, b);
                    if (b <= n - 2) return b - a == 1;
                    return a == n - 2 && (b == n - 1 || b == n);
                };
                return adjacent(i, j) ? -1 : 0;
            }
        }
        return 0;
    }

    void check_node(int i) const {
        if (i < 1 || i > rank_) {
            throw invalid_input("node " + std::to_string(i) + " out of range for " + name());
        }
    }

    /// Largest s with a non-trivial coordinate b_{s,t}.
    int max_row() const noexcept { return family_ == Family::D ? rank_ - 1 : rank_; }

    /// Membership of (s,t) in the index domain; coordinates outside it are identically zero.
    bool in_domain(int s, int t) const noexcept {
        if (t < 1 || t > rank_ || s < 1) return false;
        switch (family_) {
            case Family::A: return s + t <= rank_ + 1;
            case Family::B: return s <= rank_;
            case Family::D: return s <= rank_ - 1;
        }
        return false;
    }
    bool in_domain(Coord c) const noexcept { return in_domain(c.s, c.t); }

    std::size_t positive_root_count() const noexcept {
        const auto n = static_cast<std::size_t>(rank_);
        switch (family_) {
            case Family::A: return n * (n + 1) / 2;
            case Family::B: return n * n;
            case Family::D: return n * (n - 1);
        }
        return 0;
    }

    friend bool operator==(const CartanType&, const CartanType&) = default;

private:
    static char letter(Family f) noexcept {
        return f == Family::A ? 'A' : f == Family::B ? 'B' : 'D';
    }

    Family family_;
    int rank_;
};

/// The index domain in canonical order: s descending, then t descending. This is
/// the order tuples are written in, e.g. (b_{3,1}, b_{2,2}, b_{2,1}, b_{1,3}, b_{1,2}, b_{1,1}).
inline std::vector<Coord> index_domain(const CartanType& cartan) {
    std::vector<Coord> out;
    out.reserve(cartan.positive_root_count());
    for (int s = cartan.max_row(); s >= 1; --s) {
        for (int t = cartan.rank(); t >= 1; --t) {
            if (cartan.in_domain(s, t)) out.push_back({s, t});
        }
    }
    return out;
}

/// alpha_i + ... + alpha_j in type A.
struct PositiveRoot {
    int first = 1;
    int last = 1;
    friend constexpr auto operator<=>(const PositiveRoot&, const PositiveRoot&) = default;
};

/// Convex order induced by w0 = (s1)(s2 s1)(s3 s2 s1)...: intervals grouped by
/// increasing right end, increasing left end inside a group.
inline std::vector<PositiveRoot> convex_order(const CartanType& cartan) {
    if (cartan.family() != Family::A) {
        throw invalid_input("convex order is only provided for type A, got " + cartan.name());
    }
    std::vector<PositiveRoot> out;
    for (int j = 1; j <= cartan.rank(); ++j) {
        for (int i = 1; i <= j; ++i) out.push_back({i, j});
    }
    return out;
}

/// Positive roots as simple-root coefficient vectors, generated by root strings
/// from the Cartan matrix alone. Used as an oracle independent of the crystal.
inline std::vector<std::vector<int>> positive_roots(const CartanType& cartan) {
    const int n = cartan.rank();
    std::vector<std::vector<int>> roots;
    for (int i = 0; i < n; ++i) {
        std::vector<int> r(static_cast<std::size_t>(n), 0);
        r[static_cast<std::size_t>(i)] = 1;
        roots.push_back(r);
    }
    auto is_root = [&roots](const std::vector<int>& v) {
        for (const auto& r : roots) if (r == v) return true;
        return false;
    };
    for (std::size_t head = 0; head < roots.size(); ++head) {
        for (int i = 1; i <= n; ++i) {
            const std::vector<int> beta = roots[head];
            // p: largest k with beta - k alpha_i a root
            int p = 0;
            std::vector<int> down = beta;
            while (true) {
                down[static_cast<std::size_t>(i - 1)] -= 1;
                if (down[static_cast<std::size_t>(i - 1)] < 0 || !is_root(down)) break;
                ++p;
            }
            int pair = 0;
            for (int j = 1; j <= n; ++j) pair += beta[static_cast<std::size_t>(j - 1)] * cartan.pairing_unchecked(i, j);
            const int q = p - pair;
            if (q > 0) {
                std::vector<int> up = beta;
                up[static_cast<std::size_t>(i - 1)] += 1;
                if (!is_root(up)) roots.push_back(up);
            }
        }
    }
    return roots;
}

}  // namespace bicrystal

#endif  // BICRYSTAL_CARTAN_HPP
