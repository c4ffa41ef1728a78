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
// Type A: PBW (Lusztig) data along the convex order of (s1)(s2 s1)(s3 s2 s1)...
// and the polyhedral coordinates.

#ifndef BICRYSTAL_PBW_HPP
#define BICRYSTAL_PBW_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bicrystal/extended.hpp"
#include "bicrystal/lattice.hpp"

namespace bicrystal {

class PbwDatum {
public:
    explicit PbwDatum(CartanType cartan) : cartan_(cartan) {
        for (const PositiveRoot& r : convex_order(cartan)) c_[r] = 0;
    }

    const CartanType& cartan() const noexcept { return cartan_; }

    int operator()(int i, int j) const {
        auto it = c_.find({i, j});
        if (it == c_.end()) throw invalid_input("no root [" + std::to_string(i) + "," + std::to_string(j) + "]");
        return it->second;
    }

    void set(int i, int j, int value) {
        auto it = c_.find({i, j});
        if (it == c_.end()) throw invalid_input("no root [" + std::to_string(i) + "," + std::to_string(j) + "]");
        if (value < 0) throw invalid_input("negative PBW exponent");
        it->second = value;
    }

    /// Exponents in reverse convex order (c_l, ..., c_1), matching to_string.
    std::vector<int> tuple() const {
        std::vector<int> out;
        const auto order = convex_order(cartan_);
        for (auto it = order.rbegin(); it != order.rend(); ++it) out.push_back(c_.at(*it));
        return out;
    }

    static PbwDatum from_tuple(const CartanType& cartan, const std::vector<int>& values) {
        PbwDatum d(cartan);
        const auto order = convex_order(cartan);
        if (values.size() != order.size()) {
            throw invalid_input("expected " + std::to_string(order.size()) + " PBW exponents, got " +
                                std::to_string(values.size()));
        }
        for (std::size_t k = 0; k < order.size(); ++k) {
            d.set(order[order.size() - 1 - k].first, order[order.size() - 1 - k].last, values[k]);
        }
        return d;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        const auto t = tuple();
        for (std::size_t k = 0; k < t.size(); ++k) os << (k ? "," : "") << t[k];
        os << ')';
        return os.str();
    }

    friend bool operator==(const PbwDatum&, const PbwDatum&) = default;

private:
    CartanType cartan_;
    std::map<PositiveRoot, int> c_;
};

/// b_{i,j} = sum_{t=1}^{j} c_{[t, i+j-1]}.
inline Element pbw_to_polyhedral(const PbwDatum& c) {
    const CartanType& cartan = c.cartan();
    Element b(cartan);
    for (const Coord& x : index_domain(cartan)) {
        int v = 0;
        for (int t = 1; t <= x.t; ++t) v += c(t, x.s + x.t - 1);
        b.set(x.s, x.t, v);
    }
    if (!is_member_chains(b)) throw invariant_error("PBW image is not a member: " + b.to_string());
    return b;
}

/// c_{[i,j]} = b_{j-i+1,i} - b_{j-i+2,i-1}, with b_{k,0} = 0.
inline PbwDatum polyhedral_to_pbw(const Element& b) {
    if (b.cartan().family() != Family::A) {
        throw invalid_input("PBW conversion is only provided for type A, got " + b.cartan().name());
    }
    require_member(b);
    PbwDatum c(b.cartan());
    for (const PositiveRoot& r : convex_order(b.cartan())) {
        const int v = b(r.last - r.first + 1, r.first) - b(r.last - r.first + 2, r.first - 1);
        if (v < 0) throw invariant_error("negative PBW exponent from a member");
        c.set(r.first, r.last, v);
    }
    return c;
}

inline ExtendedElement extended_pbw_to_polyhedral(const CartanType& cartan,
                                                  const std::map<int, PbwDatum>& data) {
    ExtendedElement out(cartan);
    for (const auto& [k, c] : data) out.set(k, pbw_to_polyhedral(c));
    return out;
}

inline std::map<int, PbwDatum> extended_polyhedral_to_pbw(const ExtendedElement& bb) {
    std::map<int, PbwDatum> out;
    for (const auto& [k, b] : bb.slots()) out.emplace(k, polyhedral_to_pbw(b));
    return out;
}

}  // namespace bicrystal

#endif  // BICRYSTAL_PBW_HPP
