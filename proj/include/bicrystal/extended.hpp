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
// The extended crystal: Z-indexed families of elements, almost all equal to 1.

#ifndef BICRYSTAL_EXTENDED_HPP
#define BICRYSTAL_EXTENDED_HPP

#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bicrystal/bicrystal.hpp"
#include "bicrystal/diamond.hpp"

namespace bicrystal {

class ExtendedElement {
public:
    explicit ExtendedElement(CartanType cartan) : cartan_(cartan) {}

    const CartanType& cartan() const noexcept { return cartan_; }

    /// b^{(k)}; the highest weight element for slots never set.
    Element at(int k) const {
        auto it = slots_.find(k);
        return it == slots_.end() ? Element(cartan_) : it->second;
    }

    void set(int k, const Element& b) {
        if (!(b.cartan() == cartan_)) throw invalid_input("slot type mismatch");
        if (b.is_zero()) slots_.erase(k);
        else slots_.insert_or_assign(k, b);
    }

    /// Nontrivial slots only.
    const std::map<int, Element>& slots() const noexcept { return slots_; }

    std::string to_string() const {
        // highest slot first, 0 slot underlined as _(...)_
        std::ostringstream os;
        os << "(..., ";
        int hi = 1, lo = -1;
        if (!slots_.empty()) {
            hi = std::max(slots_.rbegin()->first + 1, 1);
            lo = std::min(slots_.begin()->first - 1, -1);
        }
        for (int k = hi; k >= lo; --k) {
            const Element b = at(k);
            const std::string body = b.is_zero() ? "1" : b.to_string();
            os << (k == 0 ? "_" + body + "_" : body) << ", ";
        }
        os << "...)";
        return os.str();
    }

    friend bool operator==(const ExtendedElement& a, const ExtendedElement& b) {
        return a.cartan_ == b.cartan_ && a.slots_ == b.slots_;
    }

private:
    CartanType cartan_;
    std::map<int, Element> slots_;
};

struct ExtendedLabel {
    Partition base;
    bool starred = false;

    std::string to_string() const { return base.to_string() + (starred ? "*" : ""); }
    friend bool operator==(const ExtendedLabel&, const ExtendedLabel&) = default;
};

/// Order on the extended family: unstarred below starred, unstarred by
/// containment, starred by reverse containment.
inline bool label_leq(const ExtendedLabel& a, const ExtendedLabel& b) {
    if (a.starred != b.starred) return !a.starred;
    return a.starred ? b.base.subset_of(a.base) : a.base.subset_of(b.base);
}

inline std::vector<ExtendedLabel> extended_family(const CartanType& cartan, int i) {
    std::vector<ExtendedLabel> out;
    for (const Partition& p : partition_family(cartan, i, false).members) out.push_back({p, false});
    for (const Partition& p : partition_family(cartan, i, true).members) out.push_back({p, true});
    return out;
}

inline int sigma_hat(const ExtendedElement& bb, int i, int k, const ExtendedLabel& g) {
    return g.starred ? gamma_star(bb.at(k + 1), i, g.base) : gamma(bb.at(k), i, g.base);
}

inline int eps_hat(const ExtendedElement& bb, int i, int k) {
    return epsilon(bb.at(k), i) - epsilon_star(bb.at(k + 1), i);
}

struct ExtendedSelector {
    int value = 0;
    ExtendedLabel least;     ///< m-hat
    ExtendedLabel greatest;  ///< M-hat
};

/// Max over the extended family with its least and greatest maximizers,
/// found directly in the poset.
inline ExtendedSelector select_hat(const ExtendedElement& bb, int i, int k) {
    const auto labels = extended_family(bb.cartan(), i);
    std::vector<int> values;
    int best = std::numeric_limits<int>::min();
    for (const auto& g : labels) {
        values.push_back(sigma_hat(bb, i, k, g));
        best = std::max(best, values.back());
    }
    std::vector<const ExtendedLabel*> winners;
    for (std::size_t q = 0; q < labels.size(); ++q) {
        if (values[q] == best) winners.push_back(&labels[q]);
    }
    auto extreme = [&winners](bool lowest) -> ExtendedLabel {
        for (const ExtendedLabel* cand : winners) {
            bool ok = true;
            for (const ExtendedLabel* other : winners) {
                if (!(lowest ? label_leq(*cand, *other) : label_leq(*other, *cand))) {
                    ok = false;
                    break;
                }
            }
            if (ok) return *cand;
        }
        throw invariant_error("maximizers of the extended family have no extreme element");
    };
    return {best, extreme(true), extreme(false)};
}

/// F-hat via the selector: an unstarred least maximizer adds its moves on slot
/// k, a starred one removes its moves on slot k+1 (the e* branch).
inline ExtendedElement F_hat(const ExtendedElement& bb, int i, int k) {
    const ExtendedSelector sel = select_hat(bb, i, k);
    ExtendedElement out = bb;
    const int slot = sel.least.starred ? k + 1 : k;
    Element b = bb.at(slot);
    require_member(b);
    apply_moves(b, tableau(bb.cartan(), i, sel.least.starred), sel.least.base,
                sel.least.starred ? -1 : +1);
    if (!is_member_chains(b)) throw invariant_error("F-hat left B(inf): " + b.to_string());
    out.set(slot, b);
    return out;
}

/// E-hat via the selector: an unstarred greatest maximizer removes its moves on
/// slot k, a starred one adds its moves on slot k+1 (the f* branch).
inline ExtendedElement E_hat(const ExtendedElement& bb, int i, int k) {
    const ExtendedSelector sel = select_hat(bb, i, k);
    ExtendedElement out = bb;
    const int slot = sel.greatest.starred ? k + 1 : k;
    Element b = bb.at(slot);
    require_member(b);
    apply_moves(b, tableau(bb.cartan(), i, sel.greatest.starred), sel.greatest.base,
                sel.greatest.starred ? +1 : -1);
    if (!is_member_chains(b)) throw invariant_error("E-hat left B(inf): " + b.to_string());
    out.set(slot, b);
    return out;
}

/// The same operators dispatched on the sign of eps-hat.
inline ExtendedElement F_hat_by_eps(const ExtendedElement& bb, int i, int k) {
    ExtendedElement out = bb;
    if (eps_hat(bb, i, k) >= 0) {
        out.set(k, f(bb.at(k), i, false));
    } else {
        auto r = e(bb.at(k + 1), i, true);
        if (!r) throw invariant_error("e* branch taken with eps* = 0");
        out.set(k + 1, *r);
    }
    return out;
}

inline ExtendedElement E_hat_by_eps(const ExtendedElement& bb, int i, int k) {
    ExtendedElement out = bb;
    if (eps_hat(bb, i, k) > 0) {
        auto r = e(bb.at(k), i, false);
        if (!r) throw invariant_error("e branch taken with eps = 0");
        out.set(k, *r);
    } else {
        out.set(k + 1, f(bb.at(k + 1), i, true));
    }
    return out;
}

/// sum_k (-1)^k wt(b^{(k)}).
inline Weight weight_hat(const ExtendedElement& bb) {
    Weight w(static_cast<std::size_t>(bb.cartan().rank()), 0);
    for (const auto& [k, b] : bb.slots()) {
        const Weight part = weight(b);
        const int sign = k % 2 == 0 ? 1 : -1;
        for (std::size_t t = 0; t < w.size(); ++t) w[t] += sign * part[t];
    }
    return w;
}

/// Type A layout of b^{(k)}_{s,t} for k in [kmin, kmax].
inline std::map<std::pair<int, Coord>, Point> extended_configuration(const CartanType& cartan,
                                                                     int kmin, int kmax) {
    if (cartan.family() != Family::A) {
        throw invalid_input("the extended layout is defined for type A only, got " + cartan.name());
    }
    const int n = cartan.rank();
    std::map<std::pair<int, Coord>, Point> out;
    for (int k = kmin; k <= kmax; ++k) {
        for (const Coord& c : index_domain(cartan)) {
            const int x = -c.s - 2 * c.t + 3 - k * n;
            const int y = k % 2 == 0 ? c.s : n - c.s + 2;
            out[{k, c}] = {x, y};
        }
    }
    return out;
}

/// Diamond sum read off the extended layout: values are placed on the plane
/// and the diamond's members are looked up through their placed points.
inline int extended_diamond_sum(const ExtendedElement& bb, int kmin, int kmax, int k, int s, int t,
                                bool star) {
    const auto layout = extended_configuration(bb.cartan(), kmin, kmax);
    std::map<Point, int> plane;
    for (const auto& [key, p] : layout) {
        if (!plane.emplace(p, bb.at(key.first)(key.second)).second) {
            throw invariant_error("extended layout is not injective");
        }
    }
    int total = 0;
    for (const auto& [c, coeff] : diamond(bb.cartan(), s, t, star).members) {
        total += coeff * plane.at(layout.at({k, c}));
    }
    return total;
}

}  // namespace bicrystal

#endif  // BICRYSTAL_EXTENDED_HPP
