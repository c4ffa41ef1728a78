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
// Named property suites over finite slices of B(inf).

#ifndef BICRYSTAL_VERIFY_HPP
#define BICRYSTAL_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bicrystal/diamond.hpp"
#include "bicrystal/enumerate.hpp"
#include "bicrystal/extended.hpp"
#include "bicrystal/lemmas.hpp"
#include "bicrystal/pbw.hpp"

namespace bicrystal {

struct SuiteReport {
    std::string name;
    std::string cartan;
    int depth = 0;
    std::uint64_t seed = 0;
    std::int64_t cases = 0;
    Violations violations;

    bool passed() const noexcept { return violations.empty(); }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"axioms",        "axioms_star", "bicrystal", "diamond_equiv",
                                                "membership_dual", "kostant",   "lemmas_A",  "lemmas_BD",
                                                "extended",        "pbw_roundtrip"};
    return names;
}

namespace detail {

using lemma::expect;

inline std::string node(int i, bool star) { return (star ? "f*" : "f") + std::to_string(i); }

/// Descend to 1 along the first lowering direction with positive eps.
inline bool reaches_top(Element b, bool star) {
    const int steps = b.height();
    for (int k = 0; k < steps && !b.is_zero(); ++k) {
        bool moved = false;
        for (int i = 1; i <= b.cartan().rank() && !moved; ++i) {
            if (auto up = e(b, i, star)) {
                b = *up;
                moved = true;
            }
        }
        if (!moved) return false;
    }
    return b.is_zero();
}

inline Weight shifted(Weight w, int i, int sign) {
    w[static_cast<std::size_t>(i - 1)] += sign;
    return w;
}

inline void crystal_axioms(const Element& b, bool star, Violations& out) {
    const CartanType& c = b.cartan();
    const Weight wt = weight(b);
    bool some_positive = false;
    for (int i = 1; i <= c.rank(); ++i) {
        const std::string tag = node(i, star);
        const int eps = star ? epsilon_star(b, i) : epsilon(b, i);
        const int ph = phi(b, i, star);
        expect(out, "eps_nonnegative", b, eps >= 0, tag);
        some_positive = some_positive || eps > 0;
        Element fb(c);
        try {
            fb = f(b, i, star);
        } catch (const invariant_error& err) {
            out.push_back({"closure", b, tag + " " + err.what()});
            continue;
        }
        std::optional<Element> eb;
        try {
            eb = e(b, i, star);
        } catch (const invariant_error& err) {
            out.push_back({"closure", b, "e" + tag.substr(1) + " " + err.what()});
            continue;
        }
        expect(out, "e_null_iff_eps_zero", b, eb.has_value() == (eps > 0), tag);
        const auto back = e(fb, i, star);
        expect(out, "inversion_ef", b, back && *back == b, tag);
        if (eb) expect(out, "inversion_fe", b, f(*eb, i, star) == b, tag);
        expect(out, "wt_f", b, weight(fb) == shifted(wt, i, -1), tag);
        const int eps_f = star ? epsilon_star(fb, i) : epsilon(fb, i);
        expect(out, "eps_f", b, eps_f == eps + 1, tag);
        expect(out, "phi_f", b, phi(fb, i, star) == ph - 1, tag);
        if (eb) {
            expect(out, "wt_e", b, weight(*eb) == shifted(wt, i, +1), tag);
            const int eps_e = star ? epsilon_star(*eb, i) : epsilon(*eb, i);
            expect(out, "eps_e", b, eps_e == eps - 1, tag);
            expect(out, "phi_e", b, phi(*eb, i, star) == ph + 1, tag);
        }
        // string length
        int len = 0;
        std::optional<Element> cur = b;
        while ((cur = e(*cur, i, star))) ++len;
        expect(out, "string_length", b, len == eps, tag + " length " + std::to_string(len));
    }
    expect(out, "highest_weight", b, b.is_zero() != some_positive, star ? "star" : "usual");
    expect(out, "reachability", b, reaches_top(b, star), star ? "star" : "usual");
}

inline void bicrystal_conditions(const Element& b, Violations& out) {
    const CartanType& c = b.cartan();
    const int n = c.rank();
    bool all_zero = true;
    for (int i = 1; i <= n; ++i) {
        const std::string tag = "i=" + std::to_string(i);
        const Element fu = f(b, i, false);
        const Element fs = f(b, i, true);
        expect(out, "c1_total", b, is_member_chains(fu) && is_member_chains(fs), tag);
        all_zero = all_zero && epsilon(b, i) == 0 && epsilon_star(b, i) == 0;
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            expect(out, "c3_commute", b, f(f(b, j, true), i, false) == f(fu, j, true),
                   tag + " j=" + std::to_string(j));
        }
        const int jp = jump(b, i);
        expect(out, "c4_jump_nonnegative", b, jp >= 0, tag + " jump " + std::to_string(jp));
        if (jp == 0) expect(out, "c5_jump_zero", b, fu == fs, tag);
        if (jp >= 1) {
            expect(out, "c6_eps_star_fixed", b, epsilon_star(fu, i) == epsilon_star(b, i), tag);
            expect(out, "c6_eps_fixed", b, epsilon(fs, i) == epsilon(b, i), tag);
        }
        if (jp >= 2) expect(out, "c7_commute_same", b, f(fu, i, true) == f(fs, i, false), tag);
    }
    expect(out, "c2_unique_highest", b, all_zero == b.is_zero(), "");
    expect(out, "reachability", b, reaches_top(b, false) && reaches_top(b, true), "");
}

inline void diamond_forms(const CartanType& c, Violations& out) {
    const Element one(c);
    for (const Coord& x : index_domain(c)) {
        for (bool star : {false, true}) {
            const LinearForm form = star ? partial_star_form(c, x.s, x.t) : partial_form(c, x.s, x.t);
            std::map<Coord, int> members;
            for (const auto& [u, coeff] : diamond(c, x.s, x.t, star).members) members[u] += coeff;
            std::erase_if(members, [](const auto& kv) { return kv.second == 0; });
            expect(out, "diamond_support", one, members == form.normalized(c),
                   std::string(star ? "d*" : "d") + "[" + std::to_string(x.s) + "," + std::to_string(x.t) + "]");
        }
    }
}

inline void diamond_values(const Element& b, Violations& out) {
    for (const Coord& x : index_domain(b.cartan())) {
        const std::string at = "[" + std::to_string(x.s) + "," + std::to_string(x.t) + "]";
        expect(out, "diamond_sum", b, diamond_sum(b, x.s, x.t, false) == partial(b, x.s, x.t), "d" + at);
        expect(out, "diamond_sum_star", b, diamond_sum(b, x.s, x.t, true) == partial_star(b, x.s, x.t), "d*" + at);
    }
}

/// Type-independent facts about the Sigma families.
inline void family_facts(const Element& b, int i, Violations& out) {
    const CartanType& c = b.cartan();
    const std::string tag = "i=" + std::to_string(i);
    const auto& fam = partition_family(c, i, true);
    for (std::size_t p = 0; p < fam.members.size(); ++p) {
        for (std::size_t q = p + 1; q < fam.members.size(); ++q) {
            const Partition& l = fam.members[p];
            const Partition& m = fam.members[q];
            const Partition lo = l & m, hi = l | m;
            if (!lo.is_strict() || !hi.is_strict()) {
                out.push_back({"family_lattice", b, tag + " " + l.to_string() + " " + m.to_string()});
                continue;
            }
            const int lhs = (lo.size() ? gamma_star(b, i, lo) : 0) + gamma_star(b, i, hi);
            expect(out, "inclusion_exclusion", b, lhs == gamma_star(b, i, l) + gamma_star(b, i, m),
                   tag + " " + l.to_string() + " " + m.to_string());
        }
    }
    const int width = lemma::usual_width(c, i);
    expect(out, "tail_column", b, partial(b, width, i) >= 0, tag);
}

inline bool is_spin_pair_exception(const CartanType& c, int i, int j) {
    return c.family() == Family::D && i == c.rank() && j == c.rank() - 1;
}

inline Element random_point(const CartanType& c, std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Element x(c);
    for (const Coord& u : index_domain(c)) x.set(u.s, u.t, dist(rng));
    return x;
}

inline void extended_checks(const ExtendedElement& bb, int i, int k, Violations& out) {
    const CartanType& c = bb.cartan();
    const Element key = bb.at(0);  // witness carried in the detail string
    const std::string tag = "(i,k)=(" + std::to_string(i) + "," + std::to_string(k) + ") " + bb.to_string();
    ExtendedElement F(c), E(c);
    try {
        F = F_hat(bb, i, k);
        E = E_hat(bb, i, k);
    } catch (const invariant_error& err) {
        out.push_back({"extended_closure", key, tag + " " + err.what()});
        return;
    }
    expect(out, "EF_identity", key, E_hat(F, i, k) == bb, tag);
    expect(out, "FE_identity", key, F_hat(E, i, k) == bb, tag);
    const int eps = eps_hat(bb, i, k);
    expect(out, "eps_hat_F", key, eps_hat(F, i, k) == eps + 1, tag);
    expect(out, "eps_hat_E", key, eps_hat(E, i, k) == eps - 1, tag);
    const int sign = (k % 2 == 0) ? 1 : -1;
    Weight w = weight_hat(bb);
    Weight wf = w, we = w;
    wf[static_cast<std::size_t>(i - 1)] -= sign;
    we[static_cast<std::size_t>(i - 1)] += sign;
    expect(out, "wt_hat_F", key, weight_hat(F) == wf, tag);
    expect(out, "wt_hat_E", key, weight_hat(E) == we, tag);
    expect(out, "dispatch_F", key, F == F_hat_by_eps(bb, i, k), tag);
    expect(out, "dispatch_E", key, E == E_hat_by_eps(bb, i, k), tag);
    const ExtendedSelector sel = select_hat(bb, i, k);
    expect(out, "selector_sign_F", key, sel.least.starred == (eps < 0), tag);
    expect(out, "selector_sign_E", key, sel.greatest.starred == (eps <= 0), tag);
    if (c.family() == Family::A) {
        for (const Coord& x : index_domain(c)) {
            const int got = extended_diamond_sum(bb, k - 1, k + 2, k, x.s, x.t, false);
            expect(out, "extended_diamond", key, got == partial(bb.at(k), x.s, x.t), tag);
        }
    }
}

}  // namespace detail

/// Runs one named suite over the members of height <= depth.
inline SuiteReport run_suite(const std::string& name, const CartanType& cartan, int depth,
                             std::uint64_t seed = 0) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw invalid_input("unknown suite '" + name + "'");
    }
    if (depth < 0) throw invalid_input("depth must be nonnegative");
    SuiteReport rep{name, cartan.name(), depth, seed, 0, {}};
    Violations& out = rep.violations;
    const int n = cartan.rank();
    const bool type_a = cartan.family() == Family::A;
    std::mt19937_64 rng(seed);
    std::vector<Element> members;
    if (name != "membership_dual") members = enumerate_scan(cartan, depth);

    if (name == "axioms" || name == "axioms_star") {
        const bool star = name == "axioms_star";
        for (const Element& b : members) {
            detail::crystal_axioms(b, star, out);
            rep.cases += n;
        }
        if (enumerate_bfs(cartan, depth, star) != members) {
            out.push_back({"bfs_equals_scan", Element(cartan), star ? "star" : "usual"});
        }
    } else if (name == "bicrystal") {
        for (const Element& b : members) {
            detail::bicrystal_conditions(b, out);
            rep.cases += n;
        }
    } else if (name == "diamond_equiv") {
        detail::diamond_forms(cartan, out);
        for (const Element& b : members) {
            detail::diamond_values(b, out);
            ++rep.cases;
        }
    } else if (name == "membership_dual") {
        auto compare = [&](const Element& x) {
            lemma::expect(out, "chains_vs_boxed", x, is_member_chains(x) == is_member_boxed(x), "");
            ++rep.cases;
        };
        for_each_point(cartan, depth, compare);
        for (int r = 0; r < 1000; ++r) compare(detail::random_point(cartan, rng, -1, 3));
    } else if (name == "kostant") {
        std::map<Weight, std::int64_t> sizes;
        for (const Element& b : members) ++sizes[weight(b)];
        for (const auto& mu : weights_up_to(cartan, depth)) {
            Weight key(mu.size());
            for (std::size_t t = 0; t < mu.size(); ++t) key[t] = -mu[t];
            const std::int64_t want = kostant_count(cartan, mu);
            const std::int64_t got = sizes.count(key) ? sizes.at(key) : 0;
            std::string at;
            for (int m : mu) at += std::to_string(m) + " ";
            lemma::expect(out, "kostant_count", Element(cartan), got == want,
                          "mu=" + at + "enumerated " + std::to_string(got) + " kostant " + std::to_string(want));
            ++rep.cases;
        }
        for (bool star : {false, true}) {
            if (enumerate_bfs(cartan, depth, star) != members) {
                out.push_back({"bfs_equals_scan", Element(cartan), star ? "star" : "usual"});
            }
        }
    } else if (name == "lemmas_A") {
        for (const Element& b : members) {
            for (int i = 1; i <= n; ++i) {
                lemma::jump_split(b, i, out);
                detail::family_facts(b, i, out);
                if (!lemma::is_spin(cartan, i)) {
                    lemma::star_shift_rows(b, i, out);
                    lemma::fixed_sigma_rows(b, i, out);
                    for (int j = 1; j <= n; ++j) {
                        if (j != i && !lemma::is_spin(cartan, j)) lemma::commutation_rows(b, i, j, out);
                    }
                }
                if (type_a) lemma::boxed_shift_A(b, i, out);
                ++rep.cases;
            }
        }
        if (type_a) {
            for (int r = 0; r < 200; ++r) {
                lemma::telescope_A(detail::random_point(cartan, rng, -5, 5), out);
                ++rep.cases;
            }
        }
    } else if (name == "lemmas_BD") {
        if (!type_a) {
            for (int r = 0; r < 200; ++r) {
                lemma::telescope_BD(detail::random_point(cartan, rng, -5, 5), out);
                ++rep.cases;
            }
            for (const Element& b : members) {
                for (int i = 1; i <= n; ++i) {
                    lemma::strict_node_formula(b, i, out);
                    if (lemma::is_spin(cartan, i)) lemma::fixed_sigma_spin(b, i, out);
                    for (int j = 1; j <= n; ++j) {
                        if (j == i) continue;
                        const bool si = lemma::is_spin(cartan, i), sj = lemma::is_spin(cartan, j);
                        if (!si && !sj) lemma::commutation_rows(b, i, j, out);
                        else if (i > j && !detail::is_spin_pair_exception(cartan, i, j))
                            lemma::commutation_above(b, i, j, out);
                        else lemma::commutation_spin(b, i, j, out);
                    }
                    ++rep.cases;
                }
            }
        }
    } else if (name == "extended") {
        std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
        std::uniform_int_distribution<int> node(1, n), slot(-1, 1);
        for (int r = 0; r < 200; ++r) {
            ExtendedElement bb(cartan);
            bb.set(0, members[pick(rng)]);
            bb.set(1, members[pick(rng)]);
            for (int q = 0; q < 20; ++q) {
                detail::extended_checks(bb, node(rng), slot(rng), out);
                ++rep.cases;
            }
        }
    } else if (name == "pbw_roundtrip") {
        if (type_a) {
            for (const Element& b : members) {
                const PbwDatum c = polyhedral_to_pbw(b);
                lemma::expect(out, "pbw_roundtrip_polyhedral", b, pbw_to_polyhedral(c) == b, c.to_string());
                Weight w(static_cast<std::size_t>(n), 0);
                for (const PositiveRoot& r : convex_order(cartan)) {
                    for (int t = r.first; t <= r.last; ++t) w[static_cast<std::size_t>(t - 1)] -= c(r.first, r.last);
                }
                lemma::expect(out, "pbw_weight", b, w == weight(b), c.to_string());
                ++rep.cases;
            }
            // every exponent vector of total size <= depth
            const auto order = convex_order(cartan);
            std::vector<int> cur(order.size(), 0);
            std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
                if (k == cur.size()) {
                    const PbwDatum c = PbwDatum::from_tuple(cartan, cur);
                    try {
                        const Element b = pbw_to_polyhedral(c);
                        lemma::expect(out, "pbw_roundtrip_datum", b, polyhedral_to_pbw(b) == c, c.to_string());
                    } catch (const invariant_error& err) {
                        out.push_back({"pbw_image", Element(cartan), c.to_string() + " " + err.what()});
                    }
                    ++rep.cases;
                    return;
                }
                for (int v = 0; v <= left; ++v) {
                    cur[k] = v;
                    rec(k + 1, left - v);
                }
                cur[k] = 0;
            };
            rec(0, depth);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
        if (a.witness < b.witness) return true;
        if (b.witness < a.witness) return false;
        return a.condition < b.condition;
    });
    return rep;
}

}  // namespace bicrystal

#endif  // BICRYSTAL_VERIFY_HPP
