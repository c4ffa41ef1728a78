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
// Executable forms of the structural lemmas behind the bicrystal theorem:
// how the Sigma values move under one lowering operator.
//
// Each check compares the observed change of a Sigma value with the predicted
// one and records a violation on mismatch. Predictions never call the
// operators they are predicting.

#ifndef BICRYSTAL_LEMMAS_HPP
#define BICRYSTAL_LEMMAS_HPP

#include <string>
#include <vector>

#include "bicrystal/bicrystal.hpp"

namespace bicrystal {

struct Violation {
    std::string condition;
    Element witness;
    std::string detail;
};

using Violations = std::vector<Violation>;

namespace lemma {

inline bool is_spin(const CartanType& c, int i) {
    const int n = c.rank();
    return (c.family() == Family::B && i == n) || (c.family() == Family::D && i >= n - 1);
}

inline std::string at(int i, const std::string& what) {
    return "i=" + std::to_string(i) + " " + what;
}

inline void expect(Violations& out, const char* cond, const Element& b, bool ok,
                   const std::string& detail) {
    if (!ok) out.push_back({cond, b, detail});
}

inline int usual_width(const CartanType& c, int i) { return tableau(c, i, false).shape.part(1); }

/// Row length of m_i(b) in the usual family (a row shape for every node).
inline int usual_m(const Element& b, int i) { return select(b, i, false).argmin.size(); }

/// jump_i = (eps_i - Sigma_(1)) + (eps*_i - Sigma*_(1)).
inline void jump_split(const Element& b, int i, Violations& out) {
    const Partition one = Partition::row(1);
    const int split = (epsilon(b, i) - gamma(b, i, one)) + (epsilon_star(b, i) - gamma_star(b, i, one));
    expect(out, "jump_split", b, jump(b, i) == split,
           at(i, "jump " + std::to_string(jump(b, i)) + " split " + std::to_string(split)));
}

/// Sigma*_s after f*_i on a row-shaped star family: m* = 1 moves s = 1 by
/// one; m* = k >= 2 moves s < k by two, s = k by one.
inline void star_shift_rows(const Element& b, int i, Violations& out) {
    const CartanType& c = b.cartan();
    const int k = select(b, i, true).argmin.size();
    const Element b1 = f(b, i, true);
    for (int s = 1; s <= i; ++s) {
        const Partition lam = Partition::row(s);
        int want = 0;
        if (k == 1) want = s == 1 ? 1 : 0;
        else want = s < k ? 2 : s == k ? 1 : 0;
        const int got = gamma_star(b1, i, lam) - gamma_star(b, i, lam);
        expect(out, "star_shift_rows", b, got == want,
               at(i, "m*=" + std::to_string(k) + " s=" + std::to_string(s) + " got " + std::to_string(got)));
    }
    (void)c;
}

/// Boxed functionals after f*_i in type A: +1 at (k, i+1-k), -1 at (k-1, i+1-k).
inline void boxed_shift_A(const Element& b, int i, Violations& out) {
    const CartanType& c = b.cartan();
    const int n = c.rank();
    const int k = select(b, i, true).argmin.size();
    const Element b1 = f(b, i, true);
    for (int s = 1; s <= n + 1; ++s) {
        for (int j = 1; j <= n + 1; ++j) {
            int want = 0;
            if (s == k && j == i + 1 - k) want += 1;
            if (s == k - 1 && j == i + 1 - k) want -= 1;
            const int got = boxed_eval({j, false, s}, b1) - boxed_eval({j, false, s}, b);
            expect(out, "boxed_shift", b, got == want,
                   at(i, "box " + std::to_string(j) + "_" + std::to_string(s) + " got " + std::to_string(got)));
        }
    }
}

/// Fixed-Sigma lemma for a node with row-shaped star family: f_i moves
/// Sigma*_s only when m = 1 and s = 1, and f*_i moves Sigma_s only when
/// m* = 1 and s = 1.
inline void fixed_sigma_rows(const Element& b, int i, Violations& out) {
    const CartanType& c = b.cartan();
    const int m = usual_m(b, i);
    const int ms = select(b, i, true).argmin.size();
    const Element bu = f(b, i, false);
    const Element bs = f(b, i, true);
    for (int s = 1; s <= i; ++s) {
        const Partition lam = Partition::row(s);
        const int got = gamma_star(bu, i, lam) - gamma_star(b, i, lam);
        const int want = m == 1 && s == 1 ? 1 : 0;
        expect(out, "fixed_sigma_star", b, got == want,
               at(i, "m=" + std::to_string(m) + " s=" + std::to_string(s) + " got " + std::to_string(got)));
    }
    for (int s = 1; s <= usual_width(c, i); ++s) {
        const Partition lam = Partition::row(s);
        const int got = gamma(bs, i, lam) - gamma(b, i, lam);
        const int want = ms == 1 && s == 1 ? 1 : 0;
        expect(out, "fixed_sigma", b, got == want,
               at(i, "m*=" + std::to_string(ms) + " s=" + std::to_string(s) + " got " + std::to_string(got)));
    }
}

/// Commutation lemma for distinct i, j with row-shaped star family at j.
/// i > j: nothing moves. i < j: the +-1 rule on rows j-i and j-i+1.
inline void commutation_rows(const Element& b, int i, int j, Violations& out) {
    const CartanType& c = b.cartan();
    const int m = usual_m(b, i);
    const int ms = select(b, j, true).argmin.size();
    const Element bu = f(b, i, false);
    const Element bs = f(b, j, true);
    auto rule = [&](int mm, int s) {
        if (i > j) return 0;
        if (mm == j - i && s == mm) return -1;
        if (mm == j - i + 1 && s == mm) return 1;
        return 0;
    };
    const std::string tag = "j=" + std::to_string(j) + " ";
    for (int s = 1; s <= j; ++s) {
        const Partition lam = Partition::row(s);
        const int got = gamma_star(bu, j, lam) - gamma_star(b, j, lam);
        expect(out, "commutation_star", b, got == rule(m, s),
               at(i, tag + "m=" + std::to_string(m) + " s=" + std::to_string(s) + " got " + std::to_string(got)));
    }
    for (int t = 1; t <= usual_width(c, i); ++t) {
        const Partition lam = Partition::row(t);
        const int got = gamma(bs, i, lam) - gamma(b, i, lam);
        expect(out, "commutation", b, got == rule(ms, t),
               at(i, tag + "m*=" + std::to_string(ms) + " t=" + std::to_string(t) + " got " + std::to_string(got)));
    }
}

/// Type A relation box(j+1)_s = box(j)_s - d_{s,j}, as linear forms on an
/// arbitrary point.
inline void telescope_A(const Element& x, Violations& out) {
    const CartanType& c = x.cartan();
    const int n = c.rank();
    for (int s = 1; s <= n + 1; ++s) {
        for (int j = 1; j <= n; ++j) {
            const int lhs = boxed_eval({j + 1, false, s}, x);
            const int rhs = boxed_eval({j, false, s}, x) - partial_form(c, s, j).eval(x);
            expect(out, "telescope", x, lhs == rhs, "j=" + std::to_string(j) + " s=" + std::to_string(s));
        }
    }
}

/// The B and D relations between consecutive boxed functionals.
inline void telescope_BD(const Element& x, Violations& out) {
    const CartanType& c = x.cartan();
    const int n = c.rank();
    auto box = [&](int j, bool bar, int s) { return boxed_eval({j, bar, s}, x); };
    auto d = [&](int s, int j) { return partial_form(c, s, j).eval(x); };
    auto check = [&](const char* name, int lhs, int rhs, int j, int s) {
        expect(out, name, x, lhs == rhs, "j=" + std::to_string(j) + " s=" + std::to_string(s));
    };
    const int rows = n + 2;
    if (c.family() == Family::D) {
        for (int s = 1; s <= rows; ++s) {
            for (int j = 1; j <= n - 1; ++j) check("telescope_up", box(j + 1, false, s), box(j, false, s) - d(s, j), j, s);
            check("telescope_nbar", box(n, true, s), box(n - 1, false, s) - d(s, n), n, s);
            check("telescope_n1bar", box(n - 1, true, s), box(n, false, s) - d(s, n), n - 1, s);
            check("telescope_fork", box(n + 1, true, s + 2) + box(n, true, s + 1) + box(n - 1, true, s),
                  box(n + 1, true, s) - d(s, n), n + 1, s);
        }
        for (int j = 2; j <= n; ++j) {
            for (int s = 1 + j - n; s <= rows; ++s) {
                check("telescope_down", box(j - 1, true, s), box(j, true, s) - d(s + n - j, j - 1), j, s);
            }
        }
    } else if (c.family() == Family::B) {
        for (int s = 1; s <= rows; ++s) {
            for (int j = 1; j <= n - 1; ++j) check("telescope_up", box(j + 1, false, s), box(j, false, s) - d(s, j), j, s);
            check("telescope_nbar", box(n, true, s), box(n, false, s) - d(s, n), n, s);
        }
        for (int j = 2; j <= n; ++j) {
            for (int s = j - n; s <= rows; ++s) {
                check("telescope_down", box(j - 1, true, s), box(j, true, s) - d(s + n - j + 1, j - 1), j, s);
            }
        }
    }
}

/// Strict-node formula for Sigma*_lambda after f*_i. R, A, R', A' are the
/// nodes of mu = m*_i(b); rho etc. count those lying in lambda. Type B at the
/// spin node doubles the node terms and adds first-column corrections at rows
/// ell and ell+1, with ell = length(mu).
inline void strict_node_formula(const Element& b, int i, Violations& out) {
    const CartanType& c = b.cartan();
    const Partition mu = select(b, i, true).argmin;
    const Tableau& T = tableau(c, i, true);
    const StrictNodes nodes = strict_nodes(mu, T.shape);
    const Element b1 = f(b, i, true);
    const bool b_spin = c.family() == Family::B && i == c.rank();
    for (const Partition& lam : partition_family(c, i, true).members) {
        auto count = [&lam](const std::vector<Coord>& v) {
            int k = 0;
            for (const Coord& x : v) k += lam.contains(x.s, x.t) ? 1 : 0;
            return k;
        };
        const int rho = count(nodes.removable), alpha = count(nodes.addable);
        const int rho1 = count(nodes.removable_shifted), alpha1 = count(nodes.addable_shifted);
        int want = 2 - rho - alpha + rho1 + alpha1;
        if (b_spin) {
            const int ell = mu.length();
            want = 2 - 2 * (rho + alpha) + 2 * (rho1 + alpha1) + (lam.contains(ell, 1) ? 1 : 0) +
                   (lam.contains(ell + 1, 1) ? 1 : 0);
        }
        const int got = gamma_star(b1, i, lam) - gamma_star(b, i, lam);
        expect(out, "strict_node", b, got == want,
               at(i, "mu=" + mu.to_string() + " lambda=" + lam.to_string() + " want " + std::to_string(want) +
                         " got " + std::to_string(got)));
        if (lam == mu) {
            expect(out, "strict_node_mu", b, got == 1, at(i, "mu=" + mu.to_string() + " got " + std::to_string(got)));
        }
    }
}

/// Fixed-Sigma lemma at a spin node (D: i = n or n-1, B: i = n). `parity`
/// selects the D rule (odd rows gain, even rows lose).
inline void fixed_sigma_spin(const Element& b, int i, Violations& out) {
    const CartanType& c = b.cartan();
    const bool parity = c.family() == Family::D;
    const int m = usual_m(b, i);
    const Partition mu = select(b, i, true).argmin;
    const Element bu = f(b, i, false);
    const Element bs = f(b, i, true);
    auto rule = [parity](const Partition& p, int r) {
        const bool up = p.contains(r, 1) && !p.contains(r, 2);
        const bool down = p.contains(r, 2) && !p.contains(r + 1, 1);
        if (up && (!parity || r % 2 == 1)) return 1;
        if (down && (!parity || r % 2 == 0)) return -1;
        return 0;
    };
    for (const Partition& lam : partition_family(c, i, true).members) {
        const int got = gamma_star(bu, i, lam) - gamma_star(b, i, lam);
        const int want = rule(lam, m);
        expect(out, "fixed_sigma_spin_star", b, got == want,
               at(i, "m=" + std::to_string(m) + " lambda=" + lam.to_string() + " got " + std::to_string(got)));
    }
    for (int s = 1; s <= usual_width(c, i); ++s) {
        const Partition lam = Partition::row(s);
        const int got = gamma(bs, i, lam) - gamma(b, i, lam);
        const int want = rule(mu, s);
        expect(out, "fixed_sigma_spin", b, got == want,
               at(i, "mu=" + mu.to_string() + " s=" + std::to_string(s) + " got " + std::to_string(got)));
    }
}

/// Commutation for i > j away from the D pair (n, n-1): f_i leaves every
/// Sigma*_lambda of j fixed and f*_j leaves every Sigma_(t) of i fixed.
inline void commutation_above(const Element& b, int i, int j, Violations& out) {
    const CartanType& c = b.cartan();
    const Element bu = f(b, i, false);
    const Element bs = f(b, j, true);
    const std::string tag = "j=" + std::to_string(j) + " ";
    for (const Partition& lam : partition_family(c, j, true).members) {
        const int got = gamma_star(bu, j, lam) - gamma_star(b, j, lam);
        expect(out, "commutation_above_star", b, got == 0,
               at(i, tag + "lambda=" + lam.to_string() + " got " + std::to_string(got)));
    }
    for (int t = 1; t <= usual_width(c, i); ++t) {
        const int got = gamma(bs, i, Partition::row(t)) - gamma(b, i, Partition::row(t));
        expect(out, "commutation_above", b, got == 0, at(i, tag + "t=" + std::to_string(t) + " got " + std::to_string(got)));
    }
}

/// Commutation of an ordinary node i against the spin node j. D: i <= n-2
/// against j in {n-1, n}, or i = n-1 against j = n (and the swap). B: i <= n-1
/// against j = n.
inline void commutation_spin(const Element& b, int i, int j, Violations& out) {
    const CartanType& c = b.cartan();
    const int n = c.rank();
    const int m = usual_m(b, i);
    const Partition mu = select(b, j, true).argmin;
    const Element bu = f(b, i, false);
    const Element bs = f(b, j, true);
    const std::string tag = "j=" + std::to_string(j) + " ";

    // predicted change of Sigma*_lambda (row = m) or Sigma_(t) (row = t, lambda = mu)
    auto rule = [&](int r, const Partition& lam, int step) -> int {
        auto in = [&lam](int s, int t) { return lam.contains(s, t); };
        if (c.family() == Family::D && i >= n - 1) {
            // the two spin nodes against each other
            const bool down = r % 2 == 1 && in(r, 2) && !in(r + 1, 1);
            const bool up = r % 2 == 0 && in(r, 1) && !in(r, 2);
            return up ? 1 : down ? -1 : 0;
        }
        const int base = c.family() == Family::D ? n - i - 1 : n - i;  // row index with k = 0
        const int k = r - base;
        bool minus = false, plus = false;
        if (k > 0 && k < i) {
            minus = in(k, base + 2) && in(k + 1, base) && !in(k + 1, base + 1);
            plus = in(k, base + 1) && !in(k, base + 2) && !in(k + 1, base);
        } else if (k == 0) {
            minus = in(1, r) && !in(1, r + 1);
        } else if (k == i) {
            plus = in(i, base + 1) && !in(i + 1, base);
        }
        return plus ? step : minus ? -step : 0;
    };
    const int star_step = c.family() == Family::B ? 2 : 1;
    for (const Partition& lam : partition_family(c, j, true).members) {
        const int got = gamma_star(bu, j, lam) - gamma_star(b, j, lam);
        const int want = rule(m, lam, star_step);
        expect(out, "commutation_spin_star", b, got == want,
               at(i, tag + "m=" + std::to_string(m) + " lambda=" + lam.to_string() + " want " +
                         std::to_string(want) + " got " + std::to_string(got)));
    }
    for (int t = 1; t <= usual_width(c, i); ++t) {
        const int got = gamma(bs, i, Partition::row(t)) - gamma(b, i, Partition::row(t));
        const int want = rule(t, mu, 1);
        expect(out, "commutation_spin", b, got == want,
               at(i, tag + "mu=" + mu.to_string() + " t=" + std::to_string(t) + " want " + std::to_string(want) +
                         " got " + std::to_string(got)));
    }
}

}  // namespace lemma
}  // namespace bicrystal

#endif  // BICRYSTAL_LEMMAS_HPP
