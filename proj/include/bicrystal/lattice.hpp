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
// Lattice points b = (b_{s,t}), integer linear forms on them, and the two
// membership descriptions (inequality chains and boxed forms).

#ifndef BICRYSTAL_LATTICE_HPP
#define BICRYSTAL_LATTICE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bicrystal/cartan.hpp"

namespace bicrystal {

/// A point of Z^N indexed by the index domain. Values are not required to
/// satisfy the membership inequalities; operators check that themselves.
class Element {
public:
    explicit Element(CartanType cartan)
        : cartan_(cartan),
          data_(static_cast<std::size_t>(cartan.max_row() * cartan.rank()), 0) {}

    const CartanType& cartan() const noexcept { return cartan_; }

    /// b_{s,t}; zero outside the index domain.
    int operator()(int s, int t) const noexcept {
        if (!cartan_.in_domain(s, t)) return 0;
        return data_[slot(s, t)];
    }
    int operator()(Coord c) const noexcept { return (*this)(c.s, c.t); }

    void set(int s, int t, int value) {
        if (!cartan_.in_domain(s, t)) {
            if (value == 0) return;
            throw invalid_input("coordinate (" + std::to_string(s) + "," + std::to_string(t) +
                                ") is outside the index domain of " + cartan_.name());
        }
        data_[slot(s, t)] = value;
    }

    /// Adds delta at (s,t); reads outside the domain are the zero vector, so
    /// updates there are dropped.
    void add(int s, int t, int delta) noexcept {
        if (cartan_.in_domain(s, t)) data_[slot(s, t)] += delta;
    }

    bool is_zero() const noexcept {
        return std::all_of(data_.begin(), data_.end(), [](int v) { return v == 0; });
    }

    bool is_nonnegative() const noexcept {
        return std::all_of(data_.begin(), data_.end(), [](int v) { return v >= 0; });
    }

    /// Sum of all coordinates; for members this is the height of -wt.
    int height() const noexcept {
        int h = 0;
        for (int v : data_) h += v;
        return h;
    }

    /// Canonical tuple: s descending, then t descending.
    std::vector<int> tuple() const {
        std::vector<int> out;
        for (const Coord& c : index_domain(cartan_)) out.push_back((*this)(c));
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        bool first = true;
        for (int v : tuple()) {
            if (!first) os << ',';
            os << v;
            first = false;
        }
        os << ')';
        return os.str();
    }

    friend bool operator==(const Element& a, const Element& b) {
        return a.cartan_ == b.cartan_ && a.data_ == b.data_;
    }
    friend bool operator<(const Element& a, const Element& b) { return a.tuple() < b.tuple(); }

private:
    std::size_t slot(int s, int t) const noexcept {
        return static_cast<std::size_t>((s - 1) * cartan_.rank() + (t - 1));
    }

    CartanType cartan_;
    std::vector<int> data_;
};

/// Builds an element from explicit (s,t,value) entries. Negative values and
/// nonzero values outside the index domain are rejected.
inline Element make_element(const CartanType& cartan,
                            const std::vector<std::pair<Coord, int>>& entries) {
    Element b(cartan);
    for (const auto& [c, v] : entries) {
        if (v < 0) {
            throw invalid_input("negative coordinate at (" + std::to_string(c.s) + "," +
                                std::to_string(c.t) + ")");
        }
        if (v == 0) continue;
        b.set(c.s, c.t, b(c) + v);
    }
    return b;
}

/// Builds an element from a tuple in canonical order.
inline Element from_tuple(const CartanType& cartan, const std::vector<int>& values) {
    const auto domain = index_domain(cartan);
    if (values.size() != domain.size()) {
        throw invalid_input("expected " + std::to_string(domain.size()) + " coordinates for " +
                            cartan.name() + ", got " + std::to_string(values.size()));
    }
    std::vector<std::pair<Coord, int>> entries;
    for (std::size_t k = 0; k < domain.size(); ++k) entries.emplace_back(domain[k], values[k]);
    return make_element(cartan, entries);
}

/// Parses "2,4,0,5,1,3" (parentheses and spaces tolerated).
inline Element parse_tuple(const CartanType& cartan, const std::string& text) {
    std::vector<int> values;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw invalid_input("bad tuple entry '" + token + "'");
        }
        if (used != token.size()) throw invalid_input("bad tuple entry '" + token + "'");
        values.push_back(v);
        token.clear();
    };
    for (char c : text) {
        if (c == ',') {
            if (token.empty()) throw invalid_input("empty tuple entry in '" + text + "'");
            flush();
        } else if (c == '(' || c == ')' || c == ' ') {
            continue;
        } else {
            token.push_back(c);
        }
    }
    flush();
    return from_tuple(cartan, values);
}

/// Integer linear form sum c * x_{s,t}. Terms may mention positions outside
/// the index domain (including rows <= 0); those read as zero.
class LinearForm {
public:
    LinearForm() = default;

    LinearForm& add(int s, int t, int coeff) {
        if (coeff != 0) terms_.push_back({{s, t}, coeff});
        return *this;
    }
    LinearForm& add(const LinearForm& other, int scale = 1) {
        for (const auto& [c, k] : other.terms_) add(c.s, c.t, k * scale);
        return *this;
    }

    int eval(const Element& b) const noexcept {
        int total = 0;
        for (const auto& [c, k] : terms_) total += k * b(c);
        return total;
    }

    /// Merged coefficients restricted to the index domain, zeros dropped.
    std::map<Coord, int> normalized(const CartanType& cartan) const {
        std::map<Coord, int> out;
        for (const auto& [c, k] : terms_) {
            if (cartan.in_domain(c)) out[c] += k;
        }
        for (auto it = out.begin(); it != out.end();) {
            it = it->second == 0 ? out.erase(it) : std::next(it);
        }
        return out;
    }

    const std::vector<std::pair<Coord, int>>& terms() const noexcept { return terms_; }

    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a.add(b, -1); }
    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a.add(b, 1); }

private:
    std::vector<std::pair<Coord, int>> terms_;
};

inline bool same_form(const CartanType& cartan, const LinearForm& a, const LinearForm& b) {
    return a.normalized(cartan) == b.normalized(cartan);
}

inline std::string format_form(const CartanType& cartan, const LinearForm& f) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, k] : f.normalized(cartan)) {
        if (k < 0) os << (first ? "-" : " - ");
        else if (!first) os << " + ";
        if (k != 1 && k != -1) os << (k < 0 ? -k : k);
        os << "x[" << c.s << ',' << c.t << ']';
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

/// Boxed functional with label j (barred or not) and shift s.
struct BoxedForm {
    int j = 1;
    bool barred = false;
    int s = 1;
};

/// The linear form of a boxed functional. Rows <= 0 read as zero.
inline LinearForm boxed_form(const CartanType& cartan, const BoxedForm& f) {
    const int n = cartan.rank();
    const int j = f.j;
    const int s = f.s;
    LinearForm out;
    switch (cartan.family()) {
        case Family::A:
            if (f.barred || j < 1 || j > n + 1) throw invalid_input("bad boxed label for type A");
            out.add(s, j, 1).add(s + 1, j - 1, -1);
            break;
        case Family::B:
            if (j < 1 || j > n) throw invalid_input("bad boxed label for type B");
            if (!f.barred) {
                out.add(s, j, 1).add(s + 1, j - 1, -1);
            } else {
                const int r = s + n - j + 1;
                out.add(r, j - 1, 1).add(r, j, -1);
            }
            break;
        case Family::D:
            if (!f.barred) {
                if (j < 1 || j > n) throw invalid_input("bad boxed label for type D");
                if (j == n - 1) out.add(s, n - 1, 1).add(s, n, 1).add(s + 1, n - 2, -1);
                else out.add(s, j, 1).add(s + 1, j - 1, -1);
            } else {
                if (j < 1 || j > n + 1) throw invalid_input("bad boxed label for type D");
                if (j <= n - 2) {
                    const int r = s + n - j;
                    out.add(r, j - 1, 1).add(r, j, -1);
                } else if (j == n - 1) {
                    out.add(s + 1, n - 2, 1).add(s + 1, n - 1, -1).add(s + 1, n, -1);
                } else if (j == n) {
                    out.add(s, n - 1, 1).add(s + 1, n, -1);
                } else {
                    out.add(s, n, 1);
                }
            }
            break;
    }
    return out;
}

inline int boxed_eval(const BoxedForm& f, const Element& b) {
    return boxed_form(b.cartan(), f).eval(b);
}

/// Every admissible boxed label of the type, unbarred first.
inline std::vector<std::pair<int, bool>> boxed_labels(const CartanType& cartan) {
    const int n = cartan.rank();
    std::vector<std::pair<int, bool>> out;
    switch (cartan.family()) {
        case Family::A:
            for (int j = 1; j <= n + 1; ++j) out.emplace_back(j, false);
            break;
        case Family::B:
            for (int j = 1; j <= n; ++j) out.emplace_back(j, false);
            for (int j = n; j >= 1; --j) out.emplace_back(j, true);
            break;
        case Family::D:
            for (int j = 1; j <= n; ++j) out.emplace_back(j, false);
            for (int j = n + 1; j >= 1; --j) out.emplace_back(j, true);
            break;
    }
    return out;
}

inline bool is_member_boxed(const Element& b) {
    if (!b.is_nonnegative()) return false;
    const CartanType& cartan = b.cartan();
    // every form only reads rows >= s, so shifts past max_row give 0
    for (const auto& [j, barred] : boxed_labels(cartan)) {
        for (int s = 1; s <= cartan.max_row() + 1; ++s) {
            if (boxed_eval({j, barred, s}, b) < 0) return false;
        }
    }
    return true;
}

namespace detail {

inline bool descending(const std::vector<int>& chain) {
    for (std::size_t k = 1; k < chain.size(); ++k) {
        if (chain[k - 1] < chain[k]) return false;
    }
    return true;
}

}  // namespace detail

inline bool is_member_chains(const Element& b) {
    if (!b.is_nonnegative()) return false;
    const CartanType& cartan = b.cartan();
    const int n = cartan.rank();
    auto antidiagonal = [&b](int k) {
        // b_{1,k} >= b_{2,k-1} >= ... >= b_{k,1}
        std::vector<int> chain;
        for (int r = 1; r <= k; ++r) chain.push_back(b(r, k + 1 - r));
        return chain;
    };
    switch (cartan.family()) {
        case Family::A:
            for (int k = 1; k <= n; ++k) {
                if (!detail::descending(antidiagonal(k))) return false;
            }
            return true;
        case Family::B:
            for (int k = 1; k <= n - 1; ++k) {
                if (!detail::descending(antidiagonal(k))) return false;
            }
            for (int k = 1; k <= n; ++k) {
                std::vector<int> chain;
                for (int r = 0; k + r <= n; ++r) chain.push_back(b(k + r, n - r));
                if (!detail::descending(chain)) return false;
            }
            for (int k = 2; k <= n; ++k) {
                std::vector<int> chain;
                for (int t = n - k + 1; t <= n; ++t) chain.push_back(b(k, t));
                if (!detail::descending(chain)) return false;
            }
            return true;
        case Family::D: {
            for (int k = 1; k <= n - 2; ++k) {
                if (!detail::descending(antidiagonal(k))) return false;
            }
            for (int k = 1; k <= n - 2; ++k) {
                std::vector<int> chain{b(k, n - 1) + b(k, n)};
                for (int r = 1; k + r <= n - 1; ++r) chain.push_back(b(k + r, n - 1 - r));
                if (!detail::descending(chain)) return false;
            }
            for (int k = 2; k <= n - 1; ++k) {
                std::vector<int> chain;
                for (int t = n - k; t <= n - 2; ++t) chain.push_back(b(k, t));
                chain.push_back(b(k, n - 1) + b(k, n));
                if (!detail::descending(chain)) return false;
            }
            for (int start : {n - 1, n}) {
                // odd rows read column `start`, even rows the other spin node
                const int other = start == n ? n - 1 : n;
                std::vector<int> chain;
                for (int r = 1; r <= n - 1; ++r) chain.push_back(b(r, r % 2 == 1 ? start : other));
                if (!detail::descending(chain)) return false;
            }
            return true;
        }
    }
    return false;
}

/// Coefficients of wt(b) in the simple roots: coeff_t = -sum_s b_{s,t}.
using Weight = std::vector<int>;

inline Weight weight(const Element& b) {
    const CartanType& cartan = b.cartan();
    Weight w(static_cast<std::size_t>(cartan.rank()), 0);
    for (const Coord& c : index_domain(cartan)) w[static_cast<std::size_t>(c.t - 1)] -= b(c);
    return w;
}

/// <h_i, wt>.
inline int pair_with(const CartanType& cartan, int i, const Weight& w) {
    int total = 0;
    for (int j = 1; j <= cartan.rank(); ++j) {
        total += cartan.pairing(i, j) * w[static_cast<std::size_t>(j - 1)];
    }
    return total;
}

}  // namespace bicrystal

#endif  // BICRYSTAL_LATTICE_HPP
