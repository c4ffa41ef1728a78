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
// Local forms d_{s,t}, d*_{s,t}, the tableaux T_i / T_i*, their partition
// families and the sums Sigma_lambda / Sigma*_lambda.

#ifndef BICRYSTAL_TABLEAUX_HPP
#define BICRYSTAL_TABLEAUX_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "bicrystal/cartan.hpp"
#include "bicrystal/lattice.hpp"

namespace bicrystal {

/// Weakly decreasing positive parts; cells (row, col) are 1-based.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t k = 0; k < parts_.size(); ++k) {
            if (parts_[k] < 0 || (k > 0 && parts_[k] > parts_[k - 1])) {
                throw invalid_input("not a partition: " + format(parts_));
            }
        }
    }

    static Partition row(int k) { return Partition(std::vector<int>{k}); }

    static Partition staircase(int k) {
        std::vector<int> parts;
        for (int r = k; r >= 1; --r) parts.push_back(r);
        return Partition(parts);
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// lambda_r, zero past the last row.
    int part(int r) const noexcept {
        return r >= 1 && r <= length() ? parts_[static_cast<std::size_t>(r - 1)] : 0;
    }

    int size() const noexcept {
        int total = 0;
        for (int p : parts_) total += p;
        return total;
    }

    bool contains(int row, int col) const noexcept { return col >= 1 && col <= part(row); }

    bool is_strict() const noexcept {
        for (std::size_t k = 1; k < parts_.size(); ++k) {
            if (parts_[k] >= parts_[k - 1]) return false;
        }
        return true;
    }

    bool subset_of(const Partition& other) const noexcept {
        for (int r = 1; r <= length(); ++r) {
            if (part(r) > other.part(r)) return false;
        }
        return true;
    }

    friend Partition operator|(const Partition& a, const Partition& b) {
        std::vector<int> parts(static_cast<std::size_t>(std::max(a.length(), b.length())));
        for (int r = 1; r <= static_cast<int>(parts.size()); ++r) {
            parts[static_cast<std::size_t>(r - 1)] = std::max(a.part(r), b.part(r));
        }
        return Partition(parts);
    }

    friend Partition operator&(const Partition& a, const Partition& b) {
        std::vector<int> parts(static_cast<std::size_t>(std::min(a.length(), b.length())));
        for (int r = 1; r <= static_cast<int>(parts.size()); ++r) {
            parts[static_cast<std::size_t>(r - 1)] = std::min(a.part(r), b.part(r));
        }
        return Partition(parts);
    }

    std::string to_string() const { return format(parts_); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    static std::string format(const std::vector<int>& parts) {
        std::ostringstream os;
        os << '(';
        for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "," : "") << parts[k];
        os << ')';
        return os.str();
    }

    std::vector<int> parts_;
};

/// d_{s,t} as a form; defined for every (s,t), reads outside the domain are zero.
inline LinearForm partial_form(const CartanType& cartan, int s, int t) {
    const int n = cartan.rank();
    LinearForm f;
    f.add(s, t, 1);
    for (int k = t + 1; k <= n; ++k) f.add(s, k, cartan.pairing_unchecked(t, k));
    for (int k = 1; k < t; ++k) f.add(s + 1, k, cartan.pairing_unchecked(t, k));
    f.add(s + 1, t, 1);
    return f;
}

/// d*_{s,t}, which is d_{s-1,t} as a form.
inline LinearForm partial_star_form(const CartanType& cartan, int s, int t) {
    return partial_form(cartan, s - 1, t);
}

inline int partial(const Element& b, int s, int t) {
    if (!b.cartan().in_domain(s, t)) {
        throw invalid_input("(" + std::to_string(s) + "," + std::to_string(t) +
                            ") is outside the index domain");
    }
    return partial_form(b.cartan(), s, t).eval(b);
}

inline int partial_star(const Element& b, int s, int t) {
    if (!b.cartan().in_domain(s, t)) {
        throw invalid_input("(" + std::to_string(s) + "," + std::to_string(t) +
                            ") is outside the index domain");
    }
    return partial_star_form(b.cartan(), s, t).eval(b);
}

struct TableauCell {
    Coord index;
    bool star = false;
    int coeff = 1;

    LinearForm form(const CartanType& cartan) const {
        LinearForm f;
        f.add(star ? partial_star_form(cartan, index.s, index.t)
                   : partial_form(cartan, index.s, index.t),
              coeff);
        return f;
    }

    std::string token() const {
        std::string out = coeff == 1 ? "" : std::to_string(coeff);
        out += star ? "∂*[" : "∂[";
        return out + std::to_string(index.s) + "," + std::to_string(index.t) + "]";
    }
};

struct Tableau {
    CartanType cartan;
    int node;
    bool star;
    Partition shape;
    std::vector<std::vector<TableauCell>> rows;

    const TableauCell& at(int row, int col) const {
        if (!shape.contains(row, col)) throw invalid_input("cell outside the tableau shape");
        return rows[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
    }

    std::string render() const {
        std::ostringstream os;
        std::size_t width = 0;
        for (const auto& r : rows) {
            for (const auto& c : r) width = std::max(width, c.token().size());
        }
        for (const auto& r : rows) {
            for (std::size_t k = 0; k < r.size(); ++k) {
                std::string tok = r[k].token();
                os << (k ? " " : "") << tok;
                if (k + 1 < r.size()) os << std::string(width - display_width(tok), ' ');
            }
            os << '\n';
        }
        return os.str();
    }

private:
    static std::size_t display_width(const std::string& s) {
        std::size_t w = 0;
        for (unsigned char c : s) {
            if ((c & 0xC0) != 0x80) ++w;
        }
        return w;
    }
};

/// A tableau together with its family and the precomputed Sigma forms.
struct PartitionFamily {
    bool star = false;
    std::vector<Partition> members;
    std::vector<LinearForm> forms;

    int position(const Partition& lambda) const {
        for (std::size_t k = 0; k < members.size(); ++k) {
            if (members[k] == lambda) return static_cast<int>(k);
        }
        return -1;
    }
};

namespace detail {

inline Tableau build_tableau(const CartanType& cartan, int i, bool star) {
    const int n = cartan.rank();
    Tableau T{cartan, i, star, {}, {}};
    auto row_tableau = [&T](int width, auto index_of) {
        T.shape = Partition::row(width);
        T.rows.assign(1, {});
        for (int t = 1; t <= width; ++t) T.rows[0].push_back({index_of(t), T.star, 1});
    };
    if (!star) {
        const int width = cartan.family() == Family::A ? n + 1 - i
                        : cartan.family() == Family::B ? n
                                                       : n - 1;
        row_tableau(width, [i](int t) { return Coord{t, i}; });
        return T;
    }
    const bool spin = (cartan.family() == Family::B && i == n) ||
                      (cartan.family() == Family::D && i >= n - 1);
    if (!spin) {
        row_tableau(i, [i](int t) { return Coord{t, i + 1 - t}; });
        return T;
    }
    if (cartan.family() == Family::B) {
        // coefficient 2 off the first column, column index n+1-t (not n-t;
        // the B_3 -Xi list only comes out right this way)
        T.shape = Partition::staircase(n);
        for (int s = 1; s <= n; ++s) {
            std::vector<TableauCell> row;
            for (int t = 1; t <= n + 1 - s; ++t) {
                if (t == 1) row.push_back({{s, n}, true, 1});
                else row.push_back({{s + t - 1, n + 1 - t}, true, 2});
            }
            T.rows.push_back(row);
        }
        return T;
    }
    T.shape = Partition::staircase(n - 1);
    const int odd = i;                       // first-column label on odd rows
    const int even = i == n ? n - 1 : n;     // and on even rows
    for (int s = 1; s <= n - 1; ++s) {
        std::vector<TableauCell> row;
        for (int t = 1; t <= n - s; ++t) {
            if (t == 1) row.push_back({{s, s % 2 == 1 ? odd : even}, true, 1});
            else row.push_back({{s + t - 1, n - t}, true, 1});
        }
        T.rows.push_back(row);
    }
    return T;
}

inline void sub_partitions(const Partition& shape, bool strict, std::vector<int>& current,
                           std::vector<Partition>& out) {
    const int r = static_cast<int>(current.size()) + 1;
    if (!current.empty()) out.emplace_back(current);
    if (r > shape.length()) return;
    int limit = shape.part(r);
    if (!current.empty()) limit = std::min(limit, current.back() - (strict ? 1 : 0));
    for (int p = 1; p <= limit; ++p) {
        current.push_back(p);
        sub_partitions(shape, strict, current, out);
        current.pop_back();
    }
}

struct TableauData {
    Tableau tableau;
    PartitionFamily family;
};

inline TableauData build_data(const CartanType& cartan, int i, bool star) {
    TableauData data{build_tableau(cartan, i, star), {}};
    data.family.star = star;
    std::vector<int> current;
    sub_partitions(data.tableau.shape, star, current, data.family.members);
    std::sort(data.family.members.begin(), data.family.members.end(),
              [](const Partition& a, const Partition& b) {
                  return std::make_pair(a.size(), a) < std::make_pair(b.size(), b);
              });
    const int width = data.tableau.shape.part(1);
    for (const Partition& lambda : data.family.members) {
        LinearForm f;
        if (!star) {
            // tail of the row starting at column |lambda|
            for (int s = lambda.size(); s <= width; ++s) f.add(data.tableau.at(1, s).form(cartan));
        } else {
            for (int r = 1; r <= lambda.length(); ++r) {
                for (int c = 1; c <= lambda.part(r); ++c) f.add(data.tableau.at(r, c).form(cartan));
            }
        }
        data.family.forms.push_back(std::move(f));
    }
    return data;
}

inline const TableauData& tableau_data(const CartanType& cartan, int i, bool star) {
    cartan.check_node(i);
    using Key = std::tuple<int, int, int, bool>;
    static std::mutex mutex;
    static std::map<Key, std::shared_ptr<const TableauData>> cache;
    const Key key{static_cast<int>(cartan.family()), cartan.rank(), i, star};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto built = std::make_shared<const TableauData>(build_data(cartan, i, star));
    std::lock_guard<std::mutex> lock(mutex);
    // a concurrent builder may have won; both results are identical
    auto [it, inserted] = cache.emplace(key, std::move(built));
    return *it->second;
}

}  // namespace detail

inline const Tableau& tableau(const CartanType& cartan, int i, bool star) {
    return detail::tableau_data(cartan, i, star).tableau;
}

inline const PartitionFamily& partition_family(const CartanType& cartan, int i, bool star) {
    return detail::tableau_data(cartan, i, star).family;
}

/// Sigma_lambda (star = false) or Sigma*_lambda (star = true) as a linear form.
inline const LinearForm& gamma_form(const CartanType& cartan, int i, bool star,
                                    const Partition& lambda) {
    const PartitionFamily& fam = partition_family(cartan, i, star);
    const int k = fam.position(lambda);
    if (k < 0) {
        throw invalid_input(lambda.to_string() + " is not in the " + (star ? "star " : "") +
                            "family of node " + std::to_string(i));
    }
    return fam.forms[static_cast<std::size_t>(k)];
}

inline int gamma(const Element& b, int i, const Partition& lambda) {
    return gamma_form(b.cartan(), i, false, lambda).eval(b);
}

inline int gamma_star(const Element& b, int i, const Partition& lambda) {
    return gamma_form(b.cartan(), i, true, lambda).eval(b);
}

}  // namespace bicrystal

#endif  // BICRYSTAL_TABLEAUX_HPP
