/*
   Copyright 2026 The hltrans Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HLTRANS_TABLEAUX_HPP
#define HLTRANS_TABLEAUX_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "indexset.hpp"
#include "tpoly.hpp"

namespace hltrans {

/**
 * A filling of a skew diagram. Row i stores only the cells of lambda/mu,
 * i.e. columns mu_i+1 .. lambda_i, so rows(i-1)[k] is the entry at
 * (i, mu_i + 1 + k).
 */
class Tableau {
  public:
    Tableau() = default;
    Tableau(SkewShape shape, std::vector<std::vector<int>> rows) : shape_(std::move(shape)), rows_(std::move(rows)) {
        if (static_cast<int>(rows_.size()) != shape_.rows())
            throw std::invalid_argument("Tableau: expected " + std::to_string(shape_.rows()) + " rows");
        for (int i = 1; i <= shape_.rows(); ++i) {
            const auto& r = rows_[static_cast<std::size_t>(i - 1)];
            if (static_cast<int>(r.size()) != shape_.row_size(i))
                throw std::invalid_argument("Tableau: row " + std::to_string(i) + " has the wrong length");
            for (int v : r)
                if (v < 1) throw std::invalid_argument("Tableau: entries must be positive");
        }
    }
    /// Straight shape from its rows.
    explicit Tableau(std::vector<std::vector<int>> rows) : Tableau(shape_of(rows), rows) {}

    const SkewShape& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int size() const noexcept { return shape_.size(); }

    int at(int i, int j) const {
        return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - shape_.row_begin(i))];
    }
    int at(Cell c) const { return at(c.row, c.col); }

    int max_entry() const {
        int m = 0;
        for (const auto& r : rows_)
            for (int v : r) m = std::max(m, v);
        return m;
    }

    /// content()[v-1] = number of entries equal to v, for v = 1..max_entry.
    std::vector<int> content() const {
        std::vector<int> c(static_cast<std::size_t>(max_entry()), 0);
        for (const auto& r : rows_)
            for (int v : r) ++c[static_cast<std::size_t>(v - 1)];
        return c;
    }

    bool is_semistandard() const {
        for (int i = 1; i <= shape_.rows(); ++i)
            for (int j = shape_.row_begin(i); j <= shape_.row_end(i); ++j) {
                if (shape_.contains(i, j - 1) && at(i, j - 1) > at(i, j)) return false;
                if (shape_.contains(i - 1, j) && at(i - 1, j) >= at(i, j)) return false;
            }
        return true;
    }

    bool is_standard() const {
        if (!is_semistandard()) return false;
        std::vector<int> c = content();
        return static_cast<int>(c.size()) == size() && std::all_of(c.begin(), c.end(), [](int x) { return x == 1; });
    }

    /// Cell holding k in a standard tableau.
    Cell cell_of(int k) const {
        for (int i = 1; i <= shape_.rows(); ++i)
            for (int j = shape_.row_begin(i); j <= shape_.row_end(i); ++j)
                if (at(i, j) == k) return {i, j};
        throw std::invalid_argument("Tableau::cell_of: " + std::to_string(k) + " not present");
    }

    /// Rows top to bottom, each read right to left.
    std::vector<int> reading_word() const {
        std::vector<int> w;
        for (const auto& r : rows_) w.insert(w.end(), r.rbegin(), r.rend());
        return w;
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;

  private:
    static SkewShape shape_of(const std::vector<std::vector<int>>& rows) {
        std::vector<int> lens;
        for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
        return SkewShape(Partition(std::move(lens)));
    }

    SkewShape shape_;
    std::vector<std::vector<int>> rows_;
};

/// Positions of 1..n in a standard tableau; index k-1 holds c_k.
inline std::vector<Cell> cell_positions(const Tableau& s) {
    std::vector<Cell> pos(static_cast<std::size_t>(s.size()));
    for (const Cell& c : s.shape().cells()) pos[static_cast<std::size_t>(s.at(c) - 1)] = c;
    return pos;
}

// ---------------------------------------------------------------------------
// enumeration

/// Visits every semistandard filling of `shape` with entries in [max_entry],
/// restricted to the given content when present. Visiting order is
/// lexicographic in the row-major entry sequence.
inline void for_each_ssyt(const SkewShape& shape, int max_entry, const std::optional<Composition>& content,
                          const std::function<void(const Tableau&)>& visit) {
    if (max_entry < 0) throw std::invalid_argument("for_each_ssyt: negative max entry");
    if (content) {
        if (content->size() != shape.size() || content->length() > max_entry) return;
    }
    const std::vector<Cell> cells = shape.cells();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
    for (int i = 1; i <= shape.rows(); ++i) rows[static_cast<std::size_t>(i - 1)].assign(static_cast<std::size_t>(shape.row_size(i)), 0);
    std::vector<int> remaining;
    if (content) remaining = content->parts();

    auto entry = [&](int i, int j) -> int& {
        return rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - shape.row_begin(i))];
    };

    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            visit(Tableau(shape, rows));
            return;
        }
        const Cell c = cells[k];
        int lo = 1;
        if (shape.contains(c.row, c.col - 1)) lo = std::max(lo, entry(c.row, c.col - 1));
        if (shape.contains(c.row - 1, c.col)) lo = std::max(lo, entry(c.row - 1, c.col) + 1);
        const int hi = content ? content->length() : max_entry;
        for (int v = lo; v <= hi; ++v) {
            if (content) {
                auto& r = remaining[static_cast<std::size_t>(v - 1)];
                if (r == 0) continue;
                --r;
                entry(c.row, c.col) = v;
                rec(k + 1);
                ++r;
            } else {
                entry(c.row, c.col) = v;
                rec(k + 1);
            }
        }
    };
    rec(0);
}

inline std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry,
                                           const std::optional<Composition>& content = std::nullopt) {
    std::vector<Tableau> out;
    for_each_ssyt(shape, max_entry, content, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

inline void for_each_syt(const SkewShape& shape, const std::function<void(const Tableau&)>& visit) {
    const int n = shape.size();
    for_each_ssyt(shape, n, Composition(std::vector<int>(static_cast<std::size_t>(n), 1)), visit);
}

inline std::vector<Tableau> enumerate_syt(const SkewShape& shape) {
    std::vector<Tableau> out;
    for_each_syt(shape, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

// ---------------------------------------------------------------------------
// special cells and the Macdonald coefficients

struct WeightedCell {
    Cell cell;
    int weight = 0;
    friend bool operator==(const WeightedCell&, const WeightedCell&) = default;
};

/**
 * Cells (i,j), j > 1, whose entry v does not occur in column j-1. The weight
 * counts cells of column j-1 in rows u >= i that hold an entry below v or
 * belong to the inner shape.
 */
inline std::vector<WeightedCell> special_cells(const Tableau& t) {
    const SkewShape& sh = t.shape();
    std::vector<WeightedCell> out;
    for (const Cell& c : sh.cells()) {
        if (c.col == 1) continue;
        const int v = t.at(c);
        const int left = c.col - 1;
        bool special = true;
        int wt = 0;
        for (int u = 1; u <= sh.rows(); ++u) {
            if (sh.contains(u, left)) {
                const int x = t.at(u, left);
                if (x == v) {
                    special = false;
                    break;
                }
                if (u >= c.row && x < v) ++wt;
            } else if (u >= c.row && sh.in_inner(u, left)) {
                ++wt;
            }
        }
        if (special) out.push_back({c, wt});
    }
    return out;
}

/// Number of rows of length exactly j in the shape mu + {cells with entry <= v}.
inline int filtration_multiplicity(const Tableau& t, int v, int j) {
    const SkewShape& sh = t.shape();
    int m = 0;
    for (int u = 1; u <= sh.rows(); ++u) {
        int len = sh.inner().part(u);
        for (int col = sh.row_begin(u); col <= sh.row_end(u); ++col)
            if (t.at(u, col) <= v) len = col;
        if (len == j) ++m;
    }
    return m;
}

/**
 * Q-special cells: the entry does not occur in the column to the right.
 * Weights use the row-counting form; each is checked against the
 * multiplicity read off the horizontal-strip filtration.
 */
inline std::vector<WeightedCell> qspecial_cells(const Tableau& t) {
    const SkewShape& sh = t.shape();
    std::vector<WeightedCell> out;
    for (const Cell& c : sh.cells()) {
        const int v = t.at(c);
        const int right = c.col + 1;
        bool special = true;
        int below_or_inner = 0;
        for (int u = 1; u <= sh.rows(); ++u) {
            if (sh.contains(u, right)) {
                const int x = t.at(u, right);
                if (x == v) {
                    special = false;
                    break;
                }
                if (x <= v) ++below_or_inner;
            } else if (sh.in_inner(u, right)) {
                ++below_or_inner;
            }
        }
        if (!special) continue;
        const int wt = c.row - below_or_inner;
        if (wt != filtration_multiplicity(t, v, c.col))
            throw InvariantError("qspecial_cells: weight forms disagree at cell (" + std::to_string(c.row) + "," +
                                 std::to_string(c.col) + ")");
        out.push_back({c, wt});
    }
    return out;
}

/// prod over spec(T) of (1 - t^wt)
inline TPoly psi_poly(const Tableau& t) {
    TPoly p = 1;
    for (const auto& wc : special_cells(t)) p *= one_minus_t_pow(wc.weight);
    return p;
}

/// prod over entries v of phi_{lambda^(v)/lambda^(v-1)}, from the filtration
/// by horizontal strips.
inline TPoly phi_poly(const Tableau& t) {
    const SkewShape& sh = t.shape();
    const int width = sh.outer().part(1);
    auto prefix_shape = [&](int v) {
        std::vector<int> rho(static_cast<std::size_t>(sh.rows()));
        for (int u = 1; u <= sh.rows(); ++u) {
            int len = sh.inner().part(u);
            for (int col = sh.row_begin(u); col <= sh.row_end(u); ++col)
                if (t.at(u, col) <= v) len = col;
            rho[static_cast<std::size_t>(u - 1)] = len;
        }
        return rho;
    };
    TPoly p = 1;
    std::vector<int> nu = prefix_shape(0);
    for (int v = 1; v <= t.max_entry(); ++v) {
        std::vector<int> rho = prefix_shape(v);
        std::vector<int> strip(static_cast<std::size_t>(width) + 2, 0);
        for (std::size_t u = 0; u < rho.size(); ++u)
            for (int col = nu[u] + 1; col <= rho[u]; ++col) ++strip[static_cast<std::size_t>(col)];
        for (int col = 1; col <= width; ++col) {
            if (strip[static_cast<std::size_t>(col)] > 1)
                throw InvariantError("phi_poly: entries " + std::to_string(v) + " do not form a horizontal strip");
            if (strip[static_cast<std::size_t>(col)] == 1 && strip[static_cast<std::size_t>(col) + 1] == 0) {
                int m = static_cast<int>(std::count(rho.begin(), rho.end(), col));
                p *= one_minus_t_pow(m);
            }
        }
        nu = std::move(rho);
    }
    return p;
}

/// prod over specQ(T) of (1 - t^wt); equals phi_poly.
inline TPoly phi_poly_from_cells(const Tableau& t) {
    TPoly p = 1;
    for (const auto& wc : qspecial_cells(t)) p *= one_minus_t_pow(wc.weight);
    return p;
}

// ---------------------------------------------------------------------------
// starred tableaux

enum class Variant { P, Q };

/// (T, E) with E a set of special cells (P) or Q-special cells (Q).
class StarredTableau {
  public:
    StarredTableau() = default;
    StarredTableau(Tableau base, std::vector<Cell> stars, Variant variant = Variant::P)
        : base_(std::move(base)), stars_(std::move(stars)), variant_(variant) {
        std::sort(stars_.begin(), stars_.end());
        if (std::adjacent_find(stars_.begin(), stars_.end()) != stars_.end())
            throw std::invalid_argument("StarredTableau: repeated star");
        const auto allowed = variant_ == Variant::P ? special_cells(base_) : qspecial_cells(base_);
        tstat_ = 0;
        for (const Cell& c : stars_) {
            auto it = std::find_if(allowed.begin(), allowed.end(), [&](const WeightedCell& w) { return w.cell == c; });
            if (it == allowed.end())
                throw std::invalid_argument("StarredTableau: cell (" + std::to_string(c.row) + "," +
                                            std::to_string(c.col) + ") is not special");
            tstat_ += it->weight;
        }
    }

    const Tableau& base() const noexcept { return base_; }
    const std::vector<Cell>& stars() const noexcept { return stars_; }
    Variant variant() const noexcept { return variant_; }
    int sign() const noexcept { return stars_.size() % 2 == 0 ? 1 : -1; }
    int tstat() const noexcept { return tstat_; }
    bool is_starred(Cell c) const { return std::binary_search(stars_.begin(), stars_.end(), c); }

    friend bool operator==(const StarredTableau& a, const StarredTableau& b) {
        return a.variant_ == b.variant_ && a.base_ == b.base_ && a.stars_ == b.stars_;
    }

  private:
    Tableau base_;
    std::vector<Cell> stars_;
    Variant variant_ = Variant::P;
    int tstat_ = 0;
};

/// k such that k+1 lies in a strictly lower row than k.
inline Subset des_set(const Tableau& s) {
    if (!s.is_standard()) throw std::invalid_argument("des_set: tableau is not standard");
    const auto pos = cell_positions(s);
    Subset d;
    for (std::size_t k = 1; k < pos.size(); ++k)
        if (pos[k].row > pos[k - 1].row) d.push_back(static_cast<int>(k));
    return d;
}

/// Des(S) plus every k whose successor sits in a starred cell one column to
/// the right of k.
inline Subset asc_set(const Tableau& s, const std::vector<Cell>& stars) {
    Subset a = des_set(s);
    const auto pos = cell_positions(s);
    for (const Cell& c : stars) {
        if (!s.shape().contains(c) || c.col == 1)
            throw std::invalid_argument("asc_set: star outside spec(S)");
        const int k1 = s.at(c);
        if (k1 >= 2 && pos[static_cast<std::size_t>(k1 - 2)].col == c.col - 1) a.push_back(k1 - 1);
    }
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

/// Des(S) plus every starred k whose successor lies one column to the right.
inline Subset qasc_set(const Tableau& s, const std::vector<Cell>& stars) {
    Subset a = des_set(s);
    const auto pos = cell_positions(s);
    const int n = s.size();
    for (const Cell& c : stars) {
        if (!s.shape().contains(c)) throw std::invalid_argument("qasc_set: star outside the diagram");
        const int k = s.at(c);
        if (k < n && pos[static_cast<std::size_t>(k)].col == c.col + 1) a.push_back(k);
    }
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

/// Asc or QAsc according to the variant; the base must be standard.
inline Subset ascent_set(const StarredTableau& s) {
    return s.variant() == Variant::P ? asc_set(s.base(), s.stars()) : qasc_set(s.base(), s.stars());
}

inline Composition ascent_composition(const StarredTableau& s) { return comp(ascent_set(s), s.base().size()); }

inline Composition des_composition(const Tableau& s) { return comp(des_set(s), s.size()); }

/// Cells of spec(S) whose starring changes the ascent set.
inline std::vector<Cell> espec_cells(const Tableau& s) {
    const Subset base = des_set(s);
    std::vector<Cell> out;
    for (const auto& wc : special_cells(s))
        if (asc_set(s, {wc.cell}) != base) out.push_back(wc.cell);
    return out;
}

/// Visits all (S, E) with S standard of the given shape and E any subset of
/// the variant's special cells. Subsets are walked in Gray-code order.
inline void for_each_starred_syt(const SkewShape& shape, Variant variant,
                                 const std::function<void(const StarredTableau&)>& visit) {
    for_each_syt(shape, [&](const Tableau& s) {
        const auto spec = variant == Variant::P ? special_cells(s) : qspecial_cells(s);
        const std::size_t m = spec.size();
        if (m >= 63) throw std::invalid_argument("for_each_starred_syt: too many special cells");
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << m); ++k) {
            const std::uint64_t gray = k ^ (k >> 1);
            std::vector<Cell> stars;
            for (std::size_t b = 0; b < m; ++b)
                if (gray & (std::uint64_t{1} << b)) stars.push_back(spec[b].cell);
            visit(StarredTableau(s, std::move(stars), variant));
        }
    });
}

/// Same as for_each_starred_syt over semistandard tableaux with entries in [max_entry].
inline void for_each_starred_ssyt(const SkewShape& shape, int max_entry, Variant variant,
                                  const std::function<void(const StarredTableau&)>& visit) {
    for_each_ssyt(shape, max_entry, std::nullopt, [&](const Tableau& t) {
        const auto spec = variant == Variant::P ? special_cells(t) : qspecial_cells(t);
        const std::size_t m = spec.size();
        if (m >= 63) throw std::invalid_argument("for_each_starred_ssyt: too many special cells");
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << m); ++k) {
            const std::uint64_t gray = k ^ (k >> 1);
            std::vector<Cell> stars;
            for (std::size_t b = 0; b < m; ++b)
                if (gray & (std::uint64_t{1} << b)) stars.push_back(spec[b].cell);
            visit(StarredTableau(t, std::move(stars), variant));
        }
    });
}

// ---------------------------------------------------------------------------
// standardization

/// Replaces the occurrences of each value, left to right, by consecutive
/// integers. Returns the standard tableau and the sorted content word.
inline std::pair<Tableau, Word> standardize(const Tableau& t) {
    const SkewShape& sh = t.shape();
    std::vector<Cell> order = sh.cells();
    std::stable_sort(order.begin(), order.end(), [&](const Cell& a, const Cell& b) {
        const int va = t.at(a), vb = t.at(b);
        if (va != vb) return va < vb;
        return a.col < b.col;
    });
    std::vector<std::vector<int>> rows = t.rows();
    Word w;
    w.reserve(order.size());
    int label = 0;
    for (const Cell& c : order) {
        rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - sh.row_begin(c.row))] = ++label;
        w.push_back(t.at(c));
    }
    return {Tableau(sh, std::move(rows)), std::move(w)};
}

inline std::pair<StarredTableau, Word> standardize(const StarredTableau& t) {
    auto [s, w] = standardize(t.base());
    return {StarredTableau(std::move(s), t.stars(), t.variant()), std::move(w)};
}

/// Inverse of standardize: relabels k by w_k. The word must be weakly
/// increasing and strictly increasing across every ascent of S*.
inline StarredTableau unstandardize(const StarredTableau& s, const Word& w) {
    const Tableau& st = s.base();
    if (!st.is_standard()) throw std::invalid_argument("unstandardize: base tableau is not standard");
    if (static_cast<int>(w.size()) != st.size()) throw std::invalid_argument("unstandardize: word length mismatch");
    for (int x : w)
        if (x < 1) throw std::invalid_argument("unstandardize: letters must be positive");
    if (!is_compatible(w, ascent_set(s))) throw std::invalid_argument("unstandardize: word is not ascent-compatible");
    std::vector<std::vector<int>> rows = st.rows();
    for (auto& r : rows)
        for (int& v : r) v = w[static_cast<std::size_t>(v - 1)];
    return StarredTableau(Tableau(st.shape(), std::move(rows)), s.stars(), s.variant());
}

}  // namespace hltrans

#endif  // HLTRANS_TABLEAUX_HPP
