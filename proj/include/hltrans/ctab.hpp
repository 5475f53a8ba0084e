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

#ifndef HLTRANS_CTAB_HPP
#define HLTRANS_CTAB_HPP

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "indexset.hpp"

namespace hltrans {

/// A filling of the left-justified diagram of a composition.
class CompositionTableau {
  public:
    CompositionTableau() = default;
    CompositionTableau(Composition shape, std::vector<std::vector<int>> rows)
        : shape_(std::move(shape)), rows_(std::move(rows)) {
        if (static_cast<int>(rows_.size()) != shape_.length())
            throw std::invalid_argument("CompositionTableau: row count does not match shape " + shape_.str());
        for (int i = 1; i <= shape_.length(); ++i) {
            const auto& r = rows_[static_cast<std::size_t>(i - 1)];
            if (static_cast<int>(r.size()) != shape_.part(i))
                throw std::invalid_argument("CompositionTableau: row " + std::to_string(i) + " has the wrong length");
            for (int v : r)
                if (v < 1) throw std::invalid_argument("CompositionTableau: entries must be positive");
        }
    }
    explicit CompositionTableau(std::vector<std::vector<int>> rows) : CompositionTableau(shape_of(rows), rows) {}

    const Composition& shape() const noexcept { return shape_; }
    const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
    int size() const noexcept { return shape_.size(); }
    int rows_count() const noexcept { return shape_.length(); }

    bool contains(int i, int k) const noexcept { return i >= 1 && i <= shape_.length() && k >= 1 && k <= shape_.part(i); }
    int at(int i, int k) const { return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)]; }

    int max_entry() const {
        int m = 0;
        for (const auto& r : rows_)
            for (int v : r) m = std::max(m, v);
        return m;
    }

    std::vector<int> content() const {
        std::vector<int> c(static_cast<std::size_t>(max_entry()), 0);
        for (const auto& r : rows_)
            for (int v : r) ++c[static_cast<std::size_t>(v - 1)];
        return c;
    }

    friend bool operator==(const CompositionTableau&, const CompositionTableau&) = default;

  private:
    static Composition shape_of(const std::vector<std::vector<int>>& rows) {
        std::vector<int> lens;
        for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
        return Composition(std::move(lens));
    }

    Composition shape_;
    std::vector<std::vector<int>> rows_;
};

namespace detail {

inline bool triple_ok(const CompositionTableau& t, int i, int j, int k) {
    const int ai = t.shape().part(i), aj = t.shape().part(j);
    const int below = t.at(j, k), above = t.at(i, k);
    if (below < above) return true;
    if (ai >= aj) {
        // first column is governed by the strict increase down column 1
        if (k == 1) return true;
        return t.at(i, k - 1) < below;
    }
    return above < t.at(j, k + 1);
}

inline bool column_one_ok(const CompositionTableau& t) {
    for (int i = 1; i < t.rows_count(); ++i)
        if (t.at(i, 1) >= t.at(i + 1, 1)) return false;
    return true;
}

inline bool rows_ok(const CompositionTableau& t) {
    for (const auto& r : t.rows())
        for (std::size_t k = 1; k < r.size(); ++k)
            if (r[k] > r[k - 1]) return false;
    return true;
}

}  // namespace detail

/// Conditions (C1) rows weakly decreasing, (C2) first column strictly
/// increasing, (C3) the triple rule.
inline bool is_ssct(const CompositionTableau& t) {
    if (!detail::rows_ok(t) || !detail::column_one_ok(t)) return false;
    const int l = t.rows_count();
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j) {
            const int h = std::min(t.shape().part(i), t.shape().part(j));
            for (int k = 1; k <= h; ++k)
                if (!detail::triple_ok(t, i, j, k)) return false;
        }
    return true;
}

inline bool is_ssct(const Composition& shape, const std::vector<std::vector<int>>& rows) {
    return is_ssct(CompositionTableau(shape, rows));
}

/// Visits every SSCT of the given shape and content. Cells are filled
/// column by column, left to right, top to bottom within a column.
inline void for_each_ssct(const Composition& shape, const Composition& content,
                          const std::function<void(const CompositionTableau&)>& visit) {
    if (shape.size() != content.size())
        throw std::invalid_argument("enumerate_ssct: shape " + shape.str() + " and content " + content.str() +
                                    " have different sizes");
    const int l = shape.length();
    const int width = l == 0 ? 0 : *std::max_element(shape.parts().begin(), shape.parts().end());
    std::vector<std::pair<int, int>> order;
    for (int k = 1; k <= width; ++k)
        for (int i = 1; i <= l; ++i)
            if (k <= shape.part(i)) order.emplace_back(i, k);

    std::vector<std::vector<int>> rows;
    for (int p : shape.parts()) rows.emplace_back(static_cast<std::size_t>(p), 0);
    std::vector<int> remaining = content.parts();
    const int top = content.length();
    auto at = [&](int i, int k) -> int& { return rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)]; };

    // Checks every constraint between (i,k) and cells filled earlier.
    auto locally_ok = [&](int i, int k) {
        const int v = at(i, k);
        if (k > 1 && v > at(i, k - 1)) return false;
        if (k == 1 && i > 1 && at(i - 1, 1) >= v) return false;
        for (int u = 1; u < i; ++u) {
            if (k > shape.part(u)) continue;
            const int above = at(u, k);
            if (above == v) return false;
            if (v < above) continue;
            if (shape.part(u) >= shape.part(i)) {
                if (k > 1 && !(at(u, k - 1) < v)) return false;
            }
        }
        // rule with the cell to the right, applied once column k is known
        if (k > 1) {
            for (int u = 1; u < i; ++u) {
                if (shape.part(u) >= shape.part(i) || k - 1 > shape.part(u)) continue;
                const int a = at(u, k - 1), b = at(i, k - 1);
                if (!(b < a || a < v)) return false;
            }
        }
        return true;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == order.size()) {
            CompositionTableau t(shape, rows);
            if (!is_ssct(t)) throw InvariantError("enumerate_ssct: produced an invalid tableau");
            visit(t);
            return;
        }
        const auto [i, k] = order[idx];
        const int hi = k > 1 ? at(i, k - 1) : top;
        for (int v = 1; v <= hi; ++v) {
            auto& r = remaining[static_cast<std::size_t>(v - 1)];
            if (r == 0) continue;
            at(i, k) = v;
            if (!locally_ok(i, k)) continue;
            --r;
            rec(idx + 1);
            ++r;
        }
        at(i, k) = 0;
    };
    rec(0);
}

inline std::vector<CompositionTableau> enumerate_ssct(const Composition& shape, const Composition& content) {
    std::vector<CompositionTableau> out;
    for_each_ssct(shape, content, [&](const CompositionTableau& t) { out.push_back(t); });
    return out;
}

inline std::vector<CompositionTableau> enumerate_sct(const Composition& shape) {
    return enumerate_ssct(shape, Composition(std::vector<int>(static_cast<std::size_t>(shape.size()), 1)));
}

namespace detail {

/// (leftmost column, rightmost column) of each value 1..max.
inline std::vector<std::pair<int, int>> column_spans(const CompositionTableau& t) {
    std::vector<std::pair<int, int>> span(static_cast<std::size_t>(t.max_entry()), {0, 0});
    for (int i = 1; i <= t.rows_count(); ++i)
        for (int k = 1; k <= t.shape().part(i); ++k) {
            auto& s = span[static_cast<std::size_t>(t.at(i, k) - 1)];
            if (s.first == 0 || k < s.first) s.first = k;
            s.second = std::max(s.second, k);
        }
    return span;
}

}  // namespace detail

/// Des(T) = {i : i lies weakly left of i+1}, returned as a composition.
inline Composition sct_descent_composition(const CompositionTableau& t) {
    const int n = t.size();
    const auto c = t.content();
    if (static_cast<int>(c.size()) != n || std::any_of(c.begin(), c.end(), [](int x) { return x != 1; }))
        throw std::invalid_argument("sct_descent_composition: content is not 1^n");
    const auto span = detail::column_spans(t);
    Subset des;
    for (int i = 1; i < n; ++i)
        if (span[static_cast<std::size_t>(i - 1)].first <= span[static_cast<std::size_t>(i)].first) des.push_back(i);
    return comp(des, n);
}

struct AscentData {
    Subset set;
    int sum = 0;
};

/// Values i whose leftmost occurrence is strictly right of the rightmost i+1.
inline AscentData ssct_asc(const CompositionTableau& t) {
    const auto span = detail::column_spans(t);
    AscentData out;
    for (std::size_t i = 0; i + 1 < span.size(); ++i) {
        if (span[i].first == 0 || span[i + 1].first == 0) continue;
        if (span[i].first > span[i + 1].second) {
            out.set.push_back(static_cast<int>(i) + 1);
            out.sum += static_cast<int>(i) + 1;
        }
    }
    return out;
}

/// Relabels an SCT of descent composition gamma by the parts of beta: value
/// v becomes the index of the part of beta containing v.
inline CompositionTableau refine_relabel(const CompositionTableau& t, const Composition& gamma, const Composition& beta) {
    if (sct_descent_composition(t) != gamma)
        throw std::invalid_argument("refine_relabel: " + gamma.str() + " is not the descent composition");
    if (!is_finer(beta, gamma))
        throw std::invalid_argument("refine_relabel: " + beta.str() + " does not refine " + gamma.str());
    std::vector<int> label;
    for (int m = 1; m <= beta.length(); ++m) label.insert(label.end(), static_cast<std::size_t>(beta.part(m)), m);
    std::vector<std::vector<int>> rows = t.rows();
    for (auto& r : rows)
        for (int& v : r) v = label[static_cast<std::size_t>(v - 1)];
    return CompositionTableau(t.shape(), std::move(rows));
}

}  // namespace hltrans

#endif  // HLTRANS_CTAB_HPP
