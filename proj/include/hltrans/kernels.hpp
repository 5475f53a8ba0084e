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

#ifndef HLTRANS_KERNELS_HPP
#define HLTRANS_KERNELS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "indexset.hpp"
#include "tableaux.hpp"
#include "tpoly.hpp"

namespace hltrans {

// ---------------------------------------------------------------------------
// charge

/// chg of a permutation of [n]: sum of n-k over k with k+1 left of k.
inline int permutation_charge(const Word& w) {
    const int n = static_cast<int>(w.size());
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, -1);
    for (int i = 0; i < n; ++i) {
        const int x = w[static_cast<std::size_t>(i)];
        if (x < 1 || x > n || pos[static_cast<std::size_t>(x)] != -1)
            throw std::invalid_argument("permutation_charge: not a permutation");
        pos[static_cast<std::size_t>(x)] = i;
    }
    int c = 0;
    for (int k = 1; k < n; ++k)
        if (pos[static_cast<std::size_t>(k) + 1] < pos[static_cast<std::size_t>(k)]) c += n - k;
    return c;
}

/// Splits a word of partition content into standard subwords: mark the first
/// 1, then the next 2 after it (wrapping around), and so on up to the largest
/// remaining symbol.
inline std::vector<Word> charge_extraction(const Word& w) {
    int top = 0;
    for (int x : w) {
        if (x < 1) throw std::invalid_argument("charge: letters must be positive");
        top = std::max(top, x);
    }
    std::vector<int> mult(static_cast<std::size_t>(top) + 1, 0);
    for (int x : w) ++mult[static_cast<std::size_t>(x)];
    for (int k = 1; k < top; ++k)
        if (mult[static_cast<std::size_t>(k) + 1] > mult[static_cast<std::size_t>(k)])
            throw std::invalid_argument("charge: content is not a partition");

    std::vector<Word> out;
    std::vector<bool> used(w.size(), false);
    std::size_t left = w.size();
    const std::size_t len = w.size();
    while (left > 0) {
        int largest = 0;
        for (std::size_t i = 0; i < len; ++i)
            if (!used[i]) largest = std::max(largest, w[i]);
        std::vector<bool> mark(len, false);
        std::size_t cursor = 0;
        for (int sym = 1; sym <= largest; ++sym) {
            std::size_t found = len;
            for (std::size_t step = 0; step < len; ++step) {
                const std::size_t i = (cursor + step) % len;
                if (!used[i] && w[i] == sym) {
                    found = i;
                    break;
                }
            }
            if (found == len) throw InvariantError("charge: symbol " + std::to_string(sym) + " missing");
            mark[found] = true;
            cursor = found;
        }
        Word perm;
        for (std::size_t i = 0; i < len; ++i)
            if (mark[i]) {
                perm.push_back(w[i]);
                used[i] = true;
                --left;
            }
        out.push_back(std::move(perm));
    }
    return out;
}

inline int charge(const Word& w) {
    int c = 0;
    for (const Word& p : charge_extraction(w)) c += permutation_charge(p);
    return c;
}

/// Charge of the reading word (top row first, rows right to left).
inline int charge_tableau(const Tableau& t) {
    if (!t.shape().is_straight()) throw std::invalid_argument("charge_tableau: shape must be straight");
    return charge(t.reading_word());
}

// ---------------------------------------------------------------------------
// special rim-hook tableaux

/// A dissection of a diagram into special rim hooks; each hook is listed from
/// its cell in column 1 upward and to the right.
struct RimHookTableau {
    Partition shape;
    std::vector<std::vector<Cell>> hooks;

    int sign() const {
        int s = 1;
        for (const auto& h : hooks) {
            int lo = h.front().row, hi = h.front().row;
            for (const Cell& c : h) {
                lo = std::min(lo, c.row);
                hi = std::max(hi, c.row);
            }
            if ((hi - lo) % 2 == 1) s = -s;
        }
        return s;
    }

    Partition type() const {
        std::vector<int> lens;
        for (const auto& h : hooks) lens.push_back(static_cast<int>(h.size()));
        std::sort(lens.rbegin(), lens.rend());
        return Partition(std::move(lens));
    }
};

namespace detail {

/// Removing the special hook from the bottom-left cell that ends in row r.
inline std::vector<int> peel_hook(const std::vector<int>& nu, int r) {
    const int l = static_cast<int>(nu.size());
    std::vector<int> rest(nu.begin(), nu.begin() + (r - 1));
    for (int i = r; i < l; ++i) rest.push_back(nu[static_cast<std::size_t>(i)] - 1);
    while (!rest.empty() && rest.back() == 0) rest.pop_back();
    return rest;
}

/// Cells of that hook, from (l,1) up and to the right.
inline std::vector<Cell> hook_cells(const std::vector<int>& nu, int r) {
    const int l = static_cast<int>(nu.size());
    std::vector<Cell> cells;
    for (int i = l; i >= r; --i) {
        const int from = i == l ? 1 : nu[static_cast<std::size_t>(i)];
        for (int j = from; j <= nu[static_cast<std::size_t>(i - 1)]; ++j) cells.push_back({i, j});
    }
    return cells;
}

}  // namespace detail

/// All special rim-hook tableaux of the given shape, in peeling order.
inline std::vector<RimHookTableau> enumerate_rim_hook_tableaux(const Partition& shape) {
    std::vector<RimHookTableau> out;
    std::vector<std::vector<Cell>> hooks;
    std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& nu) {
        if (nu.empty()) {
            out.push_back({shape, hooks});
            return;
        }
        const int l = static_cast<int>(nu.size());
        for (int r = 1; r <= l; ++r) {
            hooks.push_back(detail::hook_cells(nu, r));
            rec(detail::peel_hook(nu, r));
            hooks.pop_back();
        }
    };
    rec(shape.parts());
    return out;
}

/// Sum of signs over special rim-hook tableaux of shape mu and type lambda.
inline Integer srht_signed_count(const Partition& type, const Partition& shape) {
    if (type.size() != shape.size()) throw std::invalid_argument("srht_signed_count: sizes differ");
    using Key = std::pair<std::vector<int>, std::vector<int>>;
    std::map<Key, Integer> memo;
    // `need` holds the multiplicity of each hook length still to be placed.
    std::function<Integer(const std::vector<int>&, std::vector<int>&)> rec = [&](const std::vector<int>& nu,
                                                                                 std::vector<int>& need) -> Integer {
        if (nu.empty()) return 1;
        Key key{nu, need};
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Integer total = 0;
        const int l = static_cast<int>(nu.size());
        for (int r = 1; r <= l; ++r) {
            const int len = nu[static_cast<std::size_t>(r - 1)] + l - r;
            if (len >= static_cast<int>(need.size()) || need[static_cast<std::size_t>(len)] == 0) continue;
            --need[static_cast<std::size_t>(len)];
            Integer sub_total = rec(detail::peel_hook(nu, r), need);
            ++need[static_cast<std::size_t>(len)];
            if ((l - r) % 2 == 1) sub_total = -sub_total;
            total += sub_total;
        }
        memo.emplace(std::move(key), total);
        return total;
    };
    std::vector<int> need(static_cast<std::size_t>(type.size()) + 1, 0);
    for (int p : type.parts()) ++need[static_cast<std::size_t>(p)];
    return rec(shape.parts(), need);
}

// ---------------------------------------------------------------------------
// special tournament matrices

class TournamentMatrix {
  public:
    explicit TournamentMatrix(int n) : n_(n), b_(static_cast<std::size_t>(n * n), 0) {}
    TournamentMatrix(int n, std::vector<int> entries) : n_(n), b_(std::move(entries)) {
        if (static_cast<int>(b_.size()) != n * n) throw std::invalid_argument("TournamentMatrix: wrong entry count");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const int x = b_[static_cast<std::size_t>(i * n + j)];
                if (x != 0 && x != 1) throw std::invalid_argument("TournamentMatrix: entries must be 0/1");
                if (i == j ? x != 0 : x + b_[static_cast<std::size_t>(j * n + i)] != 1)
                    throw std::invalid_argument("TournamentMatrix: not a tournament");
            }
    }

    int n() const noexcept { return n_; }
    /// 1-based access.
    int at(int i, int j) const { return b_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))]; }
    void set_pair(int i, int j) {
        b_[static_cast<std::size_t>((i - 1) * n_ + (j - 1))] = 1;
        b_[static_cast<std::size_t>((j - 1) * n_ + (i - 1))] = 0;
    }
    int row_sum(int i) const {
        int s = 0;
        for (int j = 1; j <= n_; ++j) s += at(i, j);
        return s;
    }
    /// Number of ones below the diagonal.
    int weight() const {
        int w = 0;
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j < i; ++j) w += at(i, j);
        return w;
    }
    bool is_special(const Partition& lambda) const {
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j)
                if (lambda.part(i) == lambda.part(j) && at(i, j) != 1) return false;
        return true;
    }

  private:
    int n_;
    std::vector<int> b_;
};

struct TypedTournament {
    TournamentMatrix matrix;
    int sign;
    int weight;
};

inline constexpr int kMaxTournamentSize = 7;

/// Special tournaments of type lambda and shape mu, n = max(l(lambda), l(mu)).
inline void for_each_special_tournament(const Partition& lambda, const Partition& mu,
                                        const std::function<void(const TypedTournament&)>& visit,
                                        bool force = false) {
    const int n = std::max(lambda.length(), mu.length());
    if (n > kMaxTournamentSize && !force)
        throw std::invalid_argument("tournament enumeration refused for n = " + std::to_string(n) + " > " +
                                    std::to_string(kMaxTournamentSize));
    if (n == 0) {
        visit({TournamentMatrix(0), 1, 0});
        return;
    }
    std::vector<int> target(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) target[static_cast<std::size_t>(i - 1)] = mu.part(i) + n - i;

    TournamentMatrix base(n);
    std::vector<std::pair<int, int>> free;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (lambda.part(i) == lambda.part(j))
                base.set_pair(i, j);
            else
                free.emplace_back(i, j);
        }
    if (free.size() >= 63) throw std::invalid_argument("tournament enumeration: too many free entries");
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
        TournamentMatrix b = base;
        for (std::size_t k = 0; k < free.size(); ++k) {
            auto [i, j] = free[k];
            if (bits & (std::uint64_t{1} << k))
                b.set_pair(j, i);
            else
                b.set_pair(i, j);
        }
        // w(i) is the position of row i's total in the target sequence
        std::vector<int> w(static_cast<std::size_t>(n));
        bool ok = true;
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int i = 1; i <= n && ok; ++i) {
            const int v = lambda.part(i) + b.row_sum(i);
            auto it = std::find(target.begin(), target.end(), v);
            if (it == target.end()) {
                ok = false;
                break;
            }
            const auto p = static_cast<std::size_t>(it - target.begin());
            if (seen[p]) ok = false;
            seen[p] = true;
            w[static_cast<std::size_t>(i - 1)] = static_cast<int>(p);
        }
        if (!ok) continue;
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(j)]) ++inversions;
        visit({b, inversions % 2 == 0 ? 1 : -1, b.weight()});
    }
}

/// sum over special tournaments of sgn(B) (-t)^wt(B)
inline TPoly tournament_entry(const Partition& lambda, const Partition& mu, bool force = false) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("tournament_entry: sizes differ");
    TPoly sum;
    for_each_special_tournament(
        lambda, mu,
        [&](const TypedTournament& tt) {
            const int s = tt.weight % 2 == 0 ? tt.sign : -tt.sign;
            sum += TPoly::monomial(tt.weight, s);
        },
        force);
    return sum;
}

}  // namespace hltrans

#endif  // HLTRANS_KERNELS_HPP
