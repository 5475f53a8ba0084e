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

#ifndef HLTRANS_INDEXSET_HPP
#define HLTRANS_INDEXSET_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tpoly.hpp"

namespace hltrans {

/// A subset of [n-1], kept sorted ascending without duplicates.
using Subset = std::vector<int>;

/**
 * Finite sequence of positive integers. The empty composition is the unique
 * composition of 0.
 */
class Composition {
  public:
    Composition() = default;
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }
    Composition(std::initializer_list<int> parts) : parts_(parts) { validate(); }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    /// 1-based part; 0 past the end.
    int part(int i) const noexcept {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    auto operator<=>(const Composition&) const = default;

    /// "211" when every part is a single digit, "10.2.1" otherwise, "ε" when empty.
    std::string str() const {
        if (parts_.empty()) return "ε";
        bool compact = std::all_of(parts_.begin(), parts_.end(), [](int p) { return p < 10; });
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (!compact && i != 0) s += '.';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

  private:
    void validate() const {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("Composition: parts must be positive");
    }

    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Composition& a) { return os << a.str(); }

/// Weakly decreasing composition. Stored without trailing zeros.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("Partition: parts must weakly decrease");
        }
        parts_ = std::move(parts);
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    /// 1-based part, zero-padded.
    int part(int i) const noexcept {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    /// m_i: number of parts equal to i (i >= 1).
    int multiplicity(int i) const noexcept {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
    }
    /// mu ⊆ this.
    bool contains(const Partition& mu) const noexcept {
        if (mu.length() > length()) return false;
        for (int i = 1; i <= mu.length(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    Composition as_composition() const { return Composition(parts_); }

    auto operator<=>(const Partition&) const = default;

    std::string str() const { return as_composition().str(); }

  private:
    std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

// ---------------------------------------------------------------------------
// subsets of [n-1]

inline bool is_subset(const Subset& a, const Subset& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline bool contains(const Subset& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

inline Subset set_union(const Subset& a, const Subset& b) {
    Subset out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Subset set_symmetric_difference(const Subset& a, const Subset& b) {
    Subset out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// B+1 = {b+1 : b in B} \ {n}
inline Subset shift_up(const Subset& b, int n) {
    Subset out;
    for (int x : b)
        if (x + 1 != n) out.push_back(x + 1);
    return out;
}

/// A-1 = {a-1 : a in A} \ {0}
inline Subset shift_down(const Subset& a) {
    Subset out;
    for (int x : a)
        if (x - 1 != 0) out.push_back(x - 1);
    return out;
}

/// Partial sums excluding the total.
inline Subset sub(const Composition& a) {
    Subset s;
    int acc = 0;
    for (int i = 0; i + 1 < a.length(); ++i) {
        acc += a.parts()[static_cast<std::size_t>(i)];
        s.push_back(acc);
    }
    return s;
}

/// Inverse of sub for compositions of n. Elements must lie in [n-1].
inline Composition comp(Subset t, int n) {
    if (n < 0) throw std::invalid_argument("comp: negative n");
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    for (int x : t)
        if (x < 1 || x > n - 1) throw std::invalid_argument("comp: element " + std::to_string(x) + " outside [n-1]");
    if (n == 0) return {};
    std::vector<int> parts;
    int prev = 0;
    for (int x : t) {
        parts.push_back(x - prev);
        prev = x;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

/// Bit key of sub(a) with position 1 as the most significant of n-1 bits.
inline std::uint64_t canonical_key(const Composition& a) {
    const int n = a.size();
    std::uint64_t key = 0;
    for (int x : sub(a)) key |= std::uint64_t{1} << (n - 1 - x);
    return key;
}

/// Orders by size, then by canonical_key (the order used to print matrices).
struct CanonicalLess {
    bool operator()(const Composition& a, const Composition& b) const {
        int sa = a.size(), sb = b.size();
        if (sa != sb) return sa < sb;
        return canonical_key(a) < canonical_key(b);
    }
};

/// All 2^{n-1} compositions of n in canonical order.
inline std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions_of: negative n");
    if (n == 0) return {Composition{}};
    if (n > 62) throw std::invalid_argument("compositions_of: n too large");
    std::vector<Composition> out;
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    out.reserve(count);
    for (std::uint64_t key = 0; key < count; ++key) {
        Subset s;
        for (int pos = 1; pos <= n - 1; ++pos)
            if (key & (std::uint64_t{1} << (n - 1 - pos))) s.push_back(pos);
        out.push_back(comp(std::move(s), n));
    }
    return out;
}

/// Partitions of n in descending lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// beta ⪰ alpha: sub(alpha) ⊆ sub(beta).
inline bool is_finer(const Composition& beta, const Composition& alpha) {
    if (beta.size() != alpha.size()) throw std::invalid_argument("is_finer: size mismatch");
    return is_subset(sub(alpha), sub(beta));
}

namespace detail {
inline void require_refinement(const Composition& beta, const Composition& alpha, const char* who) {
    if (!is_finer(beta, alpha))
        throw std::invalid_argument(std::string(who) + ": " + beta.str() + " does not refine " + alpha.str());
}
}  // namespace detail

/// Bre(beta, alpha): number of parts of beta making up each part of alpha.
/// Note the argument order: the finer composition comes first.
inline Composition bre(const Composition& beta, const Composition& alpha) {
    detail::require_refinement(beta, alpha, "bre");
    std::vector<int> counts;
    std::size_t j = 0;
    for (int a : alpha.parts()) {
        int acc = 0, cnt = 0;
        while (acc < a) {
            acc += beta.parts()[j++];
            ++cnt;
        }
        counts.push_back(cnt);
    }
    return Composition(std::move(counts));
}

/// s(alpha, beta) = sum_j j (Bre(beta,alpha)_j - 1); beta is the finer one.
inline int s_stat(const Composition& alpha, const Composition& beta) {
    Composition b = bre(beta, alpha);
    int s = 0;
    for (int j = 1; j <= b.length(); ++j) s += j * (b.part(j) - 1);
    return s;
}

/// xi_{alpha,beta}(j) for j = 1..l(beta)-1, stored at index j-1: j when
/// beta_j and beta_{j+1} come from the same part of alpha, else 0.
inline std::vector<int> xi(const Composition& alpha, const Composition& beta) {
    detail::require_refinement(beta, alpha, "xi");
    const Subset sa = sub(alpha);
    const Subset sb = sub(beta);
    std::vector<int> out(sb.size());
    for (std::size_t j = 0; j < sb.size(); ++j) out[j] = contains(sa, sb[j]) ? 0 : static_cast<int>(j) + 1;
    return out;
}

inline int g_stat(const Composition& alpha, const Composition& beta) {
    auto x = xi(alpha, beta);
    return std::accumulate(x.begin(), x.end(), 0);
}

/// Sorted parts, largest first.
inline Partition sort_comp(const Composition& a) {
    std::vector<int> p = a.parts();
    std::sort(p.begin(), p.end(), std::greater<>());
    return Partition(std::move(p));
}

/// No part equal to 1 except possibly the last.
inline bool is_peak_composition(const Composition& a) {
    for (int i = 1; i < a.length(); ++i)
        if (a.part(i) == 1) return false;
    return true;
}

/// Comp'_n in canonical order.
inline std::vector<Composition> peak_compositions(int n) {
    std::vector<Composition> out;
    for (auto& a : compositions_of(n))
        if (is_peak_composition(a)) out.push_back(std::move(a));
    return out;
}

/**
 * The peak-to-G polynomial: for each b_i in sub(beta),
 *   1 + t^i          if b_i is not in A ∪ (A-1),
 *   t^{i-1} + t^i    if b_i in A and b_{i-1} = b_i - 1,
 *   1                otherwise,
 * where A = sub(alpha); the product is zero unless A ⊆ B ∪ (B+1).
 */
inline TPoly k_poly(const Composition& alpha, const Composition& beta) {
    if (!is_peak_composition(alpha))
        throw std::invalid_argument("k_poly: " + alpha.str() + " has an interior part equal to 1");
    if (alpha.size() != beta.size()) throw std::invalid_argument("k_poly: size mismatch");
    const int n = alpha.size();
    const Subset A = sub(alpha);
    const Subset B = sub(beta);
    if (!is_subset(A, set_union(B, shift_up(B, n)))) return {};
    const Subset touched = set_union(A, shift_down(A));
    TPoly prod = 1;
    for (std::size_t idx = 0; idx < B.size(); ++idx) {
        const int i = static_cast<int>(idx) + 1;
        const int b = B[idx];
        if (!contains(touched, b)) {
            prod *= TPoly(1) + TPoly::monomial(i);
        } else if (contains(A, b) && idx > 0 && B[idx - 1] == b - 1) {
            prod *= TPoly::monomial(i - 1) + TPoly::monomial(i);
        }
    }
    return prod;
}

/// One step of the sign-reversing involution on {gamma : beta ⪰ gamma ⪰ alpha},
/// alpha != beta. `join` is true when gamma' merges gamma_j and gamma_{j+1}.
struct InvolutionStep {
    Composition partner;
    int j = 0;
    bool join = false;
};

inline InvolutionStep refinement_involution(const Composition& alpha, const Composition& beta,
                                            const Composition& gamma) {
    if (!is_finer(beta, gamma) || !is_finer(gamma, alpha))
        throw std::invalid_argument("refinement_involution: need beta ⪰ gamma ⪰ alpha");
    if (alpha == beta) throw std::invalid_argument("refinement_involution: alpha == beta has no partner");
    int j = 1;
    while (alpha.part(j) == beta.part(j) && beta.part(j) == gamma.part(j)) ++j;
    std::vector<int> g = gamma.parts();
    const auto jj = static_cast<std::size_t>(j - 1);
    InvolutionStep step;
    step.j = j;
    if (gamma.part(j) == beta.part(j)) {
        step.join = true;
        g[jj] += g[jj + 1];
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(jj) + 1);
    } else {
        const int bj = beta.part(j);
        g[jj] -= bj;
        g.insert(g.begin() + static_cast<std::ptrdiff_t>(jj), bj);
    }
    step.partner = Composition(std::move(g));
    return step;
}

/// Weakly increasing words; w_k < w_{k+1} is required for every k in `breaks`.
using Word = std::vector<int>;

inline bool is_compatible(const Word& w, const Subset& breaks) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (w[k] > w[k + 1]) return false;
        if (w[k] == w[k + 1] && contains(breaks, static_cast<int>(k) + 1)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// skew shapes

/// 1-based matrix coordinates, English convention.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Cell& c) { return os << '(' << c.row << ',' << c.col << ')'; }

/// lambda/mu with mu ⊆ lambda.
class SkewShape {
  public:
    SkewShape() = default;
    explicit SkewShape(Partition outer, Partition inner = {}) : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (!outer_.contains(inner_))
            throw std::invalid_argument("SkewShape: " + inner_.str() + " is not contained in " + outer_.str());
    }

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    int size() const noexcept { return outer_.size() - inner_.size(); }
    int rows() const noexcept { return outer_.length(); }
    bool is_straight() const noexcept { return inner_.empty(); }

    /// First column of row i that belongs to the skew diagram.
    int row_begin(int i) const noexcept { return inner_.part(i) + 1; }
    int row_end(int i) const noexcept { return outer_.part(i); }
    int row_size(int i) const noexcept { return outer_.part(i) - inner_.part(i); }

    bool contains(int i, int j) const noexcept {
        return i >= 1 && i <= rows() && j > inner_.part(i) && j <= outer_.part(i);
    }
    bool contains(Cell c) const noexcept { return contains(c.row, c.col); }
    bool in_inner(int i, int j) const noexcept { return i >= 1 && j >= 1 && j <= inner_.part(i); }

    /// Row-major order.
    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int i = 1; i <= rows(); ++i)
            for (int j = row_begin(i); j <= row_end(i); ++j) out.push_back({i, j});
        return out;
    }

    auto operator<=>(const SkewShape&) const = default;

    /// "3.2/1" style; the inner part is omitted for straight shapes.
    std::string str() const {
        auto dotted = [](const Partition& p) {
            std::string s;
            for (std::size_t i = 0; i < p.parts().size(); ++i) {
                if (i) s += '.';
                s += std::to_string(p.parts()[i]);
            }
            return s.empty() ? std::string("0") : s;
        };
        return inner_.empty() ? dotted(outer_) : dotted(outer_) + "/" + dotted(inner_);
    }

  private:
    Partition outer_;
    Partition inner_;
};

}  // namespace hltrans

#endif  // HLTRANS_INDEXSET_HPP
