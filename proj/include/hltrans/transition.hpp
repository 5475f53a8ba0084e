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

#ifndef HLTRANS_TRANSITION_HPP
#define HLTRANS_TRANSITION_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctab.hpp"
#include "indexset.hpp"
#include "kernels.hpp"
#include "tableaux.hpp"
#include "tpoly.hpp"

namespace hltrans {

enum class Basis { m, s, P, Q, M, F, G, S, K };

inline std::string basis_label(Basis b) {
    switch (b) {
        case Basis::m: return "m";
        case Basis::s: return "s";
        case Basis::P: return "P";
        case Basis::Q: return "Q";
        case Basis::M: return "M";
        case Basis::F: return "F";
        case Basis::G: return "G";
        case Basis::S: return "S";
        case Basis::K: return "K";
    }
    return "?";
}

inline Basis parse_basis(std::string_view label) {
    static const std::pair<std::string_view, Basis> table[] = {
        {"m", Basis::m}, {"s", Basis::s}, {"P", Basis::P}, {"Q", Basis::Q}, {"M", Basis::M},
        {"F", Basis::F}, {"G", Basis::G}, {"S", Basis::S}, {"K", Basis::K},
    };
    for (const auto& [name, b] : table)
        if (name == label) return b;
    throw std::invalid_argument("unknown basis '" + std::string(label) + "'");
}

inline bool is_symmetric_basis(Basis b) { return b == Basis::m || b == Basis::s || b == Basis::P || b == Basis::Q; }

/// Row or column labels for a basis in degree n. Symmetric bases use
/// partitions, K uses compositions without interior 1s, the rest use all
/// compositions.
inline std::vector<Composition> index_list(Basis b, int n) {
    std::vector<Composition> out;
    if (is_symmetric_basis(b)) {
        for (const auto& p : partitions_of(n)) out.push_back(p.as_composition());
    } else if (b == Basis::K) {
        out = peak_compositions(n);
    } else {
        out = compositions_of(n);
    }
    return out;
}

struct TransitionMatrix {
    Basis from = Basis::F;
    Basis to = Basis::F;
    int n = 0;
    std::vector<Composition> rows;
    std::vector<Composition> cols;
    std::vector<std::vector<TPoly>> entries;

    const TPoly& at(std::size_t i, std::size_t j) const { return entries[i][j]; }

    /// Entry by labels; throws if either label is absent.
    const TPoly& entry(const Composition& row, const Composition& col) const {
        auto r = std::find(rows.begin(), rows.end(), row);
        auto c = std::find(cols.begin(), cols.end(), col);
        if (r == rows.end() || c == cols.end())
            throw std::invalid_argument("TransitionMatrix::entry: no entry (" + row.str() + ", " + col.str() + ")");
        return entries[static_cast<std::size_t>(r - rows.begin())][static_cast<std::size_t>(c - cols.begin())];
    }

    friend bool operator==(const TransitionMatrix& a, const TransitionMatrix& b) {
        return a.from == b.from && a.to == b.to && a.n == b.n && a.rows == b.rows && a.cols == b.cols &&
               a.entries == b.entries;
    }
};

/// Single entries of M(G,F) and M(G,M), usable at any n.
inline TPoly g_to_f(const Composition& a, const Composition& b) {
    if (a.size() != b.size() || !is_finer(b, a)) return {};
    const int gap = b.length() - a.length();
    return TPoly::monomial(s_stat(a, b), gap % 2 == 0 ? 1 : -1);
}

inline TPoly g_to_m(const Composition& a, const Composition& b) {
    if (a.size() != b.size() || !is_finer(b, a)) return {};
    const Composition r = bre(b, a);
    TPoly p = 1;
    for (int i = 1; i <= r.length(); ++i) p *= pow(one_minus_t_pow(i), static_cast<unsigned>(r.part(i) - 1));
    return p;
}

struct BuildOptions {
    /// Skip tableaux whose contribution to M(P,G) vanishes identically.
    bool corollary_cancel = true;
    /// Allow tournament enumeration beyond the default size limit.
    bool force_tournaments = false;
};

namespace detail {

inline TransitionMatrix fill(Basis from, Basis to, int n,
                             const std::function<TPoly(const Composition&, const Composition&)>& f) {
    TransitionMatrix out{from, to, n, index_list(from, n), index_list(to, n), {}};
    out.entries.assign(out.rows.size(), std::vector<TPoly>(out.cols.size()));
    for (std::size_t i = 0; i < out.rows.size(); ++i)
        for (std::size_t j = 0; j < out.cols.size(); ++j) out.entries[i][j] = f(out.rows[i], out.cols[j]);
    return out;
}

/// Fills a matrix row by row from a map of column label to entry.
inline TransitionMatrix fill_rows(Basis from, Basis to, int n,
                                  const std::function<std::map<Composition, TPoly, CanonicalLess>(const Composition&)>& row) {
    TransitionMatrix out{from, to, n, index_list(from, n), index_list(to, n), {}};
    out.entries.assign(out.rows.size(), std::vector<TPoly>(out.cols.size()));
    for (std::size_t i = 0; i < out.rows.size(); ++i) {
        auto terms = row(out.rows[i]);
        for (std::size_t j = 0; j < out.cols.size(); ++j)
            if (auto it = terms.find(out.cols[j]); it != terms.end()) out.entries[i][j] = it->second;
    }
    return out;
}

inline Partition as_partition(const Composition& a) { return Partition(a.parts()); }

inline int sign_of_length_gap(const Composition& alpha, const Composition& beta) {
    return (beta.length() - alpha.length()) % 2 == 0 ? 1 : -1;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// coefficient constructors

/// (1-t)(1-t^2)...(1-t^r)
inline TPoly phi_r(int r) {
    if (r < 0) throw std::invalid_argument("phi_r: negative argument");
    TPoly p = 1;
    for (int i = 1; i <= r; ++i) p *= one_minus_t_pow(i);
    return p;
}

/// prod over i of phi_{m_i(lambda)}
inline TPoly b_partition(const Partition& lambda) {
    TPoly p = 1;
    const int top = lambda.part(1);
    for (int i = 1; i <= top; ++i) p *= phi_r(lambda.multiplicity(i));
    return p;
}

/// b_lambda / b_mu kept as a fraction; it need not be a polynomial.
struct BRatio {
    TPoly num;
    TPoly den;

    std::optional<TPoly> exact() const { return exact_div(num, den); }
    /// Applies the ratio to p, which must make the division exact.
    TPoly scale(const TPoly& p) const { return divide_exact(p * num, den); }
    /// Inverse scaling: p * den / num.
    TPoly unscale(const TPoly& p) const { return divide_exact(p * den, num); }
};

inline BRatio b_skew(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu))
        throw std::invalid_argument("b_skew: " + mu.str() + " is not contained in " + lambda.str());
    return {b_partition(lambda), b_partition(mu)};
}

// ---------------------------------------------------------------------------
// skew expansions

struct QSymExpansion {
    Basis basis = Basis::F;
    std::map<Composition, TPoly, CanonicalLess> terms;

    void add(const Composition& key, const TPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    TPoly coeff(const Composition& key) const {
        auto it = terms.find(key);
        return it == terms.end() ? TPoly() : it->second;
    }

    friend bool operator==(const QSymExpansion&, const QSymExpansion&) = default;
};

/**
 * F- or M-expansion of P_{lambda/mu} or Q_{lambda/mu}. The F route sums
 * over starred standard tableaux; the M route sums psi_T (P) or phi_T (Q)
 * over semistandard tableaux of each composition content.
 */
inline QSymExpansion expand_skew(Basis which, const SkewShape& shape, Basis target) {
    if (which != Basis::P && which != Basis::Q) throw std::invalid_argument("expand_skew: function must be P or Q");
    if (target != Basis::F && target != Basis::M) throw std::invalid_argument("expand_skew: basis must be F or M");
    QSymExpansion out{target, {}};
    const int n = shape.size();
    if (target == Basis::F) {
        const Variant v = which == Basis::P ? Variant::P : Variant::Q;
        for_each_starred_syt(shape, v, [&](const StarredTableau& s) {
            out.add(ascent_composition(s), TPoly::monomial(s.tstat(), s.sign()));
        });
    } else {
        for (const Composition& alpha : compositions_of(n)) {
            TPoly c;
            for_each_ssyt(shape, alpha.length(), alpha,
                          [&](const Tableau& t) { c += which == Basis::P ? psi_poly(t) : phi_poly(t); });
            out.add(alpha, c);
        }
    }
    return out;
}

/// P_{lambda/mu} obtained from the Q-route by dividing out b_{lambda/mu}.
inline QSymExpansion expand_skew_p_via_q(const SkewShape& shape, Basis target) {
    QSymExpansion q = expand_skew(Basis::Q, shape, target);
    const BRatio b = b_skew(shape.outer(), shape.inner());
    QSymExpansion out{target, {}};
    for (const auto& [k, c] : q.terms) out.add(k, b.unscale(c));
    return out;
}

// ---------------------------------------------------------------------------
// builders

namespace detail {

inline TransitionMatrix build_s_m(int n) {
    return fill(Basis::s, Basis::m, n, [](const Composition& l, const Composition& nu) {
        Integer count = 0;
        for_each_ssyt(SkewShape(as_partition(l)), nu.length(), nu, [&](const Tableau&) { ++count; });
        return TPoly(std::vector<Integer>{count});
    });
}

inline TransitionMatrix build_m_s(int n) {
    return fill(Basis::m, Basis::s, n, [](const Composition& l, const Composition& mu) {
        return TPoly(std::vector<Integer>{srht_signed_count(as_partition(l), as_partition(mu))});
    });
}

inline TransitionMatrix build_s_P(int n) {
    return fill(Basis::s, Basis::P, n, [](const Composition& l, const Composition& mu) {
        TPoly sum;
        for_each_ssyt(SkewShape(as_partition(l)), mu.length(), mu,
                      [&](const Tableau& t) { sum += TPoly::monomial(charge_tableau(t)); });
        return sum;
    });
}

inline TransitionMatrix build_P_s(int n, const BuildOptions& opts) {
    return fill(Basis::P, Basis::s, n, [&](const Composition& l, const Composition& mu) {
        return tournament_entry(as_partition(l), as_partition(mu), opts.force_tournaments);
    });
}

inline TransitionMatrix build_P_m(int n) {
    return fill(Basis::P, Basis::m, n, [](const Composition& l, const Composition& nu) {
        TPoly sum;
        for_each_ssyt(SkewShape(as_partition(l)), nu.length(), nu, [&](const Tableau& t) { sum += psi_poly(t); });
        return sum;
    });
}

inline TransitionMatrix build_s_F(int n) {
    return fill_rows(Basis::s, Basis::F, n, [](const Composition& l) {
        std::map<Composition, TPoly, CanonicalLess> row;
        for_each_syt(SkewShape(as_partition(l)), [&](const Tableau& s) { row[des_composition(s)] += 1; });
        return row;
    });
}

inline TransitionMatrix build_m_M(int n) {
    return fill(Basis::m, Basis::M, n, [](const Composition& l, const Composition& beta) {
        return TPoly(sort_comp(beta).as_composition() == l ? 1 : 0);
    });
}

inline TransitionMatrix build_F_M(int n) {
    return fill(Basis::F, Basis::M, n, [](const Composition& a, const Composition& b) {
        return TPoly(is_finer(b, a) ? 1 : 0);
    });
}

inline TransitionMatrix build_M_F(int n) {
    return fill(Basis::M, Basis::F, n, [](const Composition& a, const Composition& b) {
        return is_finer(b, a) ? TPoly(sign_of_length_gap(a, b)) : TPoly();
    });
}

inline TransitionMatrix build_G_F(int n) { return fill(Basis::G, Basis::F, n, g_to_f); }
inline TransitionMatrix build_G_M(int n) { return fill(Basis::G, Basis::M, n, g_to_m); }

inline TransitionMatrix build_S_M(int n) {
    return fill(Basis::S, Basis::M, n, [](const Composition& a, const Composition& b) {
        Integer count = 0;
        for_each_ssct(a, b, [&](const CompositionTableau&) { ++count; });
        return TPoly(std::vector<Integer>{count});
    });
}

inline TransitionMatrix build_S_F(int n) {
    return fill_rows(Basis::S, Basis::F, n, [](const Composition& a) {
        std::map<Composition, TPoly, CanonicalLess> row;
        for (const auto& t : enumerate_sct(a)) row[sct_descent_composition(t)] += 1;
        return row;
    });
}

inline TransitionMatrix build_S_G(int n) {
    return fill(Basis::S, Basis::G, n, [](const Composition& a, const Composition& b) {
        TPoly sum;
        for_each_ssct(a, b, [&](const CompositionTableau& t) { sum += TPoly::monomial(ssct_asc(t).sum); });
        return sum;
    });
}

inline TransitionMatrix build_K_F(int n) {
    return fill(Basis::K, Basis::F, n, [n](const Composition& a, const Composition& b) {
        const Subset B = sub(b);
        return TPoly(is_subset(sub(a), set_symmetric_difference(B, shift_up(B, n))) ? 1 : 0);
    });
}

inline TransitionMatrix build_K_M(int n) {
    return fill(Basis::K, Basis::M, n, [n](const Composition& a, const Composition& b) {
        const Subset B = sub(b);
        if (!is_subset(sub(a), set_union(B, shift_up(B, n)))) return TPoly();
        return TPoly::monomial(0, Integer(1) << (b.length() - a.length()));
    });
}

inline TransitionMatrix build_K_G(int n) {
    return fill(Basis::K, Basis::G, n, [](const Composition& a, const Composition& b) { return k_poly(a, b); });
}

inline TransitionMatrix build_P_F(int n) {
    return fill_rows(Basis::P, Basis::F, n,
                     [](const Composition& l) { return expand_skew(Basis::P, SkewShape(as_partition(l)), Basis::F).terms; });
}

inline TransitionMatrix build_Q_F(int n) {
    return fill_rows(Basis::Q, Basis::F, n,
                     [](const Composition& l) { return expand_skew(Basis::Q, SkewShape(as_partition(l)), Basis::F).terms; });
}

inline TransitionMatrix build_F_G(int n) {
    return fill(Basis::F, Basis::G, n, [](const Composition& a, const Composition& b) {
        return is_finer(b, a) ? TPoly::monomial(g_stat(a, b)) : TPoly();
    });
}

inline TransitionMatrix build_M_G(int n) {
    return fill(Basis::M, Basis::G, n, [](const Composition& a, const Composition& b) {
        if (!is_finer(b, a)) return TPoly();
        const auto x = xi(a, b);
        TPoly p = sign_of_length_gap(a, b);
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x[j] != 0) p *= one_minus_t_pow(static_cast<int>(j) + 1);
        return p;
    });
}

/// One tableau's contribution to M(P,G)_{lambda,beta}; zero when it cancels.
inline TPoly pg_term(const Tableau& s, const Subset& des, const std::vector<Cell>& espec,
                     const std::vector<WeightedCell>& spec, const Subset& B, bool corollary_cancel) {
    auto rank = [&](int j) { return static_cast<int>(std::upper_bound(B.begin(), B.end(), j) - B.begin()); };
    auto is_espec = [&](Cell c) { return std::find(espec.begin(), espec.end(), c) != espec.end(); };
    TPoly first = 1, second = 1;
    for (const auto& wc : spec) {
        const int j = s.at(wc.cell) - 1;
        if (is_espec(wc.cell)) {
            if (!contains(B, j)) continue;
            const int m = rank(j);
            if (corollary_cancel && m == wc.weight) return TPoly();
            first *= TPoly::monomial(m) - TPoly::monomial(wc.weight);
        } else {
            const int mprime = contains(B, j) && !contains(des, j) ? rank(j) : 0;
            second *= one_minus_t_pow(wc.weight).shifted(mprime);
        }
    }
    return first * second;
}

inline TransitionMatrix build_P_G(int n, const BuildOptions& opts) {
    return fill_rows(Basis::P, Basis::G, n, [&](const Composition& l) {
        std::map<Composition, TPoly, CanonicalLess> row;
        const auto cols = compositions_of(n);
        for_each_syt(SkewShape(as_partition(l)), [&](const Tableau& s) {
            const Subset des = des_set(s);
            const auto espec = espec_cells(s);
            const auto spec = special_cells(s);
            for (const Composition& beta : cols) {
                const Subset B = sub(beta);
                if (!is_subset(des, B)) continue;
                TPoly term = pg_term(s, des, espec, spec, B, opts.corollary_cancel);
                if (!term.is_zero()) row[beta] += term;
            }
        });
        for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : std::next(it);
        return row;
    });
}

}  // namespace detail

inline std::vector<std::pair<Basis, Basis>> supported_pairs() {
    using B = Basis;
    return {{B::s, B::m}, {B::m, B::s}, {B::s, B::P}, {B::P, B::s}, {B::P, B::m}, {B::s, B::F},
            {B::m, B::M}, {B::F, B::M}, {B::M, B::F}, {B::G, B::F}, {B::G, B::M}, {B::S, B::M},
            {B::S, B::F}, {B::K, B::F}, {B::K, B::M}, {B::P, B::F}, {B::Q, B::F}, {B::F, B::G},
            {B::M, B::G}, {B::P, B::G}, {B::S, B::G}, {B::K, B::G}};
}

inline bool is_supported(Basis from, Basis to) {
    const auto pairs = supported_pairs();
    return std::find(pairs.begin(), pairs.end(), std::pair{from, to}) != pairs.end();
}

/// M(from, to) in degree n.
inline TransitionMatrix build(Basis from, Basis to, int n, const BuildOptions& opts = {}) {
    if (n < 0) throw std::invalid_argument("build: negative degree");
    using B = Basis;
    auto is = [&](B a, B b) { return from == a && to == b; };
    if (is(B::s, B::m)) return detail::build_s_m(n);
    if (is(B::m, B::s)) return detail::build_m_s(n);
    if (is(B::s, B::P)) return detail::build_s_P(n);
    if (is(B::P, B::s)) return detail::build_P_s(n, opts);
    if (is(B::P, B::m)) return detail::build_P_m(n);
    if (is(B::s, B::F)) return detail::build_s_F(n);
    if (is(B::m, B::M)) return detail::build_m_M(n);
    if (is(B::F, B::M)) return detail::build_F_M(n);
    if (is(B::M, B::F)) return detail::build_M_F(n);
    if (is(B::G, B::F)) return detail::build_G_F(n);
    if (is(B::G, B::M)) return detail::build_G_M(n);
    if (is(B::S, B::M)) return detail::build_S_M(n);
    if (is(B::S, B::F)) return detail::build_S_F(n);
    if (is(B::K, B::F)) return detail::build_K_F(n);
    if (is(B::K, B::M)) return detail::build_K_M(n);
    if (is(B::P, B::F)) return detail::build_P_F(n);
    if (is(B::Q, B::F)) return detail::build_Q_F(n);
    if (is(B::F, B::G)) return detail::build_F_G(n);
    if (is(B::M, B::G)) return detail::build_M_G(n);
    if (is(B::P, B::G)) return detail::build_P_G(n, opts);
    if (is(B::S, B::G)) return detail::build_S_G(n);
    if (is(B::K, B::G)) return detail::build_K_G(n);
    throw std::invalid_argument("build: unsupported pair M(" + basis_label(from) + "," + basis_label(to) + ")");
}

// ---------------------------------------------------------------------------
// matrix algebra

inline TransitionMatrix mat_multiply(const TransitionMatrix& a, const TransitionMatrix& b) {
    if (a.to != b.from)
        throw std::invalid_argument("mat_multiply: basis mismatch " + basis_label(a.to) + " vs " + basis_label(b.from));
    if (a.cols != b.rows) throw std::invalid_argument("mat_multiply: index lists differ");
    TransitionMatrix out{a.from, b.to, a.n, a.rows, b.cols, {}};
    out.entries.assign(a.rows.size(), std::vector<TPoly>(b.cols.size()));
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        for (std::size_t k = 0; k < a.cols.size(); ++k) {
            const TPoly& x = a.entries[i][k];
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols.size(); ++j)
                if (!b.entries[k][j].is_zero()) out.entries[i][j] += x * b.entries[k][j];
        }
    return out;
}

inline bool mat_is_identity(const TransitionMatrix& a) {
    if (a.rows != a.cols) return false;
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        for (std::size_t j = 0; j < a.cols.size(); ++j)
            if (a.entries[i][j] != TPoly(i == j ? 1 : 0)) return false;
    return true;
}

/// Entries evaluated at t = t0; the result has constant entries.
inline TransitionMatrix mat_specialize(const TransitionMatrix& a, int t0) {
    if (t0 != 0 && t0 != 1) throw std::invalid_argument("mat_specialize: t must be 0 or 1");
    TransitionMatrix out = a;
    for (auto& row : out.entries)
        for (auto& e : row) e = TPoly(std::vector<Integer>{e.eval(t0)});
    return out;
}

/// Row-sum grouping: sums rows of a over row labels with the same sorted
/// partition, reindexing by partitions.
inline TransitionMatrix group_rows_by_sort(const TransitionMatrix& a, Basis new_from) {
    TransitionMatrix out{new_from, a.to, a.n, index_list(new_from, a.n), a.cols, {}};
    out.entries.assign(out.rows.size(), std::vector<TPoly>(out.cols.size()));
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        const Composition key = sort_comp(a.rows[i]).as_composition();
        const auto r = static_cast<std::size_t>(std::find(out.rows.begin(), out.rows.end(), key) - out.rows.begin());
        for (std::size_t j = 0; j < a.cols.size(); ++j) out.entries[r][j] += a.entries[i][j];
    }
    return out;
}

}  // namespace hltrans

#endif  // HLTRANS_TRANSITION_HPP
