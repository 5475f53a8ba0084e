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

#ifndef HLTRANS_VERIFY_HPP
#define HLTRANS_VERIFY_HPP

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "appendix.hpp"
#include "oracle.hpp"
#include "tableaux.hpp"
#include "transition.hpp"

// Self-checks shared by the command line tool and the acceptance runner.

namespace hltrans::verify {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Report {
    std::vector<Check> checks;

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }
    std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
    }
    void add(std::string name, bool passed, std::string detail = {}) {
        checks.push_back({std::move(name), passed, std::move(detail)});
    }
    /// Runs f, recording any exception as a failure.
    void run(const std::string& name, const std::function<std::pair<bool, std::string>()>& f) {
        try {
            auto [ok, detail] = f();
            add(name, ok, std::move(detail));
        } catch (const std::exception& e) {
            add(name, false, std::string("exception: ") + e.what());
        }
    }
    void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

/// Empty string when equal, else the first differing entry.
inline std::string matrix_diff(const TransitionMatrix& want, const TransitionMatrix& got) {
    if (want.rows != got.rows || want.cols != got.cols) return "index lists differ";
    for (std::size_t i = 0; i < want.rows.size(); ++i)
        for (std::size_t j = 0; j < want.cols.size(); ++j)
            if (want.entries[i][j] != got.entries[i][j])
                return "entry (" + want.rows[i].str() + ", " + want.cols[j].str() + "): expected " +
                       want.entries[i][j].str() + ", got " + got.entries[i][j].str();
    return {};
}

inline std::string mname(Basis a, Basis b) { return "M(" + basis_label(a) + "," + basis_label(b) + ")"; }

inline std::pair<bool, std::string> same(const TransitionMatrix& want, const TransitionMatrix& got) {
    std::string d = matrix_diff(want, got);
    return {d.empty(), d};
}

/// Every published degree-4 matrix against its builder.
inline Report appendix_suite() {
    Report r;
    for (const auto& g : golden::degree4())
        r.run("appendix " + mname(g.from, g.to), [&] { return same(g.matrix(), build(g.from, g.to, 4)); });
    return r;
}

/// Inverse pairs, factorizations and specializations for n <= max_n; the
/// tournament and charge matrices stop at max_n_costly.
inline Report identities_suite(int max_n, int max_n_costly = 4) {
    using B = Basis;
    Report r;
    for (int n = 0; n <= max_n; ++n) {
        const std::string at = " n=" + std::to_string(n);
        auto m = [n](B a, B b) { return build(a, b, n); };
        auto inverse = [&](B a, B b) {
            r.run("inverse " + mname(a, b) + mname(b, a) + at, [&] {
                auto p = mat_multiply(m(a, b), m(b, a));
                return std::pair{mat_is_identity(p), std::string(mat_is_identity(p) ? "" : "product is not I")};
            });
        };
        inverse(B::F, B::M);
        inverse(B::G, B::F);
        inverse(B::s, B::m);
        if (n <= max_n_costly) inverse(B::s, B::P);

        auto factor = [&](B a, B mid, B b) {
            r.run("factor " + mname(a, b) + " = " + mname(a, mid) + mname(mid, b) + at,
                  [&] { return same(m(a, b), mat_multiply(m(a, mid), m(mid, b))); });
        };
        factor(B::P, B::F, B::G);
        factor(B::S, B::F, B::G);
        factor(B::K, B::F, B::G);
        factor(B::K, B::F, B::M);
        factor(B::G, B::F, B::M);
        factor(B::M, B::F, B::G);
        factor(B::S, B::F, B::M);
        r.run("factor M(P,F)M(F,M) = M(P,m)M(m,M)" + at, [&] {
            return same(mat_multiply(m(B::P, B::m), m(B::m, B::M)), mat_multiply(m(B::P, B::F), m(B::F, B::M)));
        });
        r.run("factor M(s,F)M(F,M) = M(s,m)M(m,M)" + at, [&] {
            return same(mat_multiply(m(B::s, B::m), m(B::m, B::M)), mat_multiply(m(B::s, B::F), m(B::F, B::M)));
        });
        if (n <= max_n_costly)
            r.run("factor M(s,P)M(P,m) = M(s,m)" + at,
                  [&] { return same(m(B::s, B::m), mat_multiply(m(B::s, B::P), m(B::P, B::m))); });

        auto identity_at = [&](B a, B b, int t0) {
            r.run("specialize " + mname(a, b) + " at t=" + std::to_string(t0) + at, [&] {
                const bool ok = mat_is_identity(mat_specialize(m(a, b), t0));
                return std::pair{ok, std::string(ok ? "" : "not the identity")};
            });
        };
        identity_at(B::P, B::m, 1);
        identity_at(B::G, B::F, 0);
        identity_at(B::G, B::M, 1);
        identity_at(B::F, B::G, 0);
        identity_at(B::M, B::G, 1);
        if (n <= max_n_costly) {
            identity_at(B::s, B::P, 0);
            identity_at(B::P, B::s, 0);
        }
        for (B target : {B::m, B::F}) {
            r.run("specialize " + mname(B::P, target) + " at t=0 equals " + mname(B::s, target) + at, [&] {
                auto s = m(B::s, target);
                auto p = mat_specialize(m(B::P, target), 0);
                p.from = B::s;
                return same(s, p);
            });
        }

        r.run("M(P,G) shortcut agrees with the full sum" + at, [&] {
            BuildOptions full;
            full.corollary_cancel = false;
            return same(build(B::P, B::G, n, full), m(B::P, B::G));
        });
        r.run("M(Q,F) rows are b_lambda times M(P,F) rows" + at, [&] {
            auto q = m(B::Q, B::F);
            auto p = m(B::P, B::F);
            for (std::size_t i = 0; i < p.rows.size(); ++i) {
                const TPoly b = b_partition(Partition(p.rows[i].parts()));
                for (auto& e : p.entries[i]) e *= b;
            }
            p.from = B::Q;
            return same(p, q);
        });
        r.run("grouped M(S,F) rows equal M(s,F)" + at,
              [&] { return same(m(B::s, B::F), group_rows_by_sort(m(B::S, B::F), B::s)); });
        r.run("grouped M(S,M) rows equal M(s,m)M(m,M)" + at, [&] {
            return same(mat_multiply(m(B::s, B::m), m(B::m, B::M)), group_rows_by_sort(m(B::S, B::M), B::s));
        });
    }
    return r;
}

// ---------------------------------------------------------------------------
// standardization

/// Skew shapes lambda/mu with 1 <= |lambda/mu| <= max_cells and |mu| <= max_inner.
inline std::vector<SkewShape> skew_family(int max_cells, int max_inner) {
    std::vector<SkewShape> out;
    for (int k = 0; k <= max_inner; ++k)
        for (const Partition& mu : partitions_of(k))
            for (int n = 1; n <= max_cells; ++n)
                for (const Partition& lambda : partitions_of(n + k))
                    if (lambda.contains(mu)) out.emplace_back(lambda, mu);
    return out;
}

/// All weakly increasing words of length n over [N] with strict steps at `breaks`.
inline std::vector<Word> compatible_words(int n, int nletters, const Subset& breaks) {
    std::vector<Word> out;
    Word w;
    std::function<void(int)> rec = [&](int lo) {
        if (static_cast<int>(w.size()) == n) {
            out.push_back(w);
            return;
        }
        const int k = static_cast<int>(w.size());
        const int from = k > 0 && contains(breaks, k) ? lo + 1 : lo;
        for (int v = from; v <= nletters; ++v) {
            w.push_back(v);
            rec(v);
            w.pop_back();
        }
    };
    rec(1);
    return out;
}

/**
 * Standardization as a bijection between starred semistandard tableaux with
 * entries in [N] and pairs (starred standard tableau, ascent-compatible
 * word), preserving sign, tstat and content. Returns the number of starred
 * semistandard tableaux examined, or throws with a description.
 */
inline long long check_standardization(const SkewShape& shape, int nletters, Variant variant) {
    long long forward = 0;
    for_each_starred_ssyt(shape, nletters, variant, [&](const StarredTableau& t) {
        ++forward;
        auto [s, w] = standardize(t);
        if (!s.base().is_standard()) throw InvariantError("standardize: result is not standard");
        if (!std::is_sorted(w.begin(), w.end())) throw InvariantError("standardize: word not sorted");
        if (!is_compatible(w, ascent_set(s))) throw InvariantError("standardize: word not ascent-compatible");
        if (s.tstat() != t.tstat() || s.sign() != t.sign()) throw InvariantError("standardize: statistics changed");
        if (!(unstandardize(s, w) == t)) throw InvariantError("unstandardize does not invert standardize");
    });
    long long backward = 0;
    for_each_starred_syt(shape, variant, [&](const StarredTableau& s) {
        for (const Word& w : compatible_words(shape.size(), nletters, ascent_set(s))) {
            ++backward;
            StarredTableau t = unstandardize(s, w);
            if (!t.base().is_semistandard()) throw InvariantError("unstandardize: result is not semistandard");
            auto [s2, w2] = standardize(t);
            if (!(s2 == s) || w2 != w) throw InvariantError("standardize does not invert unstandardize");
        }
    });
    if (forward != backward)
        throw InvariantError("standardization: " + std::to_string(forward) + " tableaux vs " + std::to_string(backward) +
                             " pairs");
    return forward;
}

/// Standardization bijections and agreement of the P- and Q-routes on a
/// family of skew shapes, N = number of cells.
inline Report bijection_suite(int max_cells = 5, int max_inner = 3) {
    Report r;
    for (const SkewShape& shape : skew_family(max_cells, max_inner)) {
        const std::string tag = " " + shape.str();
        for (Variant v : {Variant::P, Variant::Q})
            r.run(std::string("standardization ") + (v == Variant::P ? "P" : "Q") + tag, [&] {
                const long long count = check_standardization(shape, shape.size(), v);
                return std::pair{true, std::to_string(count) + " starred tableaux"};
            });
        r.run("P and Q routes agree (F)" + tag, [&] {
            const bool ok = expand_skew(Basis::P, shape, Basis::F) == expand_skew_p_via_q(shape, Basis::F);
            return std::pair{ok, std::string(ok ? "" : "expansions differ")};
        });
        r.run("P and Q routes agree (M)" + tag, [&] {
            const bool ok = expand_skew(Basis::P, shape, Basis::M) == expand_skew_p_via_q(shape, Basis::M);
            return std::pair{ok, std::string(ok ? "" : "expansions differ")};
        });
        r.run("F route pushed to M matches the M route" + tag, [&] {
            const int n = shape.size();
            const auto fm = build(Basis::F, Basis::M, n);
            const auto f = expand_skew(Basis::P, shape, Basis::F);
            QSymExpansion pushed{Basis::M, {}};
            for (std::size_t i = 0; i < fm.rows.size(); ++i)
                for (std::size_t j = 0; j < fm.cols.size(); ++j)
                    if (!fm.entries[i][j].is_zero()) pushed.add(fm.cols[j], f.coeff(fm.rows[i]) * fm.entries[i][j]);
            const bool ok = pushed == expand_skew(Basis::P, shape, Basis::M);
            return std::pair{ok, std::string(ok ? "" : "expansions differ")};
        });
    }
    return r;
}

// ---------------------------------------------------------------------------
// the refinement involution behind M(G,F) M(F,G) = I

/// For alpha != beta every gamma in the interval is paired with a partner of
/// opposite sign and equal t-weight; the alternating sum is delta.
inline Report involution_suite(int max_n) {
    Report r;
    for (int n = 1; n <= max_n; ++n) {
        long long pairs = 0;
        std::string failure;
        const auto comps = compositions_of(n);
        for (const auto& alpha : comps)
            for (const auto& beta : comps) {
                if (!is_finer(beta, alpha) || !failure.empty()) continue;
                TPoly sum;
                for (const auto& gamma : comps) {
                    if (!is_finer(beta, gamma) || !is_finer(gamma, alpha)) continue;
                    const int sgn = (gamma.length() - alpha.length()) % 2 == 0 ? 1 : -1;
                    const int weight = s_stat(alpha, gamma) + g_stat(gamma, beta);
                    sum += TPoly::monomial(weight, sgn);
                    if (alpha == beta) continue;
                    const InvolutionStep step = refinement_involution(alpha, beta, gamma);
                    const Composition& g2 = step.partner;
                    const std::string where = "alpha=" + alpha.str() + " beta=" + beta.str() + " gamma=" + gamma.str();
                    if (!is_finer(beta, g2) || !is_finer(g2, alpha)) failure = "partner leaves the interval at " + where;
                    else if (refinement_involution(alpha, beta, g2).partner != gamma) failure = "not an involution at " + where;
                    else if (std::abs(g2.length() - gamma.length()) != 1) failure = "sign not reversed at " + where;
                    else if (s_stat(alpha, g2) + g_stat(g2, beta) != weight) failure = "weight changed at " + where;
                    else if (step.join && (s_stat(alpha, g2) != s_stat(alpha, gamma) - step.j ||
                                           g_stat(g2, beta) != g_stat(gamma, beta) + step.j))
                        failure = "join move shifts s and g incorrectly at " + where;
                    else if (!step.join && (s_stat(alpha, g2) != s_stat(alpha, gamma) + step.j ||
                                            g_stat(g2, beta) != g_stat(gamma, beta) - step.j))
                        failure = "split move shifts s and g incorrectly at " + where;
                    ++pairs;
                }
                if (failure.empty() && sum != TPoly(alpha == beta ? 1 : 0))
                    failure = "alternating sum is " + sum.str() + " for alpha=" + alpha.str() + " beta=" + beta.str();
            }
        r.add("involution n=" + std::to_string(n), failure.empty(),
              failure.empty() ? std::to_string(pairs) + " paired terms" : failure);
    }
    return r;
}

// ---------------------------------------------------------------------------
// brute-force oracle

inline Report oracle_suite(int max_n) {
    Report r;
    for (int n = 1; n <= std::min(max_n, kOracleMaxVariables); ++n) {
        const std::string at = " n=" + std::to_string(n);
        const auto pM = mat_multiply(build(Basis::P, Basis::m, n), build(Basis::m, Basis::M, n));
        for (std::size_t i = 0; i < pM.rows.size(); ++i) {
            const Partition lambda(pM.rows[i].parts());
            r.run("raw P_" + lambda.str() + " matches the tableau M-expansion" + at, [&] {
                const QSymExpansion e = extract_M(raw_P(lambda, n), n);
                for (std::size_t j = 0; j < pM.cols.size(); ++j)
                    if (e.coeff(pM.cols[j]) != pM.entries[i][j])
                        return std::pair{false, "coefficient of M_" + pM.cols[j].str() + ": expected " +
                                                    pM.entries[i][j].str() + ", got " + e.coeff(pM.cols[j]).str()};
                if (!(e == expand_skew(Basis::P, SkewShape(lambda), Basis::M)))
                    return std::pair{false, std::string("starred-tableau M-expansion differs")};
                return std::pair{true, std::string()};
            });
            if (n <= 3)
                r.run("rendered F-expansion of P_" + lambda.str() + " equals raw P" + at, [&] {
                    const bool ok =
                        render_expansion(expand_skew(Basis::P, SkewShape(lambda), Basis::F), n) == raw_P(lambda, n);
                    return std::pair{ok, std::string(ok ? "" : "polynomials differ")};
                });
            r.run("bialternant s_" + lambda.str() + " equals the tableau sum" + at, [&] {
                const bool ok = raw_schur(lambda, n) == tableau_generating_function(SkewShape(lambda), n);
                return std::pair{ok, std::string(ok ? "" : "polynomials differ")};
            });
        }
        const auto gm = build(Basis::G, Basis::M, n);
        for (std::size_t i = 0; i < gm.rows.size(); ++i) {
            r.run("rendered G_" + gm.rows[i].str() + " matches M(G,M)" + at, [&] {
                QSymExpansion g{Basis::G, {}};
                g.add(gm.rows[i], 1);
                const QSymExpansion e = extract_M(render_expansion(g, n), n);
                for (std::size_t j = 0; j < gm.cols.size(); ++j)
                    if (e.coeff(gm.cols[j]) != gm.entries[i][j])
                        return std::pair{false, "coefficient of M_" + gm.cols[j].str() + " differs"};
                return std::pair{true, std::string()};
            });
        }
    }
    return r;
}

}  // namespace hltrans::verify

#endif  // HLTRANS_VERIFY_HPP
