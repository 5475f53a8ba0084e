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

#include <gtest/gtest.h>

#include <set>

#include "hltrans/ctab.hpp"
#include "hltrans/transition.hpp"

using namespace hltrans;

namespace {

using Rows = std::vector<std::vector<int>>;

/*
 * Independent membership test in the zero-padded form: extend every row with
 * zeros to the widest row; for rows i < j and k >= 2, a nonzero T(j,k) with
 * T(j,k) >= T(i,k) must exceed T(i,k-1).
 */
bool padded_rule(const Composition& shape, const Rows& rows) {
    const int m = shape.length();
    int width = 0;
    for (int p : shape.parts()) width = std::max(width, p);
    std::vector<std::vector<int>> a(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(width) + 1, 0));
    for (int i = 0; i < m; ++i)
        for (std::size_t k = 0; k < rows[static_cast<std::size_t>(i)].size(); ++k)
            a[static_cast<std::size_t>(i)][k + 1] = rows[static_cast<std::size_t>(i)][k];
    auto at = [&](int i, int k) { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]; };
    for (int i = 0; i < m; ++i)
        for (int k = 2; k <= shape.part(i + 1); ++k)
            if (at(i, k) > at(i, k - 1)) return false;
    for (int i = 0; i + 1 < m; ++i)
        if (at(i, 1) >= at(i + 1, 1)) return false;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = 2; k <= width; ++k) {
                const int c = at(j, k);
                if (c != 0 && c >= at(i, k) && c <= at(i, k - 1)) return false;
            }
    return true;
}

}  // namespace

TEST(CompositionTableau, PublishedFillings) {
    EXPECT_TRUE(is_ssct({5, 2, 6, 4}, Rows{{3, 2, 2, 1, 1}, {4, 1}, {7, 5, 5, 5, 3, 3}, {8, 8, 6, 6}}));
    EXPECT_TRUE(is_ssct({5, 2, 7, 4}, Rows{{2, 2, 2, 1, 1}, {4, 3}, {7, 5, 5, 5, 3, 3, 1}, {8, 8, 6, 6}}));
    EXPECT_TRUE(is_ssct({4}, Rows{{5, 5, 2, 1}}));
    EXPECT_FALSE(is_ssct({2, 2}, Rows{{1, 1}, {1, 1}}));
    EXPECT_FALSE(is_ssct({2}, Rows{{1, 2}}));
    EXPECT_THROW(CompositionTableau(Composition{2}, Rows{{1}}), std::invalid_argument);
}

TEST(CompositionTableau, EnumerationExamples) {
    EXPECT_EQ(enumerate_ssct({1, 3}, {1, 1, 2}).size(), 2u);
    EXPECT_EQ(enumerate_ssct({4}, {4}).size(), 1u);
    EXPECT_EQ(enumerate_ssct({2, 2}, {1, 2, 1}).size(), 1u);
    const auto sct = enumerate_sct({1, 3});
    ASSERT_EQ(sct.size(), 2u);
    std::set<Rows> got{sct[0].rows(), sct[1].rows()};
    EXPECT_EQ(got, (std::set<Rows>{{{1}, {4, 3, 2}}, {{2}, {4, 3, 1}}}));
}

TEST(CompositionTableau, DescentCompositions) {
    const CompositionTableau big({5, 2, 6, 4},
                                 Rows{{8, 5, 4, 2, 1}, {9, 3}, {15, 12, 11, 10, 7, 6}, {17, 16, 14, 13}});
    ASSERT_TRUE(is_ssct(big));
    EXPECT_EQ(sct_descent_composition(big), (Composition{3, 2, 3, 1, 3, 3, 2}));
    EXPECT_EQ(sct_descent_composition(CompositionTableau({1, 3}, Rows{{1}, {4, 3, 2}})), (Composition{1, 3}));
    EXPECT_EQ(sct_descent_composition(CompositionTableau({1, 3}, Rows{{2}, {4, 3, 1}})), (Composition{2, 2}));
    EXPECT_EQ(sct_descent_composition(CompositionTableau({5}, Rows{{5, 4, 3, 2, 1}})), (Composition{5}));
}

TEST(CompositionTableau, AscentsAndRelabeling) {
    const CompositionTableau tp({5, 2, 7, 4}, Rows{{2, 2, 2, 1, 1}, {4, 3}, {7, 5, 5, 5, 3, 3, 1}, {8, 8, 6, 6}});
    const AscentData a = ssct_asc(tp);
    EXPECT_EQ(a.set, (Subset{1, 3, 6}));
    EXPECT_EQ(a.sum, 10);

    const CompositionTableau t({5, 2, 7, 4},
                               Rows{{6, 5, 4, 3, 2}, {10, 9}, {16, 13, 12, 11, 8, 7, 1}, {18, 17, 15, 14}});
    const Composition gamma{6, 4, 3, 3, 2}, beta{3, 3, 3, 1, 3, 2, 1, 2};
    EXPECT_EQ(sct_descent_composition(t), gamma);
    EXPECT_EQ(refine_relabel(t, gamma, beta), tp);
    EXPECT_EQ(g_stat(gamma, beta), 10);

    const AscentData flat = ssct_asc(CompositionTableau({3}, Rows{{1, 1, 1}}));
    EXPECT_TRUE(flat.set.empty());
    EXPECT_EQ(flat.sum, 0);
    EXPECT_EQ(ssct_asc(refine_relabel(t, gamma, gamma)).sum, 0);
}

TEST(CompositionTableau, RelabelingIsABijection) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& alpha : compositions_of(n))
            for (const auto& beta : compositions_of(n)) {
                std::multiset<Rows> images;
                for (const auto& gamma : compositions_of(n)) {
                    if (!is_finer(beta, gamma)) continue;
                    for (const auto& t : enumerate_sct(alpha)) {
                        if (sct_descent_composition(t) != gamma) continue;
                        const auto tp = refine_relabel(t, gamma, beta);
                        ASSERT_TRUE(is_ssct(tp));
                        ASSERT_EQ(ssct_asc(tp).sum, g_stat(gamma, beta));
                        images.insert(tp.rows());
                    }
                }
                std::multiset<Rows> all;
                for (const auto& t : enumerate_ssct(alpha, beta)) all.insert(t.rows());
                ASSERT_EQ(images, all) << alpha << " " << beta;
            }
}

TEST(CompositionTableau, PaddedRuleOracleAgrees) {
    // every row-decreasing filling with values in [n] of shapes up to 5 cells
    for (int n = 1; n <= 5; ++n)
        for (const auto& alpha : compositions_of(n)) {
            std::set<Rows> oracle;
            std::vector<int> vals(static_cast<std::size_t>(n), 1);
            while (true) {
                Rows rows;
                std::size_t k = 0;
                for (int p : alpha.parts()) {
                    rows.emplace_back(vals.begin() + static_cast<std::ptrdiff_t>(k),
                                      vals.begin() + static_cast<std::ptrdiff_t>(k + static_cast<std::size_t>(p)));
                    k += static_cast<std::size_t>(p);
                }
                if (padded_rule(alpha, rows)) oracle.insert(rows);
                ASSERT_EQ(is_ssct(alpha, rows), padded_rule(alpha, rows)) << alpha;
                std::size_t i = 0;
                while (i < vals.size() && vals[i] == n) vals[i++] = 1;
                if (i == vals.size()) break;
                ++vals[i];
            }
            // fillings using exactly the values 1..max have a composition content
            std::set<Rows> with_content;
            for (const auto& r : oracle) {
                std::set<int> used;
                for (const auto& row : r) used.insert(row.begin(), row.end());
                if (static_cast<int>(used.size()) == *used.rbegin()) with_content.insert(r);
            }
            std::set<Rows> listed;
            for (const auto& beta : compositions_of(n))
                for (const auto& t : enumerate_ssct(alpha, beta)) listed.insert(t.rows());
            ASSERT_EQ(listed, with_content) << alpha;
        }
}

TEST(CompositionTableau, SumOverSortedShapesIsSchur) {
    for (int n = 1; n <= 5; ++n) {
        const auto sm = mat_multiply(build(Basis::s, Basis::m, n), build(Basis::m, Basis::M, n));
        const auto grouped = group_rows_by_sort(build(Basis::S, Basis::M, n), Basis::s);
        EXPECT_EQ(grouped.entries, sm.entries) << n;
        const auto sct_total = [&] {
            std::size_t c = 0;
            for (const auto& a : compositions_of(n)) c += enumerate_sct(a).size();
            return c;
        }();
        std::size_t syt_total = 0;
        for (const auto& row : build(Basis::s, Basis::F, n).entries)
            for (const auto& e : row) syt_total += static_cast<std::size_t>(e.specialize01(1));
        EXPECT_EQ(sct_total, syt_total);
    }
}
