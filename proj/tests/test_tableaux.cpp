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

#include "hltrans/appendix.hpp"
#include "hltrans/tableaux.hpp"

using namespace hltrans;

namespace {

Tableau straight(std::vector<std::vector<int>> rows) { return Tableau(std::move(rows)); }

// The 8654 tableau with seven special cells.
Tableau eight_six_five_four() {
    return straight({{1, 1, 1, 2, 2, 4, 5, 5}, {2, 2, 3, 3, 6, 8}, {3, 3, 4, 4, 7}, {5, 5, 5, 5}});
}

// The starred standard tableau of shape 65211.
StarredTableau six_five_two_one_one() {
    return StarredTableau(straight({{1, 2, 3, 8, 9, 15}, {4, 6, 7, 13, 14}, {5, 12}, {10}, {11}}),
                          {{1, 4}, {1, 6}, {2, 3}, {2, 4}});
}

// Independent count of standard fillings of a straight shape.
long long hook_length_count(const Partition& lambda) {
    const int n = lambda.size();
    long double num = 1;
    for (int k = 2; k <= n; ++k) num *= k;
    long double den = 1;
    std::vector<int> conj(static_cast<std::size_t>(lambda.part(1)) + 1, 0);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) ++conj[static_cast<std::size_t>(j)];
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            den *= (lambda.part(i) - j) + (conj[static_cast<std::size_t>(j)] - i) + 1;
    return static_cast<long long>(num / den + 0.5L);
}

std::vector<SkewShape> small_shapes(int max_cells) {
    std::vector<SkewShape> out;
    for (int n = 0; n <= max_cells + 2; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int m = 0; m <= n; ++m)
                for (const auto& mu : partitions_of(m)) {
                    if (!lambda.contains(mu) || n - m > max_cells || n - m == 0) continue;
                    out.emplace_back(lambda, mu);
                }
    return out;
}

}  // namespace

TEST(Tableau, ValidatesShapeAndOrder) {
    EXPECT_THROW(straight({{1, 2}, {3, 4, 5}}), std::invalid_argument);
    EXPECT_TRUE(straight({{1, 1}, {2}}).is_semistandard());
    EXPECT_FALSE(straight({{1, 1}, {1}}).is_semistandard());
    EXPECT_FALSE(straight({{2, 1}}).is_semistandard());
    EXPECT_TRUE(straight({{1, 3}, {2}}).is_standard());
    EXPECT_FALSE(straight({{1, 1}, {2}}).is_standard());
    EXPECT_EQ(straight({{1, 2, 3}, {4, 5}}).reading_word(), (Word{3, 2, 1, 5, 4}));
}

TEST(Enumeration, SemistandardExamples) {
    EXPECT_EQ(enumerate_ssyt(SkewShape(Partition{3, 1}), 3, Composition{2, 1, 1}).size(), 2u);
    const auto single = enumerate_ssyt(SkewShape(Partition{1}), 4);
    ASSERT_EQ(single.size(), 4u);
    for (int i = 1; i <= 4; ++i) EXPECT_EQ(single[static_cast<std::size_t>(i - 1)].at(1, 1), i);
    EXPECT_EQ(enumerate_ssyt(SkewShape(Partition{2, 1}), 3, Composition{1, 1, 1}).size(), 2u);
}

TEST(Enumeration, StandardExamples) {
    const auto five = enumerate_syt(SkewShape(Partition{3, 2}));
    ASSERT_EQ(five.size(), 5u);
    EXPECT_EQ(five.front().rows(), (std::vector<std::vector<int>>{{1, 2, 3}, {4, 5}}));
    EXPECT_EQ(five.back().rows(), (std::vector<std::vector<int>>{{1, 3, 5}, {2, 4}}));
    EXPECT_EQ(enumerate_syt(SkewShape(Partition{6})).size(), 1u);
    EXPECT_EQ(enumerate_syt(SkewShape(Partition{2, 2})).size(), 2u);
}

TEST(Enumeration, HookLengthOracle) {
    for (int n = 1; n <= 8; ++n)
        for (const auto& lambda : partitions_of(n))
            ASSERT_EQ(static_cast<long long>(enumerate_syt(SkewShape(lambda)).size()), hook_length_count(lambda))
                << lambda;
}

TEST(Enumeration, KostkaNumbersMatchAppendix) {
    const auto& golden = golden::degree4().front();
    ASSERT_EQ(golden.from, Basis::s);
    ASSERT_EQ(golden.to, Basis::m);
    const auto ps = partitions_of(4);
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j) {
            const auto n = enumerate_ssyt(SkewShape(ps[i]), 4, ps[j].as_composition()).size();
            EXPECT_EQ(std::to_string(n), golden.entries[i][j]) << ps[i] << " " << ps[j];
        }
}

TEST(Enumeration, BruteForceFillings) {
    // every filling of the cells by [N], filtered by the definition
    for (const auto& shape : small_shapes(4)) {
        const int N = 3;
        const auto cells = shape.cells();
        std::set<std::vector<std::vector<int>>> brute;
        std::vector<int> vals(cells.size(), 1);
        while (true) {
            std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
            for (std::size_t k = 0; k < cells.size(); ++k) rows[static_cast<std::size_t>(cells[k].row - 1)].push_back(vals[k]);
            if (Tableau(shape, rows).is_semistandard()) brute.insert(rows);
            std::size_t k = 0;
            while (k < vals.size() && vals[k] == N) vals[k++] = 1;
            if (k == vals.size()) break;
            ++vals[k];
        }
        std::set<std::vector<std::vector<int>>> listed;
        for (const auto& t : enumerate_ssyt(shape, N)) listed.insert(t.rows());
        ASSERT_EQ(listed, brute) << shape.str();
    }
}

TEST(SpecialCells, EightSixFiveFour) {
    const Tableau t = eight_six_five_four();
    const auto spec = special_cells(t);
    const std::vector<WeightedCell> want{{{1, 4}, 1}, {{1, 6}, 1}, {{1, 7}, 1}, {{2, 5}, 3},
                                         {{2, 6}, 2}, {{3, 3}, 1}, {{3, 5}, 2}};
    EXPECT_EQ(spec, want);
    EXPECT_EQ(psi_poly(t), parse_tpoly("(1-t)^4(1-t^2)^2(1-t^3)"));
    const StarredTableau starred(t, {{1, 4}, {1, 6}, {2, 6}});
    EXPECT_EQ(starred.sign(), -1);
    EXPECT_EQ(starred.tstat(), 4);
    EXPECT_THROW(StarredTableau(t, {{1, 5}}), std::invalid_argument);
}

TEST(SpecialCells, TrivialCases) {
    EXPECT_TRUE(special_cells(straight({{1}, {2}, {3}})).empty());
    EXPECT_EQ(psi_poly(straight({{1, 2, 3, 4}})), pow(one_minus_t_pow(1), 3));
    std::vector<TPoly> psis;
    for (const auto& s : enumerate_syt(SkewShape(Partition{2, 1}))) psis.push_back(psi_poly(s));
    EXPECT_EQ(psis, (std::vector<TPoly>{parse_tpoly("1-t"), parse_tpoly("1-t^2")}));
}

TEST(SpecialCells, StandardTableauxEveryNonFirstColumnCell) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& s : enumerate_syt(SkewShape(lambda))) {
                std::vector<Cell> want;
                for (const Cell& c : s.shape().cells())
                    if (c.col > 1) want.push_back(c);
                std::vector<Cell> got;
                int total = 0;
                for (const auto& wc : special_cells(s)) {
                    got.push_back(wc.cell);
                    total += wc.weight;
                }
                ASSERT_EQ(got, want);
                ASSERT_EQ(psi_poly(s).degree(), total);
                ASSERT_EQ(qspecial_cells(s).size(), s.shape().cells().size());
                const auto es = espec_cells(s);
                ASSERT_TRUE(std::includes(want.begin(), want.end(), es.begin(), es.end()));
            }
}

TEST(SpecialCells, QVersionExamples) {
    const auto q = qspecial_cells(straight({{1, 1}}));
    ASSERT_EQ(q.size(), 1u);
    EXPECT_EQ(q[0].cell, (Cell{1, 2}));
    EXPECT_EQ(q[0].weight, 1);
    // rows (1 1)/(2): (1,1) holds 1 which recurs in column 2; (1,2) and (2,1) are Q-special
    const auto q21 = qspecial_cells(straight({{1, 1}, {2}}));
    std::vector<Cell> cells;
    for (const auto& wc : q21) cells.push_back(wc.cell);
    EXPECT_EQ(cells, (std::vector<Cell>{{1, 2}, {2, 1}}));
}

TEST(SpecialCells, FiltrationAgreesWithQCells) {
    for (const auto& shape : small_shapes(5))
        for (const auto& t : enumerate_ssyt(shape, std::min(5, shape.size()))) {
            ASSERT_EQ(phi_poly(t), phi_poly_from_cells(t)) << shape.str();
            ASSERT_EQ(psi_poly(t).specialize01(0), 1);
        }
}

TEST(Ascents, TableOne) {
    const auto syt = enumerate_syt(SkewShape(Partition{3, 2}));
    const std::vector<Subset> des{{3}, {2, 4}, {2}, {1, 4}, {1, 3}};
    // espec listed by the entries the cells hold
    const std::vector<std::vector<int>> espec{{2, 3, 5}, {2}, {2, 4, 5}, {3, 4}, {3, 5}};
    for (std::size_t i = 0; i < syt.size(); ++i) {
        EXPECT_EQ(des_set(syt[i]), des[i]);
        std::vector<int> held;
        for (const Cell& c : espec_cells(syt[i])) held.push_back(syt[i].at(c));
        std::sort(held.begin(), held.end());
        EXPECT_EQ(held, espec[i]) << i;
    }
}

TEST(Ascents, StarredExample) {
    const StarredTableau s = six_five_two_one_one();
    EXPECT_EQ(ascent_set(s), (Subset{3, 4, 6, 7, 9, 10, 14}));
    EXPECT_EQ(ascent_composition(s), (Composition{3, 1, 2, 1, 2, 1, 4, 1}));
    EXPECT_EQ(s.tstat(), 6);
    EXPECT_EQ(s.sign(), 1);
}

TEST(Ascents, EmptyStarsGiveDescents) {
    for (const auto& s : enumerate_syt(SkewShape(Partition{3, 2, 1}))) {
        EXPECT_EQ(asc_set(s, {}), des_set(s));
        EXPECT_EQ(ascent_set(StarredTableau(s, {})), des_set(s));
    }
}

TEST(Ascents, SingleRowHasNoExtraSpecialDescents) {
    for (int n = 1; n <= 5; ++n) {
        const auto s = enumerate_syt(SkewShape(Partition{n})).front();
        EXPECT_TRUE(espec_cells(s).size() == static_cast<std::size_t>(n - 1));
        EXPECT_TRUE(des_set(s).empty());
    }
}

TEST(Standardization, EightSixFiveFour) {
    const StarredTableau t(eight_six_five_four(), {{1, 4}, {1, 6}, {2, 6}});
    const auto [s, w] = standardize(t);
    EXPECT_EQ(s.base().rows(), (std::vector<std::vector<int>>{
                                   {1, 2, 3, 6, 7, 14, 19, 20}, {4, 5, 10, 11, 21, 23}, {8, 9, 12, 13, 22}, {15, 16, 17, 18}}));
    EXPECT_EQ(s.stars(), t.stars());
    Word want;
    for (char ch : std::string("11122223333444555555678")) want.push_back(ch - '0');
    EXPECT_EQ(w, want);
    EXPECT_EQ(ascent_set(s), (Subset{3, 7, 11, 14, 20, 21, 22}));
    EXPECT_TRUE(is_compatible(w, ascent_set(s)));
    EXPECT_EQ(unstandardize(s, w).base(), t.base());
    EXPECT_EQ(s.tstat(), t.tstat());
}

TEST(Standardization, UnstandardizeExample) {
    const StarredTableau s = six_five_two_one_one();
    const Word w{1, 1, 1, 2, 3, 3, 4, 5, 5, 6, 7, 8, 8, 8, 9};
    const StarredTableau t = unstandardize(s, w);
    EXPECT_EQ(t.base().rows(),
              (std::vector<std::vector<int>>{{1, 1, 1, 5, 5, 9}, {2, 3, 4, 8, 8}, {3, 8}, {6}, {7}}));
    EXPECT_EQ(t.stars(), s.stars());
    EXPECT_EQ(standardize(t).first.base(), s.base());
    EXPECT_EQ(standardize(t).second, w);
    EXPECT_THROW(unstandardize(s, Word{1, 1, 1, 1, 3, 3, 4, 5, 5, 6, 7, 8, 8, 8, 9}), std::invalid_argument);
}

TEST(Standardization, FixedPointsAndRoundTrips) {
    const Tableau s = straight({{1, 2, 4}, {3, 5}});
    const auto [st, w] = standardize(s);
    EXPECT_EQ(st, s);
    EXPECT_EQ(w, (Word{1, 2, 3, 4, 5}));
    const StarredTableau ss(s, {{1, 2}});
    EXPECT_EQ(unstandardize(ss, Word{1, 2, 3, 4, 5}).base(), s);

    for (const auto& [shape, N] : std::vector<std::pair<Partition, int>>{{{2, 1}, 3}, {{2, 2}, 3}})
        for (Variant v : {Variant::P, Variant::Q})
            for_each_starred_ssyt(SkewShape(shape), N, v, [&](const StarredTableau& t) {
                const auto [s2, w2] = standardize(t);
                ASSERT_TRUE(s2.base().is_standard());
                ASSERT_TRUE(is_compatible(w2, ascent_set(s2)));
                const StarredTableau back = unstandardize(s2, w2);
                ASSERT_EQ(back.base(), t.base());
                ASSERT_EQ(back.stars(), t.stars());
                ASSERT_EQ(back.sign(), t.sign());
                ASSERT_EQ(back.tstat(), t.tstat());
            });
}
