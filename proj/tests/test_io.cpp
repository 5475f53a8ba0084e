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

#include "hltrans/io.hpp"

using namespace hltrans;

TEST(Json, PolynomialRoundTrip) {
    const TPoly p = parse_tpoly("3-5t+t^2+t^3");
    EXPECT_EQ(io::to_json(p).dump(), "[3,-5,1,1]");
    EXPECT_EQ(io::tpoly_from_json(io::to_json(p)), p);
    EXPECT_EQ(io::to_json(TPoly()).dump(), "[]");
    const TPoly big = TPoly(std::vector<Integer>{Integer("107507208733336176461620"), -1});
    const auto j = io::to_json(big);
    EXPECT_TRUE(j[0].is_string());
    EXPECT_EQ(io::tpoly_from_json(j), big);
    EXPECT_THROW(io::tpoly_from_json(nlohmann::json::parse("[1.5]")), std::invalid_argument);
    EXPECT_THROW(io::tpoly_from_json(nlohmann::json::parse("{}")), std::invalid_argument);
}

TEST(Json, MatrixRoundTrip) {
    for (const auto& [from, to] : supported_pairs()) {
        const auto m = build(from, to, 3);
        ASSERT_EQ(io::matrix_from_json(nlohmann::json::parse(io::to_json(m).dump())), m);
    }
    auto j = io::to_json(build(Basis::F, Basis::M, 2));
    j["entries"][0].erase(0);
    EXPECT_THROW(io::matrix_from_json(j), std::invalid_argument);
    j = io::to_json(build(Basis::F, Basis::M, 2));
    j["from"] = "X";
    EXPECT_THROW(io::matrix_from_json(j), std::invalid_argument);
}

TEST(Json, ExpansionRoundTrip) {
    const auto e = expand_skew(Basis::P, SkewShape(Partition{3, 2}, Partition{1}), Basis::F);
    EXPECT_EQ(io::expansion_from_json(io::to_json(e)), e);
    const auto j = io::to_json(expand_skew(Basis::P, SkewShape(Partition{2, 1}), Basis::F));
    EXPECT_EQ(j["basis"], "F");
    EXPECT_EQ(j["terms"].size(), 3u);
}

TEST(Text, MatrixGrid) {
    const std::string s = io::to_text(build(Basis::F, Basis::M, 2));
    EXPECT_EQ(s, "M(F,M)  2  11\n2       1  1\n11      0  1\n");
    const std::string tex = io::to_latex(build(Basis::F, Basis::G, 3));
    EXPECT_NE(tex.find("\\bordermatrix"), std::string::npos);
    EXPECT_NE(tex.find(" & t^3"), std::string::npos);
    EXPECT_NE(io::to_latex(build(Basis::S, Basis::G, 2)).find("\\mathcal{S}"), std::string::npos);
}

TEST(Text, Expansion) {
    EXPECT_EQ(io::to_text(expand_skew(Basis::P, SkewShape(Partition{2, 1}), Basis::F)),
              "F_21: 1\nF_12: 1\nF_111: -t^2 - t\n");
    EXPECT_EQ(io::to_text(QSymExpansion{Basis::F, {}}), "0\n");
}

TEST(Parse, Parts) {
    EXPECT_EQ(io::parse_parts("3.2.1").parts, (std::vector<int>{3, 2, 1}));
    EXPECT_FALSE(io::parse_parts("3.2.1").shorthand);
    EXPECT_EQ(io::parse_parts("321").parts, (std::vector<int>{3, 2, 1}));
    EXPECT_TRUE(io::parse_parts("321").shorthand);
    EXPECT_FALSE(io::parse_parts("7").shorthand);
    EXPECT_EQ(io::parse_parts("12.1").parts, (std::vector<int>{12, 1}));
    EXPECT_TRUE(io::parse_parts("0").parts.empty());
    EXPECT_TRUE(io::parse_parts("").parts.empty());
    for (const char* bad : {"3..1", "3.", ".3", "3,1", "a", "3.0", "302"})
        EXPECT_THROW(io::parse_parts(bad), std::invalid_argument) << bad;
}

TEST(Parse, Shapes) {
    const auto s = io::parse_shape("3.2/1");
    EXPECT_EQ(s.shape, SkewShape(Partition{3, 2}, Partition{1}));
    EXPECT_FALSE(s.shorthand);
    EXPECT_TRUE(io::parse_shape("32/1").shorthand);
    EXPECT_EQ(io::parse_shape("2.1").shape, SkewShape(Partition{2, 1}));
    EXPECT_THROW(io::parse_shape("1.2"), std::invalid_argument);
    EXPECT_THROW(io::parse_shape("2/3"), std::invalid_argument);
}
