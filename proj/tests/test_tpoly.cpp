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

#include "gen.hpp"
#include "hltrans/tpoly.hpp"

using namespace hltrans;

TEST(TPoly, ZeroAndNormalization) {
    EXPECT_TRUE(TPoly().is_zero());
    EXPECT_TRUE(TPoly({0, 0, 0}).is_zero());
    EXPECT_EQ(TPoly({1, 2, 0, 0}).degree(), 1);
    EXPECT_EQ(TPoly().degree(), -1);
    EXPECT_EQ(TPoly({1, -1}) - TPoly({1, -1}), TPoly());
}

TEST(TPoly, WorkedProduct) {
    // (t^2 - t)(1 - t) + (t^3 - t^2)(1 - t)
    const TPoly lhs = (TPoly({0, -1, 1}) * TPoly({1, -1})) + (TPoly({0, 0, -1, 1}) * TPoly({1, -1}));
    EXPECT_EQ(lhs, TPoly({0, -1, 1, 1, -1}));
    EXPECT_EQ(lhs.str(), "-t^4 + t^3 + t^2 - t");
}

TEST(TPoly, Specializations) {
    const TPoly p = parse_tpoly("(1-t)^3");
    EXPECT_EQ(p.specialize01(0), 1);
    EXPECT_EQ(p.specialize01(1), 0);
    EXPECT_EQ(p.eval(2), -1);
    EXPECT_THROW(p.specialize01(2), std::invalid_argument);
}

TEST(TPoly, Rendering) {
    EXPECT_EQ(TPoly().str(), "0");
    EXPECT_EQ(TPoly(-3).str(), "-3");
    EXPECT_EQ(TPoly({0, 1}).str(), "t");
    EXPECT_EQ(TPoly({1, 0, -2}).str(), "-2t^2 + 1");
    EXPECT_EQ(TPoly::monomial(12).str(true), "t^{12}");
    EXPECT_EQ(TPoly::monomial(12).str(), "t^12");
}

TEST(TPoly, ParserAcceptsPrintedForms) {
    EXPECT_EQ(parse_tpoly("3-5t+t^2+t^3"), TPoly({3, -5, 1, 1}));
    EXPECT_EQ(parse_tpoly("2(1-t)"), TPoly({2, -2}));
    EXPECT_EQ(parse_tpoly("(1+t)(1+t^2)(1+t^3)"), TPoly({1, 1, 1, 2, 1, 1, 1}));
    EXPECT_EQ(parse_tpoly("-t^3 + 3t^2 - 3t + 1"), pow(TPoly({1, -1}), 3));
    EXPECT_EQ(parse_tpoly("t^{10}"), TPoly::monomial(10));
    EXPECT_EQ(parse_tpoly("0"), TPoly());
    EXPECT_THROW(parse_tpoly("1+"), std::invalid_argument);
    EXPECT_THROW(parse_tpoly("x"), std::invalid_argument);
}

TEST(TPoly, QIntegersAndFactorials) {
    EXPECT_EQ(t_integer(0), TPoly());
    EXPECT_EQ(t_integer(3), TPoly({1, 1, 1}));
    EXPECT_EQ(t_factorial(0), TPoly(1));
    EXPECT_EQ(t_factorial(3), TPoly({1, 2, 2, 1}));
    EXPECT_EQ(t_factorial(5).specialize01(1), 120);
}

TEST(TPoly, Division) {
    const TPoly a = parse_tpoly("(1-t)(1-t^2)(1+t^5)");
    EXPECT_EQ(divide_exact(a, one_minus_t_pow(2)), parse_tpoly("(1-t)(1+t^5)"));
    EXPECT_FALSE(exact_div(TPoly({1, 1}), TPoly({1, -1})).has_value());
    EXPECT_FALSE(divmod(TPoly({1, 1}), TPoly({0, 2})).has_value());
    EXPECT_THROW(divide_exact(TPoly({1, 1}), TPoly({1, -1})), InvariantError);
    EXPECT_THROW(divmod(TPoly(1), TPoly()), std::invalid_argument);
}

TEST(TPoly, BigCoefficients) {
    const TPoly p = pow(TPoly({1, 1}), 80);
    EXPECT_EQ(p.coeff(40), Integer("107507208733336176461620"));
    EXPECT_EQ(p.eval(1), Integer(1) << 80);
}

TEST(TPolyProperty, RingAxioms) {
    proptest::Gen g(0x5eed);
    for (int trial = 0; trial < 1000; ++trial) {
        const TPoly a = g.tpoly(), b = g.tpoly(), c = g.tpoly();
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a - a, TPoly());
        ASSERT_EQ(a * TPoly(1), a);
        ASSERT_EQ(a * TPoly(), TPoly());
        const int k = g.uniform(0, 5);
        ASSERT_EQ(a.shifted(k), a * TPoly::monomial(k));
        const Integer x = g.uniform(-4, 4);
        ASSERT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
        ASSERT_EQ((a + b).eval(x), a.eval(x) + b.eval(x));
    }
}

TEST(TPolyProperty, DivisionRecoversFactor) {
    proptest::Gen g(0xd1f);
    for (int trial = 0; trial < 300; ++trial) {
        const TPoly a = g.tpoly();
        TPoly d = g.tpoly(4);
        if (d.is_zero()) d = 1;
        // monic up to sign so the long division stays in Z[t]
        std::vector<Integer> cs = d.coeffs();
        cs.back() = g.coin() ? 1 : -1;
        d = TPoly(cs);
        ASSERT_EQ(divide_exact(a * d, d), a);
        const auto qr = divmod(a, d);
        ASSERT_TRUE(qr.has_value());
        ASSERT_EQ(qr->first * d + qr->second, a);
        if (d.degree() > 0)
            ASSERT_LT(qr->second.degree(), d.degree());
        else
            ASSERT_TRUE(qr->second.is_zero());
    }
}

TEST(TPolyProperty, StringRoundTrip) {
    proptest::Gen g(0x57);
    for (int trial = 0; trial < 500; ++trial) {
        const TPoly a = g.tpoly(8, 100);
        ASSERT_EQ(parse_tpoly(a.str()), a) << a.str();
        ASSERT_EQ(parse_tpoly(a.str(true)), a) << a.str(true);
    }
}
