// Copyright 2026 The dbreg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dbreg/errors.hpp"
#include "dbreg/expression.hpp"
#include "dbreg/polynomial.hpp"
#include "support.hpp"

using namespace dbreg;
using dbreg::testing::gq;

namespace {

Polynomial linear(const GaussianRational& root) { return Polynomial::t() - Polynomial(root); }

}  // namespace

TEST(Expression, ParsesCoordinatesWithParameters) {
    ParameterMap params{{"a", gq(1, 2)}};
    RationalFunction f = parse_expression("1 - a/t", params);
    EXPECT_EQ(f, RationalFunction(linear(gq(1, 2)), Polynomial::t()));
    EXPECT_EQ(parse_expression("(t - 1)^2"), RationalFunction(linear(1) * linear(1)));
    EXPECT_EQ(parse_expression("2t"), RationalFunction(Polynomial(std::vector<GaussianRational>{0, 2})));
    EXPECT_EQ(parse_expression("t^-1"), RationalFunction(Polynomial(1), Polynomial::t()));
    EXPECT_EQ(parse_constant("3/10 + 1/5*i"), gq(3, 10, 1, 5));
    EXPECT_EQ(parse_constant("0.25"), gq(1, 4));
    EXPECT_EQ(parse_constant("-(1 + i)^2"), gq(0, 1, -2, 1));
}

TEST(Expression, ReportsErrors) {
    EXPECT_THROW(parse_expression("1 - a/t"), ParseError);
    EXPECT_THROW(parse_expression("1/(t - t)"), ParseError);
    EXPECT_THROW(parse_expression("(t"), ParseError);
    EXPECT_THROW(parse_expression("t +"), ParseError);
    EXPECT_THROW(parse_expression("t $ 2"), ParseError);
    EXPECT_THROW(parse_constant("t + 1"), ParseError);
}

TEST(Expression, RenderingReparses) {
    ParameterMap params{{"a", gq(3, 10, 1, 5)}};
    for (const char* e : {"1 - a/t", "(t^2 - i)/(t + a)", "t^3 - 2*t + 7/3", "(1 - t)/(1 + t)^2"}) {
        RationalFunction f = parse_expression(e, params);
        EXPECT_EQ(parse_expression(f.to_string()), f) << e;
    }
}

TEST(Polynomial, DivisionAndGcd) {
    Polynomial p = linear(1) * linear(gq(0, 1, 2, 1)) * linear(-3);
    auto [q, r] = p.divmod(linear(-3));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(q, linear(1) * linear(gq(0, 1, 2, 1)));
    EXPECT_EQ(gcd(p, linear(1) * linear(5)), linear(1));
    EXPECT_THROW(p.divmod(Polynomial()), std::domain_error);
}

TEST(Polynomial, SquarefreeDecomposition) {
    Polynomial p = linear(1) * linear(1) * linear(1) * linear(2) * Polynomial(gq(3, 1));
    auto parts = squarefree_decomposition(p);
    Polynomial product(gq(3, 1));
    for (auto& [f, m] : parts)
        for (int k = 0; k < m; ++k) product *= f;
    EXPECT_EQ(product, p);
}

TEST(Polynomial, ExactAndNumericRoots) {
    Polynomial p = linear(gq(1, 2)) * linear(gq(1, 2)) * (Polynomial::t() * Polynomial::t() + Polynomial(1));
    auto rs = roots(p);
    int total = 0;
    for (const auto& r : rs) {
        total += r.multiplicity;
        EXPECT_TRUE(r.exact);
        EXPECT_LT(std::abs(p(r.value)), 1e-12);
    }
    EXPECT_EQ(total, 4);
    Polynomial cubic(std::vector<GaussianRational>{gq(-2, 1), 0, 0, 1});  // t^3 - 2
    auto cr = roots(cubic);
    ASSERT_EQ(cr.size(), 3u);
    for (const auto& r : cr) EXPECT_LT(std::abs(std::pow(r.value, 3) - 2.0), 1e-12);
}

TEST(Polynomial, AberthAgreesWithProductForm) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> zs(6);
        for (auto& z : zs) z = {u(rng), u(rng)};
        std::vector<Complex> c{1};
        for (auto z : zs) {
            std::vector<Complex> next(c.size() + 1);
            for (std::size_t k = 0; k < c.size(); ++k) {
                next[k] -= z * c[k];
                next[k + 1] += c[k];
            }
            c = next;
        }
        auto found = aberth_roots(c);
        ASSERT_EQ(found.size(), zs.size());
        for (auto z : zs) {
            double best = 1e9;
            for (auto f : found) best = std::min(best, std::abs(f - z));
            EXPECT_LT(best, 1e-9);
        }
    }
}

TEST(RationalFunction, ValuesOnTheProjectiveLine) {
    RationalFunction f = parse_expression("(t - 1)/(t + 2)");
    EXPECT_EQ(f.evaluate(gq(1, 1)), std::optional<GaussianRational>(gq(0, 1)));
    EXPECT_FALSE(f.evaluate(gq(-2, 1)).has_value());
    EXPECT_EQ(f.evaluate_at_infinity(), std::optional<GaussianRational>(gq(1, 1)));
    EXPECT_EQ(f.degree(), 1);
    RationalFunction g = parse_expression("t^2");
    EXPECT_FALSE(g.evaluate_at_infinity().has_value());
    EXPECT_NEAR(std::abs(f.derivative_at(Complex(0.5, 0.5)) - 3.0 / std::pow(Complex(2.5, 0.5), 2)), 0, 1e-14);
}
