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

#include <random>

#include "dbreg/formal_currents.hpp"
#include "dbreg/graded_algebra.hpp"
#include "dbreg/three_term.hpp"
#include "dbreg/verify.hpp"

using namespace dbreg;

namespace {

using T = Triple<GcElement>;

GcElement mul(const GcElement& a, const GcElement& b) { return multiply(a, b); }
GcElement dd(const GcElement& a) { return differential(a); }

}  // namespace

TEST(GradedAlgebra, CommutationSigns) {
    auto alg = std::make_shared<const GcAlgebra>(std::vector<int>{1, 1, 2});
    GcElement x = GcElement::generator(alg, 0), y = GcElement::generator(alg, 1), z = GcElement::generator(alg, 2);
    EXPECT_EQ(multiply(x, y), -multiply(y, x));
    EXPECT_EQ(multiply(x, z), multiply(z, x));
    EXPECT_TRUE(multiply(x, x).is_zero());
    EXPECT_FALSE(multiply(z, z).is_zero());
    EXPECT_TRUE(differential(differential(multiply(x, z))).is_zero());
}

TEST(TotDifferential, SquaresToZero) {
    auto alg = std::make_shared<const GcAlgebra>(std::vector<int>{2, 2, 1});
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> num(-6, 6);
    for (int i = 0; i < 50; ++i) {
        T t{GcElement::generator(alg, 0, num(rng)), GcElement::generator(alg, 1, num(rng)),
            GcElement::generator(alg, 2, num(rng)), 2};
        T dt = tot_differential(t, dd);
        T ddt = tot_differential(dt, dd);
        EXPECT_TRUE(ddt.a.is_zero() && ddt.b.is_zero() && ddt.c.is_zero());
    }
}

TEST(TotDifferential, CycleClassShapeIsClosed) {
    ScalarSum z(std::vector<Letter>{Letter::PT0}, TauScalar(1));
    FormalTriple cl{z, z, ScalarSum(1), 2};
    FormalTriple d = tot_differential(cl, [](const ScalarSum& s) { return differential(s); });
    EXPECT_TRUE(d.a.is_zero() && d.b.is_zero() && d.c.is_zero());
}

TEST(ProductAlpha, UnitOnBothSides) {
    auto alg = std::make_shared<const GcAlgebra>(std::vector<int>{1, 1, 0});
    T u{GcElement::generator(alg, 0), GcElement::generator(alg, 1), GcElement::generator(alg, 2), 1};
    T unit{GcElement::scalar(alg, 1), GcElement::scalar(alg, 1), GcElement(alg), 0};
    for (Rational alpha : {Rational(0), Rational(1, 2), Rational(1), Rational(1, 3)}) {
        EXPECT_EQ(product_alpha(alpha, unit, u, mul), u);
        EXPECT_EQ(product_alpha(alpha, u, unit, mul), u);
    }
}

TEST(ProductAlpha, ZeroProductFormula) {
    auto alg = std::make_shared<const GcAlgebra>(std::vector<int>{1, 1, 0, 2, 2, 1});
    auto g = [&](int k) { return GcElement::generator(alg, k); };
    T t{g(0), g(1), g(2), 1}, u{g(3), g(4), g(5), 2};
    T p = product_alpha(Rational(0), t, u, mul);
    EXPECT_EQ(p.a, multiply(g(0), g(3)));
    EXPECT_EQ(p.b, multiply(g(1), g(4)));
    EXPECT_EQ(p.c, multiply(g(2), g(4)) - multiply(g(0), g(5)));
    EXPECT_EQ(p.degree, 3);
}

TEST(ProductAlpha, HalfIsGradedCommutativeOnDegreeOneSymbols) {
    auto alg = std::make_shared<const GcAlgebra>(std::vector<int>{1, 1, 0, 1, 1, 0});
    auto g = [&](int k) { return GcElement::generator(alg, k); };
    T t{g(0), g(1), g(2), 1}, u{g(3), g(4), g(5), 1};
    T tu = product_alpha(Rational(1, 2), t, u, mul), ut = product_alpha(Rational(1, 2), u, t, mul);
    EXPECT_EQ(tu.a, -ut.a);
    EXPECT_EQ(tu.b, -ut.b);
    EXPECT_EQ(tu.c, -ut.c);
    // alpha = 0 is not commutative on the nose
    T tu0 = product_alpha(Rational(0), t, u, mul), ut0 = product_alpha(Rational(0), u, t, mul);
    EXPECT_NE(tu0.c, -ut0.c);
}

TEST(ProductAlpha, RandomizedLaws) {
    SuiteResult r = verify_products(99, 100);
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
}

TEST(Boxtimes, TripleKernelSquaresAndAssociates) {
    const FormalTriple R1 = R1_C();
    EXPECT_EQ(boxtimes_alpha(0, R1, R1), build_RC(2));
    EXPECT_EQ(boxtimes_alpha(0, boxtimes_alpha(0, R1, R1), R1), boxtimes_alpha(0, R1, boxtimes_alpha(0, R1, R1)));
}

TEST(Boxtimes, DifferentialOfWeightOneKernel) {
    FormalTriple d = tot_differential(R1_C(), [](const ScalarSum& s) { return differential(s); });
    ScalarSum div(1);
    div.add({Letter::PT0}, TauScalar::tau());
    div.add({Letter::PTINF}, -TauScalar::tau());
    EXPECT_EQ(d.a, div);
    EXPECT_EQ(d.b, div);
    EXPECT_TRUE(d.c.is_zero());
}
