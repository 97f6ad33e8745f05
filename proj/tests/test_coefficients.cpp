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

#include <cmath>
#include <random>

#include "dbreg/coefficients.hpp"

using namespace dbreg;

namespace {

Rational rq(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

TauScalar random_tau(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> k(-2, 3), count(0, 3);
    TauScalar s;
    for (int i = count(rng); i > 0; --i) s += TauScalar(rq(rng), k(rng));
    return s;
}

}  // namespace

TEST(ParseRational, IntegersFractionsAndDecimals) {
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational("-7/12"), Rational(-7, 12));
    EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
    EXPECT_EQ(parse_rational("-1.5e-3"), Rational(-3, 2000));
    EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
    // leading zeros are decimal, not octal
    EXPECT_EQ(parse_rational("010/3"), Rational(10, 3));
    EXPECT_EQ(parse_rational("0.08"), Rational(2, 25));
}

TEST(ParseRational, RejectsMalformedInput) {
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1.2.3"), std::invalid_argument);
}

TEST(RationalFromDouble, UsesShortestDecimal) {
    EXPECT_EQ(rational_from_double(0.3), Rational(3, 10));
    EXPECT_EQ(rational_from_double(-0.7), Rational(-7, 10));
    EXPECT_EQ(rational_from_double(0.5), Rational(1, 2));
    EXPECT_EQ(rational_from_double(2.0), Rational(2));
    EXPECT_EQ(rational_from_double(0.25), Rational(1, 4));
    EXPECT_EQ(rational_from_double(0.09), Rational(9, 100));
}

TEST(TauScalar, RingAxiomsOnRandomInputs) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        TauScalar a = random_tau(rng), b = random_tau(rng), c = random_tau(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a * TauScalar(1), a);
    }
}

TEST(TauScalar, GradingAndIntegrality) {
    TauScalar t = TauScalar::tau(2) * Rational(-3);
    EXPECT_EQ(t.homogeneous_degree(), 2);
    EXPECT_TRUE(t.is_integral());
    TauScalar mixed = TauScalar::tau() + TauScalar(Rational(1, 2));
    EXPECT_FALSE(mixed.homogeneous_degree().has_value());
    EXPECT_FALSE(mixed.is_integral());
    EXPECT_FALSE(TauScalar().homogeneous_degree().has_value());
    EXPECT_EQ(TauScalar::tau() * TauScalar::tau(-1), TauScalar(1));
}

TEST(TauScalar, NumericValue) {
    const Complex tau = to_complex(TauScalar::tau());
    EXPECT_NEAR(tau.real(), 0, 1e-15);
    EXPECT_NEAR(tau.imag(), 2 * M_PI, 1e-15);
    const Complex v = to_complex(TauScalar(Rational(1, 2), 2));
    EXPECT_NEAR(v.real(), -2 * M_PI * M_PI, 1e-13);
    PreciseComplex p = to_complex(TauScalar::tau(), 30);
    EXPECT_EQ(p.im.substr(0, 20), "6.283185307179586476");
}

TEST(GaussianRational, FieldOperations) {
    GaussianRational a(Rational(1, 2), Rational(3)), b(Rational(-2), Rational(1, 7));
    EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(a * a.conj(), GaussianRational(a.norm()));
    EXPECT_THROW(a / GaussianRational(0), std::domain_error);
    EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1));
}

TEST(GaussianRational, ExactSquareRoots) {
    auto r = exact_sqrt(GaussianRational(Rational(-9, 4)));
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r * *r, GaussianRational(Rational(-9, 4)));
    auto s = exact_sqrt(GaussianRational(Rational(0), Rational(2)));  // (1 + i)^2
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(*s * *s, GaussianRational(Rational(0), Rational(2)));
    EXPECT_FALSE(exact_sqrt(GaussianRational(2)).has_value());
}
