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

#include "dbreg/chow_cycles.hpp"
#include "dbreg/expression.hpp"
#include "support.hpp"

using namespace dbreg;
using dbreg::testing::gq;

namespace {

ParamCycle curve(int n, int p, std::vector<std::string> coords, const ParameterMap& params = {}) {
    CycleComponent c;
    for (const auto& e : coords) c.coords.push_back(parse_expression(e, params));
    ParamCycle Z{n, p, {}};
    Z.components.push_back(c);
    return Z;
}

PointCycle single_point(const Rational& m, std::vector<GaussianRational> v) {
    PointCycle Z(static_cast<int>(v.size()));
    std::vector<PointValue> coords;
    for (auto& z : v) coords.push_back(PointValue::exact_value(z));
    Z.add(m, coords);
    return Z;
}

}  // namespace

TEST(Boundary, TotaroFamily) {
    EXPECT_TRUE(bloch_boundary(totaro_C(1)).is_zero());
    EXPECT_TRUE(bloch_boundary(totaro_C(gq(1, 2))).equals(single_point(-1, {gq(1, 2), gq(1, 2)})));
    EXPECT_TRUE(bloch_boundary(totaro_C(gq(1, 3))).equals(single_point(-1, {gq(1, 3), gq(2, 3)})));
    EXPECT_TRUE(bloch_boundary(totaro_C(gq(1, 3)) - totaro_D(gq(2, 3))).is_zero());
    EXPECT_TRUE(bloch_boundary(totaro_D(gq(1, 4))).equals(single_point(-1, {gq(3, 4), gq(1, 4)})));
}

TEST(Boundary, FacesOfASimpleCurve) {
    ParamCycle Z = curve(2, 1, {"t", "(t - 2)/(t - 3)"});
    // z1 = 0 at t = 0 gives (2/3); z1 = inf at t = inf gives (1)
    EXPECT_TRUE(face(Z, 0, FaceValue::Zero).equals(single_point(1, {gq(2, 3)})));
    PointCycle at_inf = face(Z, 0, FaceValue::Infinity);
    EXPECT_TRUE(at_inf.is_zero());  // the point z2 = 1 lies on the boundary divisor
    EXPECT_TRUE(face(Z, 1, FaceValue::Zero).equals(single_point(1, {gq(2, 1)})));
    EXPECT_TRUE(face(Z, 1, FaceValue::Infinity).equals(single_point(1, {gq(3, 1)})));
}

TEST(Boundary, SquaresToZero) {
    for (const auto& a : dbreg::testing::sample_parameters()) {
        EXPECT_TRUE(bloch_boundary(bloch_boundary(totaro_C(a))).is_zero());
    }
    ParamCycle Z = curve(3, 2, {"t", "(t - 2)/(t + 5)", "t^2 - 3"});
    EXPECT_TRUE(bloch_boundary(bloch_boundary(Z)).is_zero());
}

TEST(Admissibility, TotaroCyclesAreAdmissibleAndRealAdmissible) {
    for (const auto& a : dbreg::testing::sample_parameters()) {
        EXPECT_TRUE(is_admissible(totaro_C(a)).admissible);
        auto r = is_real_admissible(totaro_C(a));
        EXPECT_TRUE(r.real_admissible);
        EXPECT_TRUE(r.violations.empty());
    }
    EXPECT_TRUE(is_admissible(totaro_C(1)).admissible);
}

TEST(Admissibility, CurveInsideAFaceIsRejected) {
    EXPECT_FALSE(is_admissible(curve(2, 1, {"t", "0"})).admissible);
}

TEST(Admissibility, CurveThroughACornerIsRejected) {
    // (t, t) meets the codimension-2 face z1 = z2 = 0 of the square in a point
    EXPECT_FALSE(is_admissible(curve(2, 1, {"t", "t"})).admissible);
}

TEST(Admissibility, RealOverlapIsRejected) {
    // both coordinates negative on the same arc of t
    auto r = is_real_admissible(curve(2, 1, {"t", "2*t"}));
    EXPECT_FALSE(r.real_admissible);
}

TEST(Admissibility, TotaroParameterOnTheCutIsRejected) {
    EXPECT_THROW(totaro_C(gq(-1, 1)), std::invalid_argument);
    EXPECT_THROW(totaro_C(gq(2, 1)), std::invalid_argument);
}

TEST(Alternation, ComponentsOfTheTotaroCycle) {
    ParamCycle A = alt_cycle(totaro_C(1));
    A.normalize();
    ASSERT_EQ(A.components.size(), 6u);
    Rational total = 0;
    for (const auto& c : A.components) {
        EXPECT_EQ(abs(c.multiplicity), Rational(1, 6));
        total += c.multiplicity;
    }
    EXPECT_EQ(total, 0);
}

TEST(Alternation, IdempotentAndCommutesWithBoundary) {
    for (const auto& a : dbreg::testing::sample_parameters()) {
        ParamCycle A = alt_cycle(totaro_C(a));
        ParamCycle diff = alt_cycle(A) - A;
        diff.normalize();
        EXPECT_TRUE(diff.components.empty());
        EXPECT_TRUE(alt_points(bloch_boundary(totaro_C(a))).equals(bloch_boundary(A)));
    }
}

TEST(Permute, SignAndCoordinates) {
    SignedCycle s = permute({1, 0, 2}, totaro_C(gq(1, 2)));
    EXPECT_EQ(s.sign, -1);
    EXPECT_EQ(s.cycle.components[0].coords[1], parse_expression("t"));
}

TEST(PointCycle, ArithmeticAndEquality) {
    PointCycle a = single_point(2, {gq(1, 2), gq(3, 1)});
    PointCycle b = single_point(-2, {gq(1, 2), gq(3, 1)});
    a += b;
    EXPECT_TRUE(a.is_zero());
    PointCycle c = single_point(1, {gq(1, 2)}) * Rational(3);
    EXPECT_EQ(c.terms()[0].multiplicity, Rational(3));
}
