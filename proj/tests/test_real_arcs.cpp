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

#include "dbreg/errors.hpp"
#include "dbreg/expression.hpp"
#include "dbreg/real_arcs.hpp"
#include "support.hpp"

using namespace dbreg;
using dbreg::testing::gq;

namespace {

// sum |c_k| |t|^k, the rounding scale of p(t)
double abs_scale(const Polynomial& p, Complex t) {
    double out = 0, r = 1;
    for (Complex c : p.to_complex()) {
        out += std::abs(c) * r;
        r *= std::abs(t);
    }
    return out;
}

CycleComponent curve(std::vector<std::string> coords) {
    CycleComponent c;
    for (const auto& e : coords) c.coords.push_back(parse_expression(e));
    return c;
}

// every stored node solves N(t) + exp(ell) D(t) = 0, phi = N/D
void expect_on_face(const ArcFamily& F, const CycleComponent& comp) {
    const RationalFunction& phi = comp.coords[static_cast<std::size_t>(F.slot)];
    const Polynomial& N = phi.numerator();
    const Polynomial& D = phi.denominator();
    for (const auto& arc : F.arcs) {
        ASSERT_GE(arc.nodes.size(), 2u);
        for (std::size_t k = 0; k < arc.nodes.size(); ++k) {
            if (k > 0) {
                EXPECT_LT(arc.ell[k], arc.ell[k - 1]);
            }
            const P1Point& p = arc.nodes[k];
            if (p.is_infinity()) continue;
            const Complex t = p.t();
            if (std::abs(t) > 1e6) continue;
            const double s = std::exp(arc.ell[k]);
            const Complex n = N(t), d = D(t);
            const double bound = 1e-9 * (std::abs(n) + s * std::abs(d)) + 1e-14 * (abs_scale(N, t) + s * abs_scale(D, t));
            EXPECT_LT(std::abs(n + s * d), bound) << "ell=" << arc.ell[k];
        }
    }
}

}  // namespace

TEST(Arcs, TotaroHalfEndpoints) {
    const CycleComponent comp = totaro_C(gq(1, 2)).components[0];
    ArcFamily f0 = extract_arcs(comp, 0), f1 = extract_arcs(comp, 1), f2 = extract_arcs(comp, 2);
    ASSERT_EQ(f0.arcs.size(), 1u);
    ASSERT_EQ(f1.arcs.size(), 1u);
    ASSERT_EQ(f2.arcs.size(), 1u);
    // z1 = t: from infinity to 0
    EXPECT_TRUE(f0.arcs[0].pole.point.is_infinity());
    EXPECT_LT(std::abs(f0.arcs[0].zero.point.t()), 1e-12);
    // z2 = 1 - a/t: from t = 0 to t = a
    EXPECT_LT(std::abs(f1.arcs[0].pole.point.t()), 1e-12);
    EXPECT_LT(std::abs(f1.arcs[0].zero.point.t() - 0.5), 1e-12);
    // z3 = 1 - t: from infinity to 1
    EXPECT_TRUE(f2.arcs[0].pole.point.is_infinity());
    EXPECT_LT(std::abs(f2.arcs[0].zero.point.t() - 1.0), 1e-12);
    for (const ArcFamily* F : {&f0, &f1, &f2}) expect_on_face(*F, comp);
}

TEST(Arcs, PointAtFollowsTheEquationBeyondTheTrackedRange) {
    const CycleComponent comp = totaro_C(gq(3, 10, 1, 5)).components[0];
    ArcFamily F = extract_arcs(comp, 1);
    const RationalFunction& phi = comp.coords[1];
    for (const auto& arc : F.arcs)
        for (double ell : {arc.ell_max() + 5, arc.ell_max(), 0.0, arc.ell_min(), arc.ell_min() - 5}) {
            const Complex v = phi(arc.t_at(ell));
            EXPECT_LT(std::abs(v + std::exp(ell)), 1e-7 * std::max(1.0, std::exp(ell))) << ell;
        }
}

TEST(Arcs, CriticalValuesAreCrossedCorrectly) {
    CycleComponent comp = curve({"t^2", "(t - 1)*(t - 2)/((t + 1)*(t + 2))"});
    ArcFamily F = extract_arcs(comp, 1);
    EXPECT_EQ(F.critical_ells.size(), 2u);
    EXPECT_EQ(F.arcs.size(), 2u);
    expect_on_face(F, comp);
    int pole_ends = 0;
    for (const auto& arc : F.arcs) pole_ends += arc.pole.point.is_infinity() ? 0 : 1;
    EXPECT_EQ(pole_ends, 2);
}

TEST(Arcs, QuadraticCoordinateGivesTwoArcs) {
    CycleComponent comp = curve({"t^2", "1 - t"});
    ArcFamily F = extract_arcs(comp, 0);
    ASSERT_EQ(F.arcs.size(), 2u);
    for (const auto& arc : F.arcs) {
        EXPECT_TRUE(arc.pole.point.is_infinity());
        EXPECT_LT(std::abs(arc.zero.point.t()), 1e-12);
        // t^2 < 0 on the imaginary axis
        EXPECT_LT(std::abs(arc.t_at(0.0).real()), 1e-12);
        EXPECT_NEAR(std::abs(arc.t_at(0.0)), 1.0, 1e-12);
    }
    expect_on_face(F, comp);
}

TEST(Arcs, ConstantCoordinates) {
    EXPECT_THROW(extract_arcs(curve({"t", "-2"}), 1), InadmissibleError);
    EXPECT_TRUE(extract_arcs(curve({"t", "3"}), 1).arcs.empty());
}

TEST(Arcs, CrossingsOfAClosedCurveCancel) {
    CycleComponent comp = curve({"t^2", "(t - 1)*(t - 2)/((t + 1)*(t + 2))"});
    PairwiseReport pr = pairwise_proper(extract_arcs(comp, 0), extract_arcs(comp, 1), comp);
    EXPECT_TRUE(pr.proper);
    ASSERT_EQ(pr.crossings.size(), 2u);
    EXPECT_EQ(pr.crossings[0].sign + pr.crossings[1].sign, 0);
    for (const auto& c : pr.crossings) {
        EXPECT_TRUE(in_rneg(comp.coords[0](c.t), 1e-9));
        EXPECT_TRUE(in_rneg(comp.coords[1](c.t), 1e-9));
    }
}

TEST(Arcs, DisjointFacesOfTheTotaroCycle) {
    const CycleComponent comp = totaro_C(gq(1, 2)).components[0];
    for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        PairwiseReport pr = pairwise_proper(extract_arcs(comp, a), extract_arcs(comp, b), comp);
        EXPECT_TRUE(pr.proper);
        EXPECT_TRUE(pr.crossings.empty());
    }
}

TEST(Arcs, ChordalDistance) {
    EXPECT_NEAR(chordal_distance(P1Point::from_t(0), P1Point::from_t(1e300)), 1.0, 1e-12);
    EXPECT_NEAR(chordal_distance(P1Point::from_t(2), P1Point::from_t(2)), 0.0, 1e-15);
    P1Point inf{0, true};
    EXPECT_TRUE(inf.is_infinity());
    EXPECT_NEAR(chordal_distance(inf, P1Point::from_t(0)), 1.0, 1e-15);
}

TEST(Arcs, DescribeIsJson) {
    const CycleComponent comp = totaro_C(1).components[0];
    const std::string d = describe(extract_arcs(comp, 2));
    EXPECT_NE(d.find("\"slot\""), std::string::npos);
}
