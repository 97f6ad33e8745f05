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

#include "dbreg/abel_jacobi.hpp"
#include "dbreg/errors.hpp"
#include "dbreg/expression.hpp"
#include "support.hpp"

using namespace dbreg;
using dbreg::testing::gq;

TEST(AbelJacobi, PointsGiveLogModuloLattice) {
    for (const auto& f : {gq(2, 1), gq(1, 1, 1, 1), gq(-1, 1, 2, 1), gq(1, 3)}) {
        JacobianValue v = aj_P(graph_point(f));
        EXPECT_EQ(v.p, 1);
        JacobianValue d = v;
        d.value -= std::log(f.to_complex());
        EXPECT_LT(std::abs(reduce(d).value), 1e-12);
    }
}

TEST(AbelJacobi, TotaroCycleIsTorsionOfOrder24) {
    JacobianValue v = aj_P(totaro_C(1));
    EXPECT_EQ(v.p, 2);
    EXPECT_LT(std::abs(v.value - M_PI * M_PI / 6), 1e-10);
    EXPECT_EQ(torsion_order(v, 100), 24);
    EXPECT_FALSE(torsion_order(v, 23).has_value());
}

TEST(AbelJacobi, TorsionOrders) {
    JacobianValue g{Complex(-4 * M_PI * M_PI), 2, 0};
    EXPECT_EQ(torsion_order(g, 10), 1);
    JacobianValue half{Complex(0, M_PI), 1, 0};
    EXPECT_EQ(torsion_order(half, 10), 2);
    JacobianValue log2{Complex(std::log(2.0)), 1, 0};
    EXPECT_FALSE(torsion_order(log2, 100).has_value());
}

TEST(AbelJacobi, ReductionIntoFundamentalDomain) {
    JacobianValue v{Complex(0.3, 7 * M_PI), 1, 0};
    JacobianValue r = reduce(v);
    EXPECT_NEAR(r.value.real(), 0.3, 1e-15);
    EXPECT_LE(std::abs(r.value.imag()), M_PI + 1e-12);
    EXPECT_NEAR(std::remainder(r.value.imag() - 7 * M_PI, 2 * M_PI), 0, 1e-12);
}

TEST(AbelJacobi, NonClosedCycleIsRejected) {
    EXPECT_THROW(aj_P(totaro_C(gq(1, 2))), InadmissibleError);
    HomologyReport h = is_homologous_to_zero(totaro_C(gq(1, 2)));
    EXPECT_FALSE(h.closed);
}

TEST(AbelJacobi, HomologyReports) {
    HomologyReport h = is_homologous_to_zero(totaro_C(1));
    EXPECT_TRUE(h.closed);
    EXPECT_TRUE(h.homologous_to_zero);
    CycleComponent c;
    c.coords = {parse_expression("t"), parse_expression("i*t + i - 1")};
    HomologyReport k = is_homologous_to_zero(ParamCycle{2, 1, {c}});
    EXPECT_FALSE(k.homologous_to_zero);
    ASSERT_TRUE(k.signed_count.has_value());
    EXPECT_EQ(*k.signed_count, Rational(-1));
}

TEST(AbelJacobi, CancellingCombinationHasTheTotaroValue) {
    for (const auto& a : dbreg::testing::sample_parameters()) {
        JacobianValue v = aj_P(totaro_C(a) - totaro_D(GaussianRational(1) - a));
        EXPECT_LT(std::abs(v.value - M_PI * M_PI / 6), 1e-9);
        EXPECT_EQ(torsion_order(v, 100), 24);
    }
}
