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

#include "dbreg/simplex_forms.hpp"

using namespace dbreg;

namespace {

using QF = PolyForm<Rational>;

QF random_form(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), deg(0, 6);
    std::vector<Rational> f(deg(rng)), g(deg(rng));
    for (auto& c : f) c = num(rng);
    for (auto& c : g) c = num(rng);
    return QF(f, g);
}

}  // namespace

TEST(PolyForm, WedgeIsGradedAndDxSquaresToZero) {
    EXPECT_TRUE(wedge(QF::dx(), QF::dx()).is_zero());
    EXPECT_EQ(wedge(QF::x(), QF::dx()), wedge(QF::dx(), QF::x()));
    EXPECT_EQ(wedge(QF::one(), QF::x()), QF::x());
}

TEST(PolyForm, DifferentialSquaresToZeroAndIsADerivation) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        QF u = random_form(rng), v = random_form(rng);
        EXPECT_TRUE(differential(differential(u)).is_zero());
        QF lhs = differential(wedge(u.zero_form_part(), v));
        QF rhs = wedge(differential(u.zero_form_part()), v) + wedge(u.zero_form_part(), differential(v));
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(PolyForm, IntegrationAndEvaluation) {
    QF k = QF::monomial(Rational(1), 1, 1, true);  // x (1-x) dx
    EXPECT_EQ(integrate_full(k), Rational(1, 6));
    EXPECT_EQ(integrate_full(QF::x()), Rational(0));
    EXPECT_EQ(evaluate_at(QF::one_minus_x(), 0), Rational(1));
    EXPECT_EQ(evaluate_at(QF::one_minus_x(), 1), Rational(0));
    EXPECT_EQ(differential(integrate_partial(k)), k);
    EXPECT_EQ(evaluate_at(integrate_partial(k), 0), Rational(0));
}

TEST(Homotopy, IdentitiesOnRandomForms) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        QF u = random_form(rng);
        EXPECT_EQ(differential(homotopy_h(u)) + homotopy_h(differential(u)), split_s(ev_map(u)) - u);
        EXPECT_EQ(ev_map(split_s(ev_map(u))), ev_map(u));
    }
}

TEST(Homotopy, EvaluationOfSplitting) {
    EvTriple<Rational> t{Rational(2), Rational(-1, 3), Rational(5, 7)};
    EXPECT_EQ(ev_map(split_s(t)), t);
    EXPECT_EQ(split_s(t), QF({Rational(2), Rational(-7, 3)}, {Rational(5, 7)}));
}

TEST(PolyForm, Rendering) {
    EXPECT_EQ(to_string(PolyForm<TauScalar>::monomial(TauScalar(1), 1, 1, true)), "x*(1-x) dx");
    EXPECT_EQ(to_string(PolyForm<TauScalar>()), "0");
}
