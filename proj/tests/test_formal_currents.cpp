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
#include "support.hpp"

using namespace dbreg;
using dbreg::testing::form;
using dbreg::testing::word;

namespace {

ScalarSum random_scalar_sum(std::mt19937_64& rng, int n) {
    static const Letter letters[] = {Letter::RNEG, Letter::DLOG, Letter::LOG, Letter::PT0, Letter::PTINF};
    std::uniform_int_distribution<int> pick(0, 4), num(-5, 5), count(1, 4), k(0, 2);
    ScalarSum s(n);
    for (int i = count(rng); i > 0; --i) {
        Word w;
        for (int j = 0; j < n; ++j) w.push_back(letters[pick(rng)]);
        s.add(w, TauScalar(num(rng), k(rng)));
    }
    return s;
}

PathSum random_path_sum(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(-4, 4), e(0, 2), dx(0, 1);
    PathSum A(n);
    const ScalarSum base = random_scalar_sum(rng, n);
    for (const auto& [w, c] : base.terms())
        A.add(w, PolyForm<TauScalar>::monomial(c * Rational(num(rng)), e(rng), e(rng), dx(rng)));
    return A;
}

}  // namespace

TEST(Letters, DegreesAndNames) {
    EXPECT_EQ(letter_degree(Letter::RNEG), 1);
    EXPECT_EQ(letter_degree(Letter::DLOG), 1);
    EXPECT_EQ(letter_degree(Letter::LOG), 0);
    EXPECT_EQ(letter_degree(Letter::PT0), 2);
    EXPECT_EQ(parse_letter("DLOG"), Letter::DLOG);
    EXPECT_THROW(parse_letter("EXP"), std::invalid_argument);
    EXPECT_EQ(word_degree(word("RLD")), 2);
}

TEST(Kernel, WeightOnePathElement) {
    PathSum expected(1);
    expected.add(word("R"), form(1, 1, 0, 1, false));
    expected.add(word("D"), form(1, 0, 1, 0, false));
    expected.add(word("L"), form(1, 0, 0, 0, true));
    EXPECT_EQ(build_RP(1), expected);
}

TEST(Kernel, WeightOneTriple) {
    FormalTriple t = R1_C();
    EXPECT_EQ(t.a, ScalarSum(word("R"), TauScalar::tau()));
    EXPECT_EQ(t.b, ScalarSum(word("D"), TauScalar(1)));
    EXPECT_EQ(t.c, ScalarSum(word("L"), TauScalar(1)));
    EXPECT_EQ(t.degree, 1);
}

TEST(Kernel, LetterDifferentials) {
    ScalarSum expected(1);
    expected.add(word("D"), TauScalar(1));
    expected.add(word("R"), TauScalar(-1, 1));
    EXPECT_EQ(word_differential(word("L")), expected);
    ScalarSum pt(1);
    pt.add(word("0"), TauScalar(1));
    pt.add(word("I"), TauScalar(-1));
    EXPECT_EQ(word_differential(word("R")), pt);
    // d[dlog z] is 2 pi i times the divisor of z
    EXPECT_EQ(word_differential(word("D")), pt * TauScalar::tau());
    EXPECT_TRUE(word_differential(word("0")).is_zero());
}

TEST(Boxtimes, AssociativeAndUnital) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        PathSum a = random_path_sum(rng, 1), b = random_path_sum(rng, 2), c = random_path_sum(rng, 1);
        EXPECT_EQ(boxtimes(boxtimes(a, b), c), boxtimes(a, boxtimes(b, c)));
        PathSum unit(0);
        unit.add(Word{}, PolyForm<TauScalar>::one());
        EXPECT_EQ(boxtimes(unit, a), a);
        EXPECT_EQ(boxtimes(a, unit), a);
    }
}

TEST(Differential, SquaresToZeroOnRandomSums) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        EXPECT_TRUE(differential(differential(random_path_sum(rng, 3))).is_zero());
        EXPECT_TRUE(differential(differential(random_scalar_sum(rng, 3))).is_zero());
    }
}

TEST(Differential, LeibnizAcrossSlots) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 50; ++i) {
        PathSum a = random_path_sum(rng, 1), b = random_path_sum(rng, 2);
        PathSum lhs = differential(boxtimes(a, b));
        for (const auto& [w, c] : a.terms()) {
            PathSum single(1);
            single.add(w, c);
            const int deg = word_degree(w) + (c.has_one_form() ? 1 : 0);
            PathSum rhs = boxtimes(differential(single), b);
            if (deg % 2)
                rhs -= boxtimes(single, differential(b));
            else
                rhs += boxtimes(single, differential(b));
            lhs -= rhs;
        }
        EXPECT_TRUE(lhs.is_zero());
    }
}

TEST(Kernel, RecursionByWeightOne) {
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(build_RP(n + 1), boxtimes(build_RP(n), build_RP(1)));
}

TEST(Kernel, TripleClosedForm) {
    for (int n = 1; n <= 7; ++n) EXPECT_EQ(build_RC(n), closed_form_RC(n));
}

TEST(Permutations, SignsAndGroupLaws) {
    auto perms = all_permutations(3);
    EXPECT_EQ(perms.size(), 6u);
    int total = 0;
    for (const auto& g : perms) {
        total += permutation_sign(g);
        EXPECT_EQ(compose(g, inverse(g)), (Permutation{0, 1, 2}));
    }
    EXPECT_EQ(total, 0);
    EXPECT_EQ(permutation_sign({1, 0, 2}), -1);
}

TEST(Permutations, KoszulSignOnOddLetters) {
    ScalarSum s(word("DD"), TauScalar(1));
    EXPECT_EQ(permute_push({1, 0}, s), ScalarSum(word("DD"), TauScalar(-1)));
    ScalarSum t(word("LD"), TauScalar(1));
    EXPECT_EQ(permute_push({1, 0}, t), ScalarSum(word("DL"), TauScalar(1)));
}

TEST(Alternation, Idempotent) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 30; ++i) {
        ScalarSum s = random_scalar_sum(rng, 3);
        EXPECT_EQ(alt_push(alt_push(s)), alt_push(s));
    }
}

TEST(Comparison, EvaluationOfPathKernel) {
    for (int n = 1; n <= 5; ++n) {
        const PathSum RP = build_RP(n);
        EXPECT_EQ(ev_words(RP), alt_push(build_RC(n)));
    }
}

TEST(FaceInsertion, InsertsAtEachSlot) {
    ScalarSum pt(word("0"), TauScalar(1));
    PathSum A(1);
    A.add(word("D"), PolyForm<TauScalar>::x());
    PathSum at0 = insert_slot(A, 0, pt), at1 = insert_slot(A, 1, pt);
    EXPECT_EQ(at0.terms().begin()->first, word("0D"));
    EXPECT_EQ(at1.terms().begin()->first, word("D0"));
}
