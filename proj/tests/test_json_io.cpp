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

#include "dbreg/errors.hpp"
#include "dbreg/json_io.hpp"
#include "support.hpp"

using namespace dbreg;
using dbreg::testing::gq;

TEST(CycleJson, ParsesParametersExactly) {
    Json j = Json::parse(R"({"n": 3, "p": 2,
        "components": [{"multiplicity": "1", "coords": ["t", "1 - a/t", "1 - t"]}],
        "parameters": {"a": {"re": 0.3, "im": 0.2}}})");
    ParamCycle Z = cycle_from_json(j);
    ParamCycle expected = totaro_C(gq(3, 10, 1, 5));
    EXPECT_EQ(Z.components[0].coords, expected.components[0].coords);
    Json s = Json::parse(R"({"n": 3, "components": [{"coords": ["t", "1 - a/t", "1 - t"]}], "parameters": {"a": "3/10 + 1/5*i"}})");
    ParamCycle W = cycle_from_json(s);
    EXPECT_EQ(W.components[0].coords, expected.components[0].coords);
    EXPECT_EQ(W.p, 2);
    EXPECT_EQ(W.components[0].multiplicity, Rational(1));
}

TEST(CycleJson, RoundTrip) {
    for (const ParamCycle& Z : {totaro_C(gq(1, 2)), totaro_C(gq(7, 10, -2, 5)) - totaro_D(gq(3, 10, 2, 5)),
                                graph_point(gq(-1, 1, 2, 1)), alt_cycle(totaro_C(1))}) {
        Json j = cycle_to_json(Z);
        ParamCycle back = cycle_from_json(j);
        EXPECT_EQ(cycle_to_json(back), j);
        ASSERT_EQ(back.components.size(), Z.components.size());
        for (std::size_t k = 0; k < Z.components.size(); ++k) {
            EXPECT_EQ(back.components[k].coords, Z.components[k].coords);
            EXPECT_EQ(back.components[k].multiplicity, Z.components[k].multiplicity);
        }
    }
}

TEST(CycleJson, Errors) {
    EXPECT_THROW(cycle_from_json(Json::parse(R"({"components": []})")), ParseError);
    EXPECT_THROW(cycle_from_json(Json::parse(R"({"n": 2, "components": [{"coords": ["t"]}]})")), ParseError);
    EXPECT_THROW(cycle_from_json(Json::parse(R"({"n": 1, "components": [{"coords": ["b*t"]}]})")), ParseError);
    EXPECT_THROW(cycle_from_json(Json::parse(R"({"n": 1, "components": [{"coords": ["t"], "point": ["2"]}]})")),
                 ParseError);
    EXPECT_THROW(cycle_from_json(Json::parse(R"({"n": 1, "components": [{"multiplicity": "x", "coords": ["t"]}]})")),
                 ParseError);
    EXPECT_THROW(read_cycle_file("/nonexistent/cycle.json"), ParseError);
}

TEST(FormalJson, KernelsRoundTrip) {
    for (int n = 1; n <= 5; ++n) {
        const PathSum R = build_RP(n);
        EXPECT_EQ(path_sum_from_json(to_json(R), n), R);
        const FormalTriple T = build_RC(n);
        EXPECT_EQ(formal_triple_from_json(to_json(T), n), T);
    }
}

TEST(FormalJson, EntryLayout) {
    Json j = to_json(build_RP(1));
    ASSERT_EQ(j.size(), 3u);
    EXPECT_EQ(j[0]["word"], Json::array({"RNEG"}));
    EXPECT_EQ(j[0]["tau"], 1);
    EXPECT_EQ(j[0]["f"], Json::array({"1", "-1"}));
    EXPECT_EQ(j[2]["g"], Json::array({"1"}));
}

TEST(NumericJson, RoundTripIsBitExact) {
    RegulatorValue r = regulate_P(totaro_C(gq(3, 10, 1, 5)));
    Json j = to_json(r);
    PolyForm<Complex> back = complex_form_from_json(Json::parse(j.dump())["payload"]);
    EXPECT_EQ(back, r.path);
    RegulatorValue c = regulate_C(totaro_C(gq(1, 2)));
    Triple<Complex> t = complex_triple_from_json(Json::parse(to_json(c).dump())["payload"]);
    EXPECT_EQ(t, c.triple);
}

TEST(NumericJson, IdenticalRunsSerializeIdentically) {
    auto run = [] { return to_json(regulate_P(totaro_C(gq(7, 10, -2, 5)))).dump(); };
    EXPECT_EQ(run(), run());
}

TEST(PointJson, RoundTrip) {
    PointCycle b = bloch_boundary(totaro_C(gq(3, 10, 1, 5)));
    EXPECT_TRUE(point_cycle_from_json(to_json(b)).equals(b));
    EXPECT_TRUE(point_value_from_json(to_json(PointValue::infinity())).infinite);
    PointValue v = point_value_from_json(to_json(PointValue::numeric(Complex(0.1, -2.5))));
    EXPECT_FALSE(v.exact);
    EXPECT_EQ(v.z, Complex(0.1, -2.5));
}

TEST(ReportJson, SuiteAndChecks) {
    SuiteResult s = verify_homotopy(3);
    Json j = to_json(s);
    EXPECT_EQ(j["suite"], "homotopy");
    EXPECT_TRUE(j["pass"].get<bool>());
    HomologyReport h = is_homologous_to_zero(totaro_C(1));
    EXPECT_TRUE(to_json(h)["homologous_to_zero"].get<bool>());
}
