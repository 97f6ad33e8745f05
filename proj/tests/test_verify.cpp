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

#include "dbreg/verify.hpp"

using namespace dbreg;

TEST(VerifySuites, AllPass) {
    for (const auto& name : suite_names()) {
        SuiteResult r = run_suite(name, 5, 3);
        EXPECT_TRUE(r.pass) << name;
        EXPECT_FALSE(r.checks.empty()) << name;
        for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << name << ": " << c.name << " " << c.detail;
    }
}

TEST(VerifySuites, ProductsDependOnlyOnSeed) {
    SuiteResult a = verify_products(5, 20), b = verify_products(5, 20);
    ASSERT_EQ(a.checks.size(), b.checks.size());
    for (std::size_t k = 0; k < a.checks.size(); ++k) EXPECT_EQ(a.checks[k].detail, b.checks[k].detail);
}

TEST(VerifySuites, UnknownSuite) { EXPECT_THROW(run_suite("nonsense", 3, 1), std::invalid_argument); }
