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

// Exact identity suites behind `dbreg verify`.

#ifndef DBREG_VERIFY_HPP
#define DBREG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dbreg {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    bool pass = true;
    std::vector<CheckResult> checks;

    void add(std::string name, bool ok, std::string detail = {});
};

/// ev_words(R^n_P) = alt(R^n_C), and the integral form (id, id, alt)(R^n_C).
SuiteResult verify_comparison(int max_n);
/// dR^1, face-insertion form of dR^n, d^2 = 0 on both models.
SuiteResult verify_differential(int max_n);
/// ev s = id and dh + hd = s ev - id on monomials of degree <= max_degree.
SuiteResult verify_homotopy(int max_degree = 10);
/// Associativity at alpha in {0, 1}, graded commutativity at 1/2, Leibniz.
SuiteResult verify_products(std::uint64_t seed, int trials = 200);
/// Boundaries of the C(a) family, boundary squared, alternation laws.
SuiteResult verify_boundary();

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, int max_n, std::uint64_t seed);

}  // namespace dbreg

#endif  // DBREG_VERIFY_HPP
