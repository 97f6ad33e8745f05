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

#include "dbreg/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace dbreg {

namespace {

// B_{2k} / (2k+1)!, k = 1..
constexpr double kBernoulliTerms[] = {
    0.027777777777777778,
    -0.00027777777777777778,
    4.7241118669690098e-6,
    -9.1857730746619636e-8,
    1.8978869988970999e-9,
    -4.0647616451442255e-11,
    8.9216910204564526e-13,
    -1.9939295860721076e-14,
    4.5189800296199182e-16,
    -1.0356517612181247e-17,
    2.3952186210261867e-19,
    -5.5817858743250093e-21,
    1.3091507554183213e-22,
    -3.0874198024267403e-24,
    7.3159756527022034e-26,
    -1.7408456572340007e-27,
    4.1576356446138997e-29,
    -9.9621484882846221e-31,
    2.3940344248961653e-32,
    -5.7683473553673901e-34,
    1.393179479647008e-35,
};

// |u| small enough: Li2(z) with u = -log(1 - z)
Complex bernoulli_series(Complex z) {
    Complex u = -std::log(1.0 - z);
    Complex u2 = u * u;
    Complex sum = u - u2 / 4.0;
    Complex p = u * u2;
    for (double b : kBernoulliTerms) {
        Complex term = b * p;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        p *= u2;
    }
    return sum;
}

}  // namespace

Complex log_branch(Complex z) {
    if (z == Complex(0, 0)) throw std::domain_error("log of zero");
    // -0.0 in the imaginary part must not flip the branch
    if (z.imag() == 0 && z.real() < 0) return {std::log(-z.real()), M_PI};
    return std::log(z);
}

Complex dilog(Complex z) {
    const double pi2_6 = M_PI * M_PI / 6;
    if (z == Complex(0, 0)) return 0;
    if (z == Complex(1, 0)) return pi2_6;
    if (z.imag() == 0 && z.real() > 1) throw std::domain_error("dilogarithm evaluated on its branch cut");
    if (std::norm(z) > 1) {
        Complex l = log_branch(-z);
        return -pi2_6 - 0.5 * l * l - dilog(1.0 / z);
    }
    if (z.real() > 0.5) return pi2_6 - log_branch(z) * log_branch(1.0 - z) - bernoulli_series(1.0 - z);
    return bernoulli_series(z);
}

}  // namespace dbreg
