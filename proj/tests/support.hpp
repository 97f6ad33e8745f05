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

// Shared helpers for the test binaries.

#ifndef DBREG_TESTS_SUPPORT_HPP
#define DBREG_TESTS_SUPPORT_HPP

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <complex>
#include <string>

#include "dbreg/chow_cycles.hpp"
#include "dbreg/formal_currents.hpp"

namespace dbreg::testing {

// "RDL0I" -> RNEG DLOG LOG PT0 PTINF
inline Word word(const std::string& s) {
    Word w;
    for (char c : s) {
        switch (c) {
            case 'R': w.push_back(Letter::RNEG); break;
            case 'D': w.push_back(Letter::DLOG); break;
            case 'L': w.push_back(Letter::LOG); break;
            case '0': w.push_back(Letter::PT0); break;
            case 'I': w.push_back(Letter::PTINF); break;
            default: break;
        }
    }
    return w;
}

// q tau^k x^a (1-x)^b [dx]
inline PolyForm<TauScalar> form(const Rational& q, int k, int a, int b, bool dx) {
    return PolyForm<TauScalar>::monomial(TauScalar(q, k), a, b, dx);
}

inline GaussianRational gq(long re_num, long re_den, long im_num = 0, long im_den = 1) {
    Rational re(re_num, re_den), im(im_num, im_den);
    re.canonicalize();
    im.canonicalize();
    return {re, im};
}

// Li2(z) = -int_0^1 log(1 - z s) / s ds by tanh-sinh quadrature, for z off (1, inf).
inline std::complex<double> dilog_oracle(std::complex<double> z) {
    boost::math::quadrature::tanh_sinh<double> ts;
    auto part = [&](bool imag) {
        return ts.integrate([&](double s) {
            if (s <= 0) return imag ? z.imag() : z.real();
            std::complex<double> v = -std::log(1.0 - z * s) / s;
            return imag ? v.imag() : v.real();
        }, 0.0, 1.0);
    };
    return {part(false), part(true)};
}

inline const std::vector<GaussianRational>& sample_parameters() {
    static const std::vector<GaussianRational> a = {gq(1, 2), gq(3, 10, 1, 5), gq(7, 10, -2, 5)};
    return a;
}

}  // namespace dbreg::testing

#endif  // DBREG_TESTS_SUPPORT_HPP
