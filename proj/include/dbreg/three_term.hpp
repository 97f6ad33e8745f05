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

// Elements (a, b, c) of the three-term total complex, its differential and
// the alpha-family of products. The slot type T is generic: formal word sums,
// the free graded-commutative test algebra, or numeric values.

#ifndef DBREG_THREE_TERM_HPP
#define DBREG_THREE_TERM_HPP

#include "dbreg/coefficients.hpp"

namespace dbreg {

template <class T>
struct Triple {
    T a{};
    T b{};
    T c{};
    int degree = 0;

    friend bool operator==(const Triple& x, const Triple& y) {
        return x.degree == y.degree && x.a == y.a && x.b == y.b && x.c == y.c;
    }
    friend bool operator!=(const Triple& x, const Triple& y) { return !(x == y); }

    Triple& operator+=(const Triple& o) {
        a += o.a;
        b += o.b;
        c += o.c;
        return *this;
    }
    friend Triple operator+(Triple x, const Triple& y) { return x += y; }
};

/// d(a, b, c) = (da, db, b - a - dc).
template <class T, class D>
Triple<T> tot_differential(const Triple<T>& t, D&& d) {
    Triple<T> out;
    out.a = d(t.a);
    out.b = d(t.b);
    out.c = t.b - t.a - d(t.c);
    out.degree = t.degree + 1;
    return out;
}

/// Beilinson's product
///   (a a~, b b~, alpha c a~ + (1-alpha) c b~ + (-1)^r [(1-alpha) a c~ + alpha b c~])
/// with r the degree of the left factor. `mul` is the slot product.
template <class T, class Mul>
Triple<T> product_alpha(const Rational& alpha, const Triple<T>& t, const Triple<T>& u, Mul&& mul) {
    const Rational beta = 1 - alpha;
    const Rational sign = (t.degree % 2 == 0) ? 1 : -1;
    Triple<T> out;
    out.a = mul(t.a, u.a);
    out.b = mul(t.b, u.b);
    out.c = mul(t.c, u.a) * alpha + mul(t.c, u.b) * beta +
            (mul(t.a, u.c) * Rational(beta * sign) + mul(t.b, u.c) * Rational(alpha * sign));
    out.degree = t.degree + u.degree;
    return out;
}

}  // namespace dbreg

#endif  // DBREG_THREE_TERM_HPP
