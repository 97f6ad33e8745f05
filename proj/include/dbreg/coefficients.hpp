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

// Exact scalars: rationals, Gaussian rationals and the tau-graded ring,
// where tau stands for the unit 2*pi*i and is never expanded symbolically.

#ifndef DBREG_COEFFICIENTS_HPP
#define DBREG_COEFFICIENTS_HPP

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dbreg {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Parses "3", "-7/12" or a finite decimal such as "0.25" or "-1.5e-3" into
/// an exact rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Exact rational closest to the shortest decimal representation of x
/// (0.3 becomes 3/10, not the binary expansion of the double).
Rational rational_from_double(double x);

std::string to_string(const Rational& q);

/// Element of Q[tau, tau^-1]: a finite map from tau-exponent to coefficient.
class TauScalar {
public:
    TauScalar() = default;
    TauScalar(Rational q, int tau_exponent = 0);  // NOLINT(google-explicit-constructor)
    TauScalar(long q) : TauScalar(Rational(q)) {}  // NOLINT(google-explicit-constructor)
    TauScalar(int q) : TauScalar(Rational(q)) {}   // NOLINT(google-explicit-constructor)

    static TauScalar tau(int k = 1) { return TauScalar(Rational(1), k); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Rational>& terms() const { return terms_; }
    Rational coefficient(int k) const;

    /// The single tau-exponent if the scalar is homogeneous (zero has none).
    std::optional<int> homogeneous_degree() const;
    /// True when every coefficient is an integer.
    bool is_integral() const;

    TauScalar& operator+=(const TauScalar& o);
    TauScalar& operator-=(const TauScalar& o);
    TauScalar& operator*=(const TauScalar& o);
    TauScalar& operator*=(const Rational& q);

    friend TauScalar operator+(TauScalar a, const TauScalar& b) { return a += b; }
    friend TauScalar operator-(TauScalar a, const TauScalar& b) { return a -= b; }
    friend TauScalar operator*(TauScalar a, const TauScalar& b) { return a *= b; }
    friend TauScalar operator*(TauScalar a, const Rational& q) { return a *= q; }
    friend TauScalar operator*(const Rational& q, TauScalar a) { return a *= q; }
    TauScalar operator-() const;

    friend bool operator==(const TauScalar& a, const TauScalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TauScalar& a, const TauScalar& b) { return !(a == b); }

    /// Renders as "q * tau^k + ..." in increasing k; "0" for zero.
    std::string to_string() const;

private:
    void add_term(int k, const Rational& q);
    std::map<int, Rational> terms_;
};

/// Substitutes tau = 2*pi*i in double precision.
Complex to_complex(const TauScalar& a);

/// High-precision evaluation of a TauScalar: real and imaginary parts as
/// decimal strings with `digits` significant digits, plus the double value.
struct PreciseComplex {
    std::string re;
    std::string im;
    Complex value;
};
PreciseComplex to_complex(const TauScalar& a, int digits);

/// Exact element of Q(i).
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
    GaussianRational(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(int r) : re(r), im(0) {}   // NOLINT(google-explicit-constructor)

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    Rational norm() const { return re * re + im * im; }
    GaussianRational conj() const { return {re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);  // throws on division by zero

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re, -im}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    Complex to_complex() const { return {re.get_d(), im.get_d()}; }
    std::string to_string() const;
};

/// Exact square root in Q(i) when one exists.
std::optional<GaussianRational> exact_sqrt(const GaussianRational& z);

/// Integer factorial as a rational.
Rational factorial(int n);

}  // namespace dbreg

#endif  // DBREG_COEFFICIENTS_HPP
