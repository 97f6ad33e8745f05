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

#include "dbreg/coefficients.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace dbreg {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational pow10(long e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    bool neg = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        pos = 1;
    }
    std::string body = s.substr(pos);

    Rational out;
    if (auto slash = body.find('/'); slash != std::string::npos) {
        std::string num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed fraction: " + s);
        mpz_class d(den, 10);
        if (d == 0) throw std::invalid_argument("zero denominator: " + s);
        out = Rational(mpz_class(num, 10), d);
        out.canonicalize();
    } else {
        long exponent = 0;
        if (auto e = body.find_first_of("eE"); e != std::string::npos) {
            std::string ex = body.substr(e + 1);
            std::string digits = (!ex.empty() && (ex[0] == '+' || ex[0] == '-')) ? ex.substr(1) : ex;
            if (!all_digits(digits) || digits.size() > 6)
                throw std::invalid_argument("malformed exponent: " + s);
            exponent = std::stol(ex);
            body = body.substr(0, e);
        }
        std::string intpart = body, frac;
        if (auto dot = body.find('.'); dot != std::string::npos) {
            intpart = body.substr(0, dot);
            frac = body.substr(dot + 1);
        }
        if (intpart.empty() && frac.empty()) throw std::invalid_argument("malformed number: " + s);
        if ((!intpart.empty() && !all_digits(intpart)) || (!frac.empty() && !all_digits(frac)))
            throw std::invalid_argument("malformed number: " + s);
        mpz_class mant(intpart + frac == "" ? "0" : intpart + frac, 10);
        out = Rational(mant) * pow10(exponent - static_cast<long>(frac.size()));
        out.canonicalize();
    }
    return neg ? Rational(-out) : out;
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return parse_rational(buf);
}

std::string to_string(const Rational& q) { return q.get_str(); }

TauScalar::TauScalar(Rational q, int tau_exponent) {
    q.canonicalize();
    if (q != 0) terms_.emplace(tau_exponent, std::move(q));
}

Rational TauScalar::coefficient(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> TauScalar::homogeneous_degree() const {
    if (terms_.size() != 1) return std::nullopt;
    return terms_.begin()->first;
}

bool TauScalar::is_integral() const {
    for (const auto& [k, q] : terms_)
        if (q.get_den() != 1) return false;
    return true;
}

void TauScalar::add_term(int k, const Rational& q) {
    if (q == 0) return;
    auto [it, inserted] = terms_.emplace(k, q);
    if (!inserted) {
        it->second += q;
        if (it->second == 0) terms_.erase(it);
    }
}

TauScalar& TauScalar::operator+=(const TauScalar& o) {
    for (const auto& [k, q] : o.terms_) add_term(k, q);
    return *this;
}

TauScalar& TauScalar::operator-=(const TauScalar& o) {
    for (const auto& [k, q] : o.terms_) add_term(k, Rational(-q));
    return *this;
}

TauScalar& TauScalar::operator*=(const TauScalar& o) {
    TauScalar out;
    for (const auto& [k1, q1] : terms_)
        for (const auto& [k2, q2] : o.terms_) out.add_term(k1 + k2, Rational(q1 * q2));
    *this = std::move(out);
    return *this;
}

TauScalar& TauScalar::operator*=(const Rational& q) {
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= q;
    return *this;
}

TauScalar TauScalar::operator-() const {
    TauScalar out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

std::string TauScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, q] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << q.get_str() << " * tau^" << k;
    }
    return os.str();
}

Complex to_complex(const TauScalar& a) {
    const double two_pi = 2.0 * M_PI;
    Complex sum = 0;
    for (const auto& [k, q] : a.terms()) {
        // i^k cycles with period 4
        int r = ((k % 4) + 4) % 4;
        Complex ik = r == 0 ? Complex(1, 0) : r == 1 ? Complex(0, 1) : r == 2 ? Complex(-1, 0) : Complex(0, -1);
        sum += q.get_d() * std::pow(two_pi, k) * ik;
    }
    return sum;
}

PreciseComplex to_complex(const TauScalar& a, int digits) {
    if (digits < 1) throw std::invalid_argument("digits must be positive");
    using boost::multiprecision::mpfr_float;
    mpfr_float::default_precision(static_cast<unsigned>(digits + 20));
    const mpfr_float two_pi = 2 * boost::math::constants::pi<mpfr_float>();
    mpfr_float re = 0, im = 0;
    for (const auto& [k, q] : a.terms()) {
        mpfr_float mag = mpfr_float(q.get_num().get_str()) / mpfr_float(q.get_den().get_str());
        mag *= boost::multiprecision::pow(two_pi, k);
        switch (((k % 4) + 4) % 4) {
            case 0: re += mag; break;
            case 1: im += mag; break;
            case 2: re -= mag; break;
            default: im -= mag; break;
        }
    }
    PreciseComplex out;
    out.re = re.str(digits, std::ios_base::scientific);
    out.im = im.str(digits, std::ios_base::scientific);
    out.value = Complex(static_cast<double>(re), static_cast<double>(im));
    return out;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Rational n = o.norm();
    if (n == 0) throw std::domain_error("division by zero in Q(i)");
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
}

std::string GaussianRational::to_string() const {
    if (im == 0) return re.get_str();
    if (re == 0) return im.get_str() + "i";
    std::string sign = im < 0 ? " - " : " + ";
    return re.get_str() + sign + Rational(abs(im)).get_str() + "i";
}

namespace {

std::optional<Rational> exact_sqrt_q(const Rational& q) {
    if (q < 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

}  // namespace

std::optional<GaussianRational> exact_sqrt(const GaussianRational& z) {
    if (z.is_zero()) return GaussianRational{};
    // (x + iy)^2 = a + ib  =>  x^2 = (|z| + a)/2, y^2 = (|z| - a)/2
    auto modulus = exact_sqrt_q(z.norm());
    if (!modulus) return std::nullopt;
    auto x = exact_sqrt_q((*modulus + z.re) / 2);
    auto y = exact_sqrt_q((*modulus - z.re) / 2);
    if (!x || !y) return std::nullopt;
    Rational yy = z.im < 0 ? Rational(-*y) : *y;
    GaussianRational r{*x, yy};
    if (r * r != z) return std::nullopt;
    return r;
}

Rational factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

}  // namespace dbreg
