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

#include "dbreg/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dbreg {

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GaussianRational Polynomial::coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return {};
    return c_[static_cast<std::size_t>(k)];
}

GaussianRational Polynomial::operator()(const GaussianRational& x) const {
    GaussianRational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Complex Polynomial::operator()(const Complex& x) const {
    Complex acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
    return acc;
}

std::vector<Complex> Polynomial::to_complex() const {
    std::vector<Complex> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.to_complex());
    return out;
}

Polynomial Polynomial::derivative() const {
    std::vector<GaussianRational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * GaussianRational(Rational(static_cast<long>(k))));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    if (c_.empty()) return *this;
    GaussianRational lc = c_.back();
    std::vector<GaussianRational> out = c_;
    for (auto& c : out) c /= lc;
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<GaussianRational> out(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    c_ = std::move(out);
    trim();
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<GaussianRational> r = c_;
    const int dd = d.degree();
    if (degree() < dd) return {Polynomial(), *this};
    std::vector<GaussianRational> q(static_cast<std::size_t>(degree() - dd + 1));
    const GaussianRational lc = d.leading();
    for (int k = degree() - dd; k >= 0; --k) {
        GaussianRational f = r[static_cast<std::size_t>(k + dd)] / lc;
        q[static_cast<std::size_t>(k)] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(k + j)] -= f * d.c_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

namespace {

std::string coefficient_text(const GaussianRational& c, bool& negative) {
    negative = false;
    if (c.im == 0) {
        negative = c.re < 0;
        return Rational(abs(c.re)).get_str();
    }
    if (c.re == 0) {
        negative = c.im < 0;
        Rational m = abs(c.im);
        return m == 1 ? "i" : m.get_str() + "*i";
    }
    std::string im = c.im < 0 ? " - " : " + ";
    Rational m = abs(c.im);
    return "(" + c.re.get_str() + im + (m == 1 ? "i" : m.get_str() + "*i") + ")";
}

}  // namespace

std::string Polynomial::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const GaussianRational& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        bool neg = false;
        std::string text = coefficient_text(c, neg);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        std::string mono = k == 0 ? "" : k == 1 ? var : var + "^" + std::to_string(k);
        if (mono.empty())
            os << text;
        else if (text == "1")
            os << mono;
        else
            os << text << "*" << mono;
    }
    return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<std::pair<Polynomial, int>> out;
    if (p.degree() == 0) return out;
    Polynomial dp = p.derivative();
    Polynomial a = gcd(p, dp);
    Polynomial b = p.divmod(a).first;
    Polynomial c = dp.divmod(a).first;
    Polynomial d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        Polynomial ai = gcd(b, d);
        Polynomial bn = b.divmod(ai).first;
        Polynomial cn = d.divmod(ai).first;
        if (ai.degree() > 0) out.emplace_back(ai.monic(), i);
        b = std::move(bn);
        d = cn - b.derivative();
    }
    return out;
}

std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs, int max_iter) {
    std::vector<Complex> c = coeffs;
    while (!c.empty() && c.back() == Complex(0, 0)) c.pop_back();
    const int d = static_cast<int>(c.size()) - 1;
    if (d <= 0) return {};
    if (d == 1) return {-c[0] / c[1]};

    auto eval = [&](Complex z, Complex& dp) {
        Complex p = 0;
        dp = 0;
        for (int k = d; k >= 0; --k) {
            dp = dp * z + p;
            p = p * z + c[static_cast<std::size_t>(k)];
        }
        return p;
    };

    double radius = 0;
    for (int k = 0; k < d; ++k)
        radius = std::max(radius, std::pow(std::abs(c[static_cast<std::size_t>(k)] / c.back()), 1.0 / (d - k)));
    radius = std::max(radius, 1e-3);
    std::vector<Complex> z(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k)
        z[static_cast<std::size_t>(k)] = std::polar(radius, 2 * M_PI * k / d + 0.4);

    for (int it = 0; it < max_iter; ++it) {
        double worst = 0;
        for (int k = 0; k < d; ++k) {
            Complex dp;
            Complex p = eval(z[static_cast<std::size_t>(k)], dp);
            if (p == Complex(0, 0)) continue;
            Complex ratio = p / dp;
            Complex sum = 0;
            for (int j = 0; j < d; ++j)
                if (j != k) sum += 1.0 / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
            Complex w = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
            z[static_cast<std::size_t>(k)] -= w;
            worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[static_cast<std::size_t>(k)])));
        }
        if (worst < 1e-16) break;
    }
    for (auto& r : z)
        for (int k = 0; k < 3; ++k) {
            Complex dp;
            Complex p = eval(r, dp);
            if (dp == Complex(0, 0)) break;
            Complex step = p / dp;
            if (std::abs(step) > 1e-8 * std::max(1.0, std::abs(r))) break;
            r -= step;
        }
    return z;
}

std::vector<Root> roots(const Polynomial& p) {
    std::vector<Root> out;
    for (const auto& [f, m] : squarefree_decomposition(p)) {
        if (f.degree() == 1) {
            GaussianRational r = -f.coefficient(0) / f.coefficient(1);
            out.push_back({true, r, r.to_complex(), m});
            continue;
        }
        if (f.degree() == 2) {
            const GaussianRational a = f.coefficient(2), b = f.coefficient(1), c = f.coefficient(0);
            if (auto s = exact_sqrt(b * b - GaussianRational(4) * a * c)) {
                for (const GaussianRational& sg : {*s, -*s}) {
                    GaussianRational r = (-b + sg) / (GaussianRational(2) * a);
                    out.push_back({true, r, r.to_complex(), m});
                }
                continue;
            }
        }
        for (const Complex& z : aberth_roots(f.to_complex())) out.push_back({false, {}, z, m});
    }
    return out;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial(GaussianRational(1));
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    GaussianRational lc = den_.leading();
    if (lc != GaussianRational(1)) {
        Polynomial inv(GaussianRational(1) / lc);
        num_ *= inv;
        den_ *= inv;
    }
}

GaussianRational RationalFunction::constant_value() const {
    if (!is_constant()) throw std::logic_error("rational function is not constant");
    return num_.coefficient(0) / den_.coefficient(0);
}

int RationalFunction::degree() const { return std::max(num_.degree(), den_.degree()); }

std::optional<GaussianRational> RationalFunction::evaluate(const GaussianRational& t) const {
    GaussianRational d = den_(t);
    if (d.is_zero()) return std::nullopt;
    return num_(t) / d;
}

std::optional<GaussianRational> RationalFunction::evaluate_at_infinity() const {
    if (num_.degree() > den_.degree()) return std::nullopt;
    if (num_.degree() < den_.degree()) return GaussianRational();
    return num_.leading() / den_.leading();
}

Complex RationalFunction::operator()(const Complex& t) const { return num_(t) / den_(t); }

Complex RationalFunction::derivative_at(const Complex& t) const {
    Complex n = num_(t), d = den_(t);
    return (num_.derivative()(t) * d - n * den_.derivative()(t)) / (d * d);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    *this = RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    *this = RationalFunction(num_ * o.num_, den_ * o.den_);
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw std::domain_error("division by the zero function");
    *this = RationalFunction(num_ * o.den_, den_ * o.num_);
    return *this;
}

RationalFunction RationalFunction::pow(int e) const {
    RationalFunction base = e < 0 ? RationalFunction(GaussianRational(1)) / *this : *this;
    RationalFunction out(GaussianRational(1));
    for (int k = 0; k < std::abs(e); ++k) out *= base;
    return out;
}

std::string RationalFunction::to_string(const std::string& var) const {
    std::string n = num_.to_string(var);
    if (den_ == Polynomial(GaussianRational(1))) return n;
    return "(" + n + ")/(" + den_.to_string(var) + ")";
}

}  // namespace dbreg
