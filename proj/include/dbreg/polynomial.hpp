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

// Univariate polynomials and rational functions in t over Q(i), and a
// polynomial root finder that stays exact where it can.

#ifndef DBREG_POLYNOMIAL_HPP
#define DBREG_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dbreg/coefficients.hpp"

namespace dbreg {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<GaussianRational> coeffs);
    Polynomial(const GaussianRational& c) : Polynomial(std::vector<GaussianRational>{c}) {}  // NOLINT
    static Polynomial t() { return Polynomial({GaussianRational(0), GaussianRational(1)}); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<GaussianRational>& coefficients() const { return c_; }
    GaussianRational coefficient(int k) const;
    GaussianRational leading() const { return c_.empty() ? GaussianRational() : c_.back(); }

    GaussianRational operator()(const GaussianRational& x) const;
    Complex operator()(const Complex& x) const;
    std::vector<Complex> to_complex() const;

    Polynomial derivative() const;
    Polynomial monic() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    Polynomial operator-() const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Returns (quotient, remainder). Throws on division by zero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

    /// Rendering in the cycle-file expression syntax, e.g. "(1/2 + i)*t^2 - t".
    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<GaussianRational> c_;
};

/// Monic gcd (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// Yun's algorithm: p = lc * prod f_m^m with squarefree, pairwise coprime f_m.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);

struct Root {
    bool exact = false;
    GaussianRational exact_value;
    Complex value;
    int multiplicity = 1;
};

/// All roots with multiplicity. Linear factors and quadratic factors with a
/// square discriminant in Q(i) are solved exactly; the rest numerically.
std::vector<Root> roots(const Polynomial& p);

/// Simultaneous root iteration on complex coefficients (low to high).
std::vector<Complex> aberth_roots(const std::vector<Complex>& coeffs, int max_iter = 500);

class RationalFunction {
public:
    RationalFunction() : num_(), den_(GaussianRational(1)) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(GaussianRational(1)) {}  // NOLINT
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Exact value of a constant function.
    GaussianRational constant_value() const;
    /// max(deg num, deg den): the degree of the map to P^1.
    int degree() const;

    /// Value at a point of P^1; nullopt stands for infinity.
    std::optional<GaussianRational> evaluate(const GaussianRational& t) const;
    std::optional<GaussianRational> evaluate_at_infinity() const;
    Complex operator()(const Complex& t) const;
    Complex derivative_at(const Complex& t) const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction operator-() const { return RationalFunction(-num_, den_); }
    RationalFunction pow(int e) const;
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string to_string(const std::string& var = "t") const;

private:
    void reduce();
    Polynomial num_;
    Polynomial den_;
};

}  // namespace dbreg

#endif  // DBREG_POLYNOMIAL_HPP
