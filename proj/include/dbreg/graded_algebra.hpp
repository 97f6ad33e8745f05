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

// Free graded-commutative dg algebra on generators x_k of chosen degrees and
// their differentials y_k = d x_k. Used to test the product laws of the
// three-term complex independently of any geometry.

#ifndef DBREG_GRADED_ALGEBRA_HPP
#define DBREG_GRADED_ALGEBRA_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dbreg/coefficients.hpp"

namespace dbreg {

class GcAlgebra {
public:
    explicit GcAlgebra(std::vector<int> generator_degrees) : degrees_(std::move(generator_degrees)) {}
    int generator_count() const { return static_cast<int>(degrees_.size()); }
    /// Symbol ids: 2k is x_k, 2k+1 is y_k = d x_k.
    int symbol_degree(int id) const { return degrees_.at(static_cast<std::size_t>(id / 2)) + id % 2; }

private:
    std::vector<int> degrees_;
};

/// Monomials are nondecreasing symbol lists; odd symbols occur at most once.
class GcElement {
public:
    using Monomial = std::vector<int>;

    GcElement() = default;
    explicit GcElement(std::shared_ptr<const GcAlgebra> alg) : alg_(std::move(alg)) {}

    static GcElement scalar(std::shared_ptr<const GcAlgebra> alg, const Rational& q);
    static GcElement generator(std::shared_ptr<const GcAlgebra> alg, int k, const Rational& q = 1);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GcElement& operator+=(const GcElement& o);
    GcElement& operator-=(const GcElement& o);
    GcElement operator-() const;
    friend GcElement operator+(GcElement a, const GcElement& b) { return a += b; }
    friend GcElement operator-(GcElement a, const GcElement& b) { return a -= b; }
    friend GcElement operator*(GcElement a, const Rational& q) {
        if (q == 0) a.terms_.clear();
        for (auto& [m, c] : a.terms_) c *= q;
        return a;
    }
    friend bool operator==(const GcElement& a, const GcElement& b) { return a.terms_ == b.terms_; }

    friend GcElement multiply(const GcElement& a, const GcElement& b);
    friend GcElement differential(const GcElement& a);

    std::string to_string() const;

private:
    void add(const Monomial& m, const Rational& q);
    std::shared_ptr<const GcAlgebra> alg_;
    std::map<Monomial, Rational> terms_;
};

GcElement multiply(const GcElement& a, const GcElement& b);
GcElement differential(const GcElement& a);

}  // namespace dbreg

#endif  // DBREG_GRADED_ALGEBRA_HPP
