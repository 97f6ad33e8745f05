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

#include "dbreg/graded_algebra.hpp"

#include <sstream>

namespace dbreg {

namespace {

// Sorts symbols, returning the Koszul sign or 0 when an odd symbol repeats.
int normalize(const GcAlgebra& alg, GcElement::Monomial& m) {
    int sign = 1;
    for (std::size_t i = 1; i < m.size(); ++i)
        for (std::size_t j = i; j > 0 && m[j - 1] > m[j]; --j) {
            if (alg.symbol_degree(m[j - 1]) % 2 && alg.symbol_degree(m[j]) % 2) sign = -sign;
            std::swap(m[j - 1], m[j]);
        }
    for (std::size_t i = 1; i < m.size(); ++i)
        if (m[i] == m[i - 1] && alg.symbol_degree(m[i]) % 2) return 0;
    return sign;
}

}  // namespace

GcElement GcElement::scalar(std::shared_ptr<const GcAlgebra> alg, const Rational& q) {
    GcElement e(std::move(alg));
    e.add({}, q);
    return e;
}

GcElement GcElement::generator(std::shared_ptr<const GcAlgebra> alg, int k, const Rational& q) {
    GcElement e(std::move(alg));
    e.add({2 * k}, q);
    return e;
}

void GcElement::add(const Monomial& m, const Rational& q) {
    if (q == 0) return;
    auto [it, inserted] = terms_.emplace(m, q);
    if (!inserted) {
        it->second += q;
        if (it->second == 0) terms_.erase(it);
    }
}

GcElement& GcElement::operator+=(const GcElement& o) {
    if (!alg_) alg_ = o.alg_;
    for (const auto& [m, q] : o.terms_) add(m, q);
    return *this;
}

GcElement& GcElement::operator-=(const GcElement& o) {
    if (!alg_) alg_ = o.alg_;
    for (const auto& [m, q] : o.terms_) add(m, Rational(-q));
    return *this;
}

GcElement GcElement::operator-() const {
    GcElement out = *this;
    for (auto& [m, q] : out.terms_) q = -q;
    return out;
}

GcElement multiply(const GcElement& a, const GcElement& b) {
    GcElement out(a.alg_ ? a.alg_ : b.alg_);
    if (!out.alg_) return out;
    for (const auto& [m1, q1] : a.terms_)
        for (const auto& [m2, q2] : b.terms_) {
            GcElement::Monomial m = m1;
            m.insert(m.end(), m2.begin(), m2.end());
            int sign = normalize(*out.alg_, m);
            if (sign != 0) out.add(m, Rational(q1 * q2 * sign));
        }
    return out;
}

GcElement differential(const GcElement& a) {
    GcElement out(a.alg_);
    for (const auto& [m, q] : a.terms_) {
        int before = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] % 2 == 0) {
                GcElement::Monomial v = m;
                v[i] = m[i] + 1;
                int sign = normalize(*a.alg_, v);
                if (before % 2) sign = -sign;
                if (sign != 0) out.add(v, Rational(q * sign));
            }
            before += a.alg_->symbol_degree(m[i]);
        }
    }
    return out;
}

std::string GcElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, q] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << q.get_str();
        for (int id : m) os << (id % 2 ? "*y" : "*x") << id / 2;
    }
    return os.str();
}

}  // namespace dbreg
