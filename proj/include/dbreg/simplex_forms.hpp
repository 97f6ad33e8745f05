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

// Polynomial differential forms f(x) + g(x) dx on the 1-simplex and the
// ev / s / h operators relating path elements to triples.

#ifndef DBREG_SIMPLEX_FORMS_HPP
#define DBREG_SIMPLEX_FORMS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "dbreg/coefficients.hpp"

namespace dbreg {

inline bool scalar_is_zero(const TauScalar& c) { return c.is_zero(); }
inline bool scalar_is_zero(const Complex& c) { return c == Complex(0.0, 0.0); }
inline bool scalar_is_zero(const Rational& c) { return c == 0; }

template <class C>
C scalar_from_rational(const Rational& q);
template <>
inline TauScalar scalar_from_rational<TauScalar>(const Rational& q) { return TauScalar(q); }
template <>
inline Complex scalar_from_rational<Complex>(const Rational& q) { return Complex(q.get_d(), 0.0); }
template <>
inline Rational scalar_from_rational<Rational>(const Rational& q) { return q; }

/// f(x) + g(x) dx with dense coefficient vectors (index = power of x).
/// C is TauScalar for the symbolic layer or Complex for numeric payloads.
template <class C>
struct PolyForm {
    std::vector<C> f;
    std::vector<C> g;

    PolyForm() = default;
    PolyForm(std::vector<C> f0, std::vector<C> g0) : f(std::move(f0)), g(std::move(g0)) { normalize(); }

    static PolyForm constant(const C& c) { return PolyForm({c}, {}); }
    static PolyForm one() { return constant(scalar_from_rational<C>(1)); }
    static PolyForm x() { return PolyForm({C{}, scalar_from_rational<C>(1)}, {}); }
    static PolyForm one_minus_x() {
        return PolyForm({scalar_from_rational<C>(1), scalar_from_rational<C>(-1)}, {});
    }
    static PolyForm dx() { return PolyForm({}, {scalar_from_rational<C>(1)}); }
    /// c * x^a * (1-x)^b, with an optional trailing dx.
    static PolyForm monomial(const C& c, int a, int b, bool with_dx);

    void normalize() {
        while (!f.empty() && scalar_is_zero(f.back())) f.pop_back();
        while (!g.empty() && scalar_is_zero(g.back())) g.pop_back();
    }
    bool is_zero() const { return f.empty() && g.empty(); }
    bool has_zero_form() const { return !f.empty(); }
    bool has_one_form() const { return !g.empty(); }
    /// 0 or 1 for homogeneous forms, -1 for mixed, 0 for the zero form.
    int degree() const {
        if (f.empty()) return g.empty() ? 0 : 1;
        return g.empty() ? 0 : -1;
    }
    PolyForm zero_form_part() const { return PolyForm(f, {}); }
    PolyForm one_form_part() const { return PolyForm({}, g); }
    /// f - g dx, i.e. the action of (-1)^degree on homogeneous parts.
    PolyForm parity_twist() const {
        PolyForm out = *this;
        for (auto& c : out.g) c = -c;
        return out;
    }

    PolyForm& operator+=(const PolyForm& o) {
        add_into(f, o.f);
        add_into(g, o.g);
        normalize();
        return *this;
    }
    PolyForm& operator-=(const PolyForm& o) { return *this += -o; }
    PolyForm operator-() const {
        PolyForm out = *this;
        for (auto& c : out.f) c = -c;
        for (auto& c : out.g) c = -c;
        return out;
    }
    PolyForm& operator*=(const C& c) {
        for (auto& v : f) v = v * c;
        for (auto& v : g) v = v * c;
        normalize();
        return *this;
    }
    friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
    friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
    friend PolyForm operator*(PolyForm a, const C& c) { return a *= c; }
    friend PolyForm operator*(const C& c, PolyForm a) { return a *= c; }
    friend bool operator==(const PolyForm& a, const PolyForm& b) { return a.f == b.f && a.g == b.g; }
    friend bool operator!=(const PolyForm& a, const PolyForm& b) { return !(a == b); }

private:
    static void add_into(std::vector<C>& acc, const std::vector<C>& v) {
        if (acc.size() < v.size()) acc.resize(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) acc[i] = acc[i] + v[i];
    }
};

namespace detail {

template <class C>
std::vector<C> poly_mul(const std::vector<C>& a, const std::vector<C>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<C> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (scalar_is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
}

template <class C>
std::vector<C> poly_add(std::vector<C> a, const std::vector<C>& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = a[i] + b[i];
    return a;
}

}  // namespace detail

template <class C>
PolyForm<C> PolyForm<C>::monomial(const C& c, int a, int b, bool with_dx) {
    std::vector<C> p(static_cast<std::size_t>(a) + 1);
    p[static_cast<std::size_t>(a)] = c;
    const std::vector<C> omx = {scalar_from_rational<C>(1), scalar_from_rational<C>(-1)};
    for (int k = 0; k < b; ++k) p = detail::poly_mul(p, omx);
    return with_dx ? PolyForm({}, p) : PolyForm(p, {});
}

/// (f1 + g1 dx)(f2 + g2 dx) = f1 f2 + (f1 g2 + g1 f2) dx.
template <class C>
PolyForm<C> wedge(const PolyForm<C>& u, const PolyForm<C>& v) {
    return PolyForm<C>(detail::poly_mul(u.f, v.f),
                       detail::poly_add(detail::poly_mul(u.f, v.g), detail::poly_mul(u.g, v.f)));
}

/// d(f + g dx) = f'(x) dx.
template <class C>
PolyForm<C> differential(const PolyForm<C>& u) {
    std::vector<C> g;
    for (std::size_t k = 1; k < u.f.size(); ++k)
        g.push_back(u.f[k] * scalar_from_rational<C>(Rational(static_cast<long>(k))));
    return PolyForm<C>({}, std::move(g));
}

/// f(eps) for eps in {0, 1}; the dx part is discarded.
template <class C>
C evaluate_at(const PolyForm<C>& u, int eps) {
    if (eps != 0 && eps != 1) throw std::invalid_argument("evaluate_at: eps must be 0 or 1");
    if (u.f.empty()) return C{};
    if (eps == 0) return u.f[0];
    C sum{};
    for (const auto& c : u.f) sum = sum + c;
    return sum;
}

/// Integral of g over [0, 1]; 0-forms integrate to zero.
template <class C>
C integrate_full(const PolyForm<C>& u) {
    C sum{};
    for (std::size_t k = 0; k < u.g.size(); ++k)
        sum = sum + u.g[k] * scalar_from_rational<C>(Rational(1, static_cast<long>(k + 1)));
    return sum;
}

/// The 0-form G(x) = integral of g from 0 to x.
template <class C>
PolyForm<C> integrate_partial(const PolyForm<C>& u) {
    if (u.g.empty()) return {};
    std::vector<C> G(u.g.size() + 1);
    for (std::size_t k = 0; k < u.g.size(); ++k)
        G[k + 1] = u.g[k] * scalar_from_rational<C>(Rational(1, static_cast<long>(k + 1)));
    return PolyForm<C>(std::move(G), {});
}

template <class C>
struct EvTriple {
    C at0{};
    C at1{};
    C integral{};
    friend bool operator==(const EvTriple& a, const EvTriple& b) {
        return a.at0 == b.at0 && a.at1 == b.at1 && a.integral == b.integral;
    }
};

template <class C>
EvTriple<C> ev_map(const PolyForm<C>& u) {
    return {evaluate_at(u, 0), evaluate_at(u, 1), integrate_full(u)};
}

/// (a, b, c) -> (1-x) a + x b + dx c.
template <class C>
PolyForm<C> split_s(const EvTriple<C>& t) {
    return PolyForm<C>::one_minus_x() * t.at0 + PolyForm<C>::x() * t.at1 + PolyForm<C>::dx() * t.integral;
}

/// h(f + g dx) = x * int_0^1 g - int_0^x g.
template <class C>
PolyForm<C> homotopy_h(const PolyForm<C>& u) {
    return PolyForm<C>::x() * integrate_full(u) - integrate_partial(u);
}

/// Factored rendering such as "x*(1-x) dx" or "-2*(1-x) dx"; falls back to
/// an expanded sum when the form is not c x^a (1-x)^b on each part.
std::string to_string(const PolyForm<TauScalar>& u);
std::string to_string(const PolyForm<Complex>& u);

}  // namespace dbreg

#endif  // DBREG_SIMPLEX_FORMS_HPP
