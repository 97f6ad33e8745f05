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

#include "dbreg/verify.hpp"

#include <memory>
#include <random>
#include <stdexcept>

#include "dbreg/chow_cycles.hpp"
#include "dbreg/formal_currents.hpp"
#include "dbreg/graded_algebra.hpp"
#include "dbreg/simplex_forms.hpp"
#include "dbreg/three_term.hpp"

namespace dbreg {

void SuiteResult::add(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok, std::move(detail)});
    pass = pass && ok;
}

namespace {

bool integral(const ScalarSum& s) {
    for (const auto& [w, c] : s.terms())
        if (!c.is_integral()) return false;
    return true;
}

ScalarSum point_class() {
    ScalarSum pt(1);
    pt.add({Letter::PT0}, TauScalar::tau());
    pt.add({Letter::PTINF}, -TauScalar::tau());
    return pt;
}

FormalTriple tot_d(const FormalTriple& t) {
    return tot_differential(t, [](const ScalarSum& s) { return differential(s); });
}

bool is_zero_cycle(ParamCycle Z) {
    Z.normalize();
    return Z.components.empty();
}

}  // namespace

SuiteResult verify_comparison(int max_n) {
    SuiteResult r{"comparison", true, {}};
    for (int n = 1; n <= max_n; ++n) {
        const std::string tag = "n=" + std::to_string(n);
        const PathSum RP = build_RP(n);
        const FormalTriple RC = build_RC(n);
        const FormalTriple E = ev_words(RP);
        r.add("ev(R_P) = alt(R_C), " + tag, E == alt_push(RC));
        bool refined = E.a == RC.a && E.b == RC.b && E.c == alt_push(RC.c);
        r.add("ev(R_P) = (id, id, alt)(R_C), " + tag, refined);
        r.add("R_C has integral coefficients, " + tag, integral(RC.a) && integral(RC.b) && integral(RC.c));
        r.add("R_C equals its closed form, " + tag, RC == closed_form_RC(n));
        const std::size_t zero_forms = dx_part(RP, 0).size(), one_forms = dx_part(RP, 1).size();
        r.add("term counts 2^n and n 2^(n-1), " + tag,
              zero_forms == (std::size_t{1} << n) && one_forms == static_cast<std::size_t>(n) << (n - 1),
              std::to_string(zero_forms) + " + " + std::to_string(one_forms));
    }
    return r;
}

SuiteResult verify_differential(int max_n) {
    SuiteResult r{"differential", true, {}};
    const ScalarSum pt = point_class();
    {
        PathSum expected(1);
        expected.add({Letter::PT0}, PolyForm<TauScalar>::constant(TauScalar::tau()));
        expected.add({Letter::PTINF}, PolyForm<TauScalar>::constant(-TauScalar::tau()));
        r.add("dR^1_P = tau (PT0 - PTINF)", differential(build_RP(1)) == expected);
    }
    for (int n = 1; n <= max_n; ++n) {
        const std::string tag = "n=" + std::to_string(n);
        const PathSum RP = build_RP(n);
        const PathSum dRP = differential(RP);
        if (n >= 2) {
            const PathSum prev = build_RP(n - 1);
            PathSum faces(n);
            for (int i = 1; i <= n; ++i) {
                PathSum t = insert_slot(prev, i - 1, pt);
                if (i % 2 == 0)
                    faces -= t;
                else
                    faces += t;
            }
            r.add("dR^n_P = sum (-1)^(i+1) insert_i, " + tag, dRP == faces);
        }
        r.add("d^2 R^n_P = 0, " + tag, differential(dRP).is_zero());
        const FormalTriple RC = build_RC(n);
        const FormalTriple dRC = tot_d(RC);
        const FormalTriple ddRC = tot_d(dRC);
        r.add("d^2 R^n_C = 0, " + tag, ddRC.a.is_zero() && ddRC.b.is_zero() && ddRC.c.is_zero());
        // ev is a chain map
        r.add("ev(dR^n_P) = d ev(R^n_P), " + tag, ev_words(dRP) == tot_d(ev_words(RP)));
    }
    return r;
}

SuiteResult verify_homotopy(int max_degree) {
    using PF = PolyForm<Rational>;
    SuiteResult r{"homotopy", true, {}};
    std::vector<PF> basis;
    for (int a = 0; a <= max_degree; ++a) {
        basis.push_back(PF::monomial(Rational(1), a, 0, false));
        basis.push_back(PF::monomial(Rational(1), a, 0, true));
    }
    bool homotopy_ok = true;
    std::string first_failure;
    for (const PF& u : basis) {
        PF lhs = differential(homotopy_h(u)) + homotopy_h(differential(u));
        PF rhs = split_s(ev_map(u)) - u;
        if (lhs != rhs) {
            homotopy_ok = false;
            if (first_failure.empty()) first_failure = "fails on a basis monomial";
        }
    }
    r.add("dh + hd = s ev - id on monomials of degree <= " + std::to_string(max_degree), homotopy_ok, first_failure);
    bool section_ok = true;
    for (int k = 0; k < 3; ++k) {
        EvTriple<Rational> t{};
        (k == 0 ? t.at0 : k == 1 ? t.at1 : t.integral) = 1;
        if (!(ev_map(split_s(t)) == t)) section_ok = false;
    }
    EvTriple<Rational> mixed{Rational(3, 7), Rational(-5, 2), Rational(11, 3)};
    if (!(ev_map(split_s(mixed)) == mixed)) section_ok = false;
    r.add("ev s = id", section_ok);
    bool chain_ok = true;
    for (const PF& u : basis) {
        auto e = ev_map(u);
        auto de = ev_map(differential(u));
        // d(a, b, c) = (da, db, b - a - dc) with da = db = 0 over a point
        if (!(de.at0 == 0 && de.at1 == 0 && de.integral == e.at1 - e.at0)) chain_ok = false;
    }
    r.add("ev is a chain map on monomials", chain_ok);
    return r;
}

SuiteResult verify_products(std::uint64_t seed, int trials) {
    SuiteResult r{"products", true, {}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> deg(1, 3), num(-9, 9), den(1, 5);
    auto q = [&] {
        int a = num(rng);
        if (a == 0) a = 1;
        Rational out(a, den(rng));
        out.canonicalize();
        return out;
    };
    using T = Triple<GcElement>;
    auto mul = [](const GcElement& a, const GcElement& b) { return multiply(a, b); };
    auto d = [](const GcElement& a) { return differential(a); };
    auto scaled = [](const T& t, int sign) {
        T out = t;
        if (sign < 0) {
            out.a = -out.a;
            out.b = -out.b;
            out.c = -out.c;
        }
        return out;
    };
    int assoc_fail = 0, comm_fail = 0, leibniz_fail = 0;
    for (int trial = 0; trial < trials; ++trial) {
        int r3[3] = {deg(rng), deg(rng), deg(rng)};
        std::vector<int> gens;
        for (int k : r3) gens.insert(gens.end(), {k, k, k - 1});
        auto alg = std::make_shared<const GcAlgebra>(gens);
        std::vector<T> ts;
        for (int k = 0; k < 3; ++k) {
            T t;
            t.degree = r3[k];
            t.a = GcElement::generator(alg, 3 * k, q()) + differential(GcElement::generator(alg, 3 * k + 2, q()));
            t.b = GcElement::generator(alg, 3 * k + 1, q());
            t.c = GcElement::generator(alg, 3 * k + 2, q());
            ts.push_back(t);
        }
        for (Rational alpha : {Rational(0), Rational(1)}) {
            auto P = [&](const T& x, const T& y) { return product_alpha(alpha, x, y, mul); };
            if (!(P(P(ts[0], ts[1]), ts[2]) == P(ts[0], P(ts[1], ts[2])))) ++assoc_fail;
        }
        const Rational half(1, 2);
        auto H = [&](const T& x, const T& y) { return product_alpha(half, x, y, mul); };
        int sign = (ts[0].degree * ts[1].degree) % 2 ? -1 : 1;
        if (!(H(ts[0], ts[1]) == scaled(H(ts[1], ts[0]), sign))) ++comm_fail;
        for (Rational alpha : {Rational(0), half, Rational(1)}) {
            auto P = [&](const T& x, const T& y) { return product_alpha(alpha, x, y, mul); };
            T lhs = tot_differential(P(ts[0], ts[1]), d);
            T rhs = P(tot_differential(ts[0], d), ts[1]) +
                    scaled(P(ts[0], tot_differential(ts[1], d)), ts[0].degree % 2 ? -1 : 1);
            if (!(lhs == rhs)) ++leibniz_fail;
        }
    }
    const std::string of = " of " + std::to_string(trials);
    r.add("associativity at alpha = 0, 1", assoc_fail == 0, std::to_string(assoc_fail) + " failures" + of);
    r.add("graded commutativity at alpha = 1/2", comm_fail == 0, std::to_string(comm_fail) + " failures" + of);
    r.add("Leibniz rule for the tot differential", leibniz_fail == 0, std::to_string(leibniz_fail) + " failures" + of);
    return r;
}

SuiteResult verify_boundary() {
    SuiteResult r{"boundary", true, {}};
    const std::vector<GaussianRational> samples = {
        GaussianRational(Rational(1, 2)),           GaussianRational(Rational(1, 3)),
        GaussianRational(Rational(3, 10), Rational(1, 5)), GaussianRational(Rational(7, 10), Rational(-2, 5)),
        GaussianRational(Rational(1, 2), Rational(3)),     GaussianRational(Rational(-2), Rational(1, 7)),
    };
    for (const auto& a : samples) {
        const std::string tag = "a = " + a.to_string();
        const ParamCycle C = totaro_C(a);
        PointCycle expected(2);
        expected.add(-1, {PointValue::exact_value(a), PointValue::exact_value(GaussianRational(1) - a)});
        const PointCycle dC = bloch_boundary(C);
        r.add("dC(a) = -(a, 1 - a), " + tag, dC.equals(expected), dC.to_string());
        const ParamCycle Z = C - totaro_D(GaussianRational(1) - a);
        r.add("d(C(a) - D(1 - a)) = 0, " + tag, bloch_boundary(Z).is_zero());
        r.add("d^2 = 0, " + tag, bloch_boundary(dC).is_zero());
        const ParamCycle A = alt_cycle(C);
        r.add("alt idempotent, " + tag, is_zero_cycle(alt_cycle(A) - A));
        r.add("alt d = d alt, " + tag, alt_points(dC).equals(bloch_boundary(A)));
    }
    const ParamCycle C1 = totaro_C(GaussianRational(1));
    r.add("dC(1) = 0", bloch_boundary(C1).is_zero());
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"comparison", "differential", "homotopy", "products", "boundary"};
    return names;
}

SuiteResult run_suite(const std::string& name, int max_n, std::uint64_t seed) {
    if (name == "comparison") return verify_comparison(max_n);
    if (name == "differential") return verify_differential(max_n);
    if (name == "homotopy") return verify_homotopy();
    if (name == "products") return verify_products(seed);
    if (name == "boundary") return verify_boundary();
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace dbreg
