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

#include "dbreg/regulator_engine.hpp"

#include <algorithm>
#include <cmath>

#include "dbreg/errors.hpp"
#include "dbreg/quadrature.hpp"
#include "dbreg/special_functions.hpp"

namespace dbreg {

namespace {

const Complex kTau(0, 2 * M_PI);

Complex tau_power(int k) {
    Complex r = 1;
    for (int i = 0; i < std::abs(k); ++i) r *= kTau;
    return k < 0 ? 1.0 / r : r;
}

// forward-mode derivative along one real direction
struct Dual {
    Complex v, d;
};
Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
Dual operator/(Dual a, Dual b) { return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)}; }

Dual horner(const std::vector<Complex>& c, Dual x) {
    Dual v{0, 0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + Dual{*it, 0};
    return v;
}

Dual eval_dual(const RationalFunction& f, Dual t) {
    return horner(f.numerator().to_complex(), t) / horner(f.denominator().to_complex(), t);
}

double max_abs(const PolyForm<Complex>& u) {
    double m = 0;
    for (const auto& c : u.f) m = std::max(m, std::abs(c));
    for (const auto& c : u.g) m = std::max(m, std::abs(c));
    return m;
}

Complex log_of(const PointValue& v) {
    if (v.infinite || v.value() == Complex(0, 0)) throw NumericError("logarithm of a coordinate at 0 or infinity");
    return log_branch(v.value());
}

}  // namespace

PolyForm<Complex> to_complex(const PolyForm<TauScalar>& u) {
    std::vector<Complex> f, g;
    for (const auto& c : u.f) f.push_back(to_complex(c));
    for (const auto& c : u.g) g.push_back(to_complex(c));
    return PolyForm<Complex>(f, g);
}

Triple<Complex> ev(const PolyForm<Complex>& w) {
    Triple<Complex> t;
    t.a = evaluate_at(w, 0);
    t.b = evaluate_at(w, 1);
    t.c = integrate_full(w);
    return t;
}

double max_difference(const PolyForm<Complex>& u, const PolyForm<Complex>& v) { return max_abs(u - v); }

double max_difference(const Triple<Complex>& u, const Triple<Complex>& v) {
    return std::max({std::abs(u.a - v.a), std::abs(u.b - v.b), std::abs(u.c - v.c)});
}

// ---------------------------------------------------------------------------

struct WordEvaluator::ComponentCache {
    std::map<int, ArcFamily> families;
    std::map<std::pair<int, int>, PairwiseReport> pairs;
    std::map<std::vector<int>, double> holomorphic;
};

WordEvaluator::WordEvaluator(const ParamCycle& Z, RegulatorOptions opt) : Z_(Z), opt_(opt) {}
WordEvaluator::~WordEvaluator() = default;

WordEvaluator::ComponentCache& WordEvaluator::cache(int component) {
    auto& slot = caches_[component];
    if (!slot) slot = std::make_unique<ComponentCache>();
    return *slot;
}

const ArcFamily& WordEvaluator::family(int component, int slot) {
    auto& c = cache(component);
    auto it = c.families.find(slot);
    if (it == c.families.end()) {
        ArcFamily fam = extract_arcs(Z_.components.at(static_cast<std::size_t>(component)), slot,
                                     {opt_.arc_steps, 1e-9});
        fam.component = component;
        it = c.families.emplace(slot, std::move(fam)).first;
    }
    return it->second;
}

const PairwiseReport& WordEvaluator::pair(int component, int a, int b) {
    auto& c = cache(component);
    auto key = std::make_pair(a, b);
    auto it = c.pairs.find(key);
    if (it == c.pairs.end()) {
        PairwiseReport rep = pairwise_proper(family(component, a), family(component, b),
                                             Z_.components.at(static_cast<std::size_t>(component)));
        if (!rep.proper) throw InadmissibleError(rep.issues.empty() ? "real faces meet improperly" : rep.issues.front());
        it = c.pairs.emplace(key, std::move(rep)).first;
    }
    return it->second;
}

Estimate WordEvaluator::arc_integral(int component, const ArcTerm& term, double abs_tol) {
    const CycleComponent& comp = Z_.components.at(static_cast<std::size_t>(component));
    const ArcFamily& F = family(component, term.rneg_slot);
    if (F.arcs.empty()) return {};
    std::vector<double> breaks = F.critical_ells;
    for (int j : term.log_slots)
        for (const auto& c : pair(component, term.rneg_slot, j).crossings) breaks.push_back(c.ell_a);
    for (const auto& arc : F.arcs)
        for (const auto& e : coordinate_events(arc, comp)) {
            if (e.slot == term.dlog_slot) throw NumericError("dlog pole in the interior of a real face");
            if (std::find(term.log_slots.begin(), term.log_slots.end(), e.slot) != term.log_slots.end())
                breaks.push_back(e.ell);
        }
    const RationalFunction& fc = comp.coords.at(static_cast<std::size_t>(term.dlog_slot));
    auto integrand = [&](double ell) {
        Complex sum = 0;
        for (const P1Point& p : F.points_at(ell)) {
            if (p.is_infinity()) continue;
            const Complex t = p.t();
            Complex v = fc.derivative_at(t) / fc(t);
            for (int j : term.log_slots) v *= log_branch(comp.coords[static_cast<std::size_t>(j)](t));
            sum += v * F.equation.t_derivative(ell, p);
        }
        return sum;
    };
    // pole -> zero is the direction of decreasing ell
    QuadratureResult q = integrate(integrand, F.ell_max(), F.ell_min(), abs_tol, breaks);
    if (!q.converged) throw NumericError("arc quadrature did not reach the requested tolerance");
    return {q.value, q.error};
}

Estimate WordEvaluator::crossing_sum(int component, int a, int b, const std::vector<int>& log_slots) {
    const CycleComponent& comp = Z_.components.at(static_cast<std::size_t>(component));
    Estimate out;
    for (const auto& c : pair(component, a, b).crossings) {
        Complex v = static_cast<double>(c.sign);
        for (int j : log_slots) v *= log_branch(comp.coords[static_cast<std::size_t>(j)](c.t));
        out.value += v;
        out.error += 1e-13 * (1 + std::abs(v));
    }
    return out;
}

double WordEvaluator::holomorphic_defect(int component, int a, int b, const std::vector<int>& log_slots) {
    std::vector<int> key{a, b};
    key.insert(key.end(), log_slots.begin(), log_slots.end());
    auto& cc = cache(component);
    if (auto it = cc.holomorphic.find(key); it != cc.holomorphic.end()) return it->second;

    const CycleComponent& comp = Z_.components.at(static_cast<std::size_t>(component));
    const RationalFunction& fa = comp.coords.at(static_cast<std::size_t>(a));
    const RationalFunction& fb = comp.coords.at(static_cast<std::size_t>(b));
    // dx^dy coefficient at t given a chart map (identity or u -> 1/u)
    auto density = [&](Complex w, bool u_chart) {
        auto chart = [&](Dual x) { return u_chart ? Dual{1, 0} / x : x; };
        Dual ex = chart({w, 1}), ey = chart({w, Complex(0, 1)});
        Dual ax = eval_dual(fa, ex), ay = eval_dual(fa, ey);
        Dual bx = eval_dual(fb, ex), by = eval_dual(fb, ey);
        Complex a1 = ax.d / ax.v, a2 = ay.d / ay.v, b1 = bx.d / bx.v, b2 = by.d / by.v;
        Complex v = a1 * b2 - a2 * b1;
        const Complex t = ex.v;
        for (int j : log_slots) v *= log_branch(comp.coords[static_cast<std::size_t>(j)](t));
        return v;
    };
    // midpoint rule on the unit disks of both charts
    const int nr = 48, nth = 96;
    Complex total = 0;
    for (bool u_chart : {false, true})
        for (int i = 0; i < nr; ++i)
            for (int k = 0; k < nth; ++k) {
                double r = (i + 0.5) / nr, th = 2 * M_PI * (k + 0.5) / nth;
                Complex w = std::polar(r, th);
                Complex v = density(w, u_chart);
                if (!std::isfinite(std::abs(v))) continue;
                total += v * (r / nr) * (2 * M_PI / nth);
            }
    double d = std::abs(total);
    cc.holomorphic[key] = d;
    return d;
}

Estimate WordEvaluator::evaluate(const Word& w, std::vector<TermDiagnostic>* diag) {
    Estimate total;
    for (std::size_t ci = 0; ci < Z_.components.size(); ++ci) {
        const CycleComponent& comp = Z_.components[ci];
        const int dim = comp.kind == ComponentKind::Curve ? 2 : 0;
        if (word_degree(w) != dim) continue;
        std::vector<int> R, D, L;
        for (int i = 0; i < static_cast<int>(w.size()); ++i) {
            switch (w[static_cast<std::size_t>(i)]) {
                case Letter::RNEG: R.push_back(i); break;
                case Letter::DLOG: D.push_back(i); break;
                case Letter::LOG: L.push_back(i); break;
                default: throw std::invalid_argument("point-class letters cannot be evaluated on a cycle");
            }
        }
        Estimate e;
        std::string method;
        if (comp.kind == ComponentKind::Point) {
            e.value = 1;
            for (int j : L) e.value *= log_of(comp.point.at(static_cast<std::size_t>(j)));
            e.error = 1e-15 * std::abs(e.value);
            method = "point";
        } else if (R.size() == 2) {
            e = crossing_sum(static_cast<int>(ci), R[0], R[1], L);
            method = "crossings";
        } else if (R.size() == 1) {
            e = arc_integral(static_cast<int>(ci), {R[0], L, D[0]}, 0.1 * opt_.abs_tol);
            if (D[0] < R[0]) e.value = -e.value;
            method = "arc";
        } else {
            double defect = holomorphic_defect(static_cast<int>(ci), D[0], D[1], L);
            if (defect > opt_.holomorphic_tol)
                throw NumericError("holomorphic vanishing check failed for " + word_name(w));
            e = {0, defect};
            method = "holomorphic";
        }
        const Complex m = comp.multiplicity.get_d();
        total.value += m * e.value;
        total.error += std::abs(m) * e.error;
        if (diag) diag->push_back({word_name(w), static_cast<int>(ci) + 1, m * e.value, std::abs(m) * e.error, method});
    }
    return total;
}

// ---------------------------------------------------------------------------

namespace {

void require_admissible(const ParamCycle& Z) {
    AdmissibilityReport a = is_admissible(Z);
    if (!a.admissible) throw InadmissibleError(a.violations.empty() ? "cycle is not admissible" : a.violations.front());
    RealAdmissibilityReport r = is_real_admissible(Z);
    if (!r.real_admissible)
        throw InadmissibleError(r.violations.empty() ? "cycle is not real-admissible" : r.violations.front());
}

Complex evaluate_sum(const ScalarSum& S, WordEvaluator& E, const Complex& twist, double& err,
                     std::vector<TermDiagnostic>& diag) {
    Complex out = 0;
    for (const auto& [w, c] : S.terms()) {
        Estimate e = E.evaluate(w, &diag);
        Complex coef = to_complex(c) * twist;
        out += coef * e.value;
        err += std::abs(coef) * e.error;
    }
    return out;
}

}  // namespace

RegulatorValue regulate_P(const ParamCycle& Z, const RegulatorOptions& opt) {
    require_admissible(Z);
    RegulatorValue rv;
    rv.model = Model::Path;
    rv.p = Z.p;
    rv.n = Z.n;
    WordEvaluator E(Z, opt);
    const Complex twist = tau_power(Z.p - Z.n);
    const PathSum RP = build_RP(Z.n);
    for (const auto& [w, form] : RP.terms()) {
        Estimate e = E.evaluate(w, &rv.diagnostics);
        if (e.value == Complex(0, 0) && e.error == 0) continue;
        PolyForm<Complex> fc = to_complex(form);
        rv.path += fc * (e.value * twist);
        rv.error_estimate += max_abs(fc) * std::abs(twist) * e.error;
    }
    rv.triple = ev(rv.path);
    return rv;
}

RegulatorValue regulate_C(const ParamCycle& Z, const RegulatorOptions& opt) {
    require_admissible(Z);
    RegulatorValue rv;
    rv.model = Model::Triple;
    rv.p = Z.p;
    rv.n = Z.n;
    WordEvaluator E(Z, opt);
    const Complex twist = tau_power(Z.p - Z.n);
    FormalTriple RC = build_RC(Z.n);
    rv.triple.a = evaluate_sum(RC.a, E, twist, rv.error_estimate, rv.diagnostics);
    rv.triple.b = evaluate_sum(RC.b, E, twist, rv.error_estimate, rv.diagnostics);
    rv.triple.c = evaluate_sum(RC.c, E, twist, rv.error_estimate, rv.diagnostics);
    rv.triple.degree = RC.degree;
    return rv;
}

CrossCheckReport cross_checks(const ParamCycle& Z, double tol, const RegulatorOptions& opt) {
    CrossCheckReport rep;
    rep.tol = tol;
    auto add = [&](std::string name, double dev) {
        bool ok = dev <= tol;
        rep.items.push_back({std::move(name), ok, dev});
        rep.pass = rep.pass && ok;
    };
    RegulatorValue P = regulate_P(Z, opt);
    Triple<Complex> evP = ev(P.path);
    RegulatorValue Calt = regulate_C(alt_cycle(Z), opt);
    add("ev(r_P(Z)) = r_C(alt Z)", max_difference(evP, Calt.triple));
    RegulatorValue C = regulate_C(Z, opt);
    add("ev(r_P(Z)) = r_C(Z) on the first two components",
        std::max(std::abs(evP.a - C.triple.a), std::abs(evP.b - C.triple.b)));
    for (const Permutation& g : all_permutations(Z.n)) {
        SignedCycle gz = permute(g, Z);
        RegulatorValue Pg = regulate_P(gz.cycle, opt);
        std::string name = "r_P(g.Z) = sgn(g) r_P(Z), g = (";
        for (std::size_t i = 0; i < g.size(); ++i) name += (i ? " " : "") + std::to_string(g[i] + 1);
        name += ")";
        add(name, max_difference(Pg.path, P.path * Complex(gz.sign, 0)));
    }
    return rep;
}

}  // namespace dbreg
