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

#include "dbreg/real_arcs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dbreg/errors.hpp"

namespace dbreg {

namespace {

constexpr double kEta = 1e-3;       // chart distance from an endpoint where tracking stops
constexpr double kTailStep = 0.25;  // ell spacing of tail samples
constexpr double kEllLimit = 700;

double factorial_double(int m) {
    double f = 1;
    for (int k = 2; k <= m; ++k) f *= k;
    return f;
}

Complex horner(const std::vector<Complex>& c, Complex w) {
    Complex v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * w + *it;
    return v;
}

// value and first derivative
Complex horner(const std::vector<Complex>& c, Complex w, Complex& dv) {
    Complex v = 0;
    dv = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dv = dv * w + v;
        v = v * w + *it;
    }
    return v;
}

// k-th derivative at w
Complex derivative_k(std::vector<Complex> c, int k, Complex w) {
    for (int j = 0; j < k; ++j) {
        if (c.size() <= 1) return 0;
        std::vector<Complex> d(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
        c = std::move(d);
    }
    return horner(c, w);
}

std::vector<Complex> padded(const Polynomial& p, int d) {
    std::vector<Complex> c = p.to_complex();
    c.resize(static_cast<std::size_t>(d + 1), Complex(0, 0));
    return c;
}

void weights(double ell, double& rho, double& sigma) {
    if (ell > 0) {
        sigma = 1 / (1 + std::exp(-ell));
        rho = std::exp(-ell) * sigma;
    } else {
        rho = 1 / (1 + std::exp(ell));
        sigma = std::exp(ell) * rho;
    }
}

P1Point rechart(P1Point p) {
    if (std::abs(p.w) > 1) return {1.0 / p.w, !p.u_chart};
    return p;
}

P1Point to_chart(const P1Point& p, bool u_chart) {
    if (p.u_chart == u_chart) return p;
    if (p.w == Complex(0, 0)) return {Complex(std::numeric_limits<double>::infinity(), 0), u_chart};
    return {1.0 / p.w, u_chart};
}

struct EndpointData {
    ArcEndpoint endpoint;
    P1Point chart_root;
    Complex K;
};

// Zeros (or poles) of the arc equation with their local expansion constants.
std::vector<EndpointData> endpoints(const ArcEquation& eq, const Polynomial& top, const Polynomial& other, bool zeros) {
    std::vector<EndpointData> out;
    const int d = eq.degree();
    auto add = [&](P1Point chart_root, ArcEndpoint ep) {
        const auto& A = chart_root.u_chart ? (zeros ? eq.N_rev() : eq.D_rev()) : (zeros ? eq.N() : eq.D());
        const auto& B = chart_root.u_chart ? (zeros ? eq.D_rev() : eq.N_rev()) : (zeros ? eq.D() : eq.N());
        const int m = ep.multiplicity;
        Complex deriv = derivative_k(A, m, chart_root.w);
        if (deriv == Complex(0, 0)) throw NumericError("degenerate endpoint expansion");
        Complex K = -horner(B, chart_root.w) * factorial_double(m) / deriv;
        out.push_back({ep, chart_root, K});
    };
    for (const Root& r : roots(top)) {
        ArcEndpoint ep;
        ep.point = P1Point::from_t(r.value);
        ep.exact = r.exact;
        ep.exact_value = r.exact_value;
        ep.multiplicity = r.multiplicity;
        P1Point cr = std::abs(r.value) <= 1 ? P1Point{r.value, false} : P1Point{1.0 / r.value, true};
        add(cr, ep);
    }
    const int deficit = d - top.degree();
    if (deficit > 0) {
        ArcEndpoint ep;
        ep.point = {Complex(0, 0), true};
        ep.exact = true;
        ep.multiplicity = deficit;
        add({Complex(0, 0), true}, ep);
    }
    (void)other;
    return out;
}

}  // namespace

P1Point P1Point::from_t(Complex t) {
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) return {Complex(0, 0), true};
    return rechart({t, false});
}

Complex P1Point::t() const {
    if (!u_chart) return w;
    if (w == Complex(0, 0)) return {std::numeric_limits<double>::infinity(), 0};
    return 1.0 / w;
}

double chordal_distance(const P1Point& a, const P1Point& b) {
    Complex a0 = a.u_chart ? Complex(1, 0) : a.w, a1 = a.u_chart ? a.w : Complex(1, 0);
    Complex b0 = b.u_chart ? Complex(1, 0) : b.w, b1 = b.u_chart ? b.w : Complex(1, 0);
    double na = std::sqrt(std::norm(a0) + std::norm(a1));
    double nb = std::sqrt(std::norm(b0) + std::norm(b1));
    return std::abs(a0 * b1 - a1 * b0) / (na * nb);
}

ArcEquation::ArcEquation(const RationalFunction& phi) {
    d_ = phi.degree();
    n_ = padded(phi.numerator(), d_);
    dd_ = padded(phi.denominator(), d_);
    nr_.assign(n_.rbegin(), n_.rend());
    dr_.assign(dd_.rbegin(), dd_.rend());
}

bool ArcEquation::refine(double ell, P1Point& p, int max_iter) const {
    double rho, sigma;
    weights(ell, rho, sigma);
    const auto& A = p.u_chart ? nr_ : n_;
    const auto& B = p.u_chart ? dr_ : dd_;
    Complex w = p.w;
    for (int it = 0; it < max_iter; ++it) {
        Complex da, db;
        Complex fa = horner(A, w, da), fb = horner(B, w, db);
        Complex f = rho * fa + sigma * fb, df = rho * da + sigma * db;
        if (f == Complex(0, 0)) {
            p.w = w;
            return true;
        }
        if (df == Complex(0, 0)) return false;
        Complex step = f / df;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return false;
        w -= step;
        if (std::abs(step) <= 4e-15 * (1 + std::abs(w))) {
            p.w = w;
            return true;
        }
    }
    return false;
}

Complex ArcEquation::chart_derivative(double ell, const P1Point& p) const {
    double rho, sigma;
    weights(ell, rho, sigma);
    const auto& A = p.u_chart ? nr_ : n_;
    const auto& B = p.u_chart ? dr_ : dd_;
    Complex da, db;
    horner(A, p.w, da);
    Complex fb = horner(B, p.w, db);
    return -sigma * fb / (rho * da + sigma * db);
}

Complex ArcEquation::t_derivative(double ell, const P1Point& p) const {
    Complex dw = chart_derivative(ell, p);
    if (!p.u_chart) return dw;
    return -dw / (p.w * p.w);
}

Complex ArcEquation::phi(Complex t) const { return horner(n_, t) / horner(dd_, t); }

// ---------------------------------------------------------------------------

namespace {

P1Point expansion_point(const Arc::Expansion& e, double ell, bool zero_end) {
    double scale = std::exp((zero_end ? ell : -ell) / e.m);
    return {e.root.w + e.coef * scale, e.root.u_chart};
}

// Newton from an expansion guess; rejected when it wanders toward a sibling branch.
P1Point refined_expansion(const ArcEquation& eq, const Arc::Expansion& e, double ell, bool zero_end) {
    P1Point g = expansion_point(e, ell, zero_end);
    double off = std::abs(g.w - e.root.w);
    if (off == 0) return g;
    P1Point r = g;
    if (eq.refine(ell, r, 8) && std::abs(r.w - g.w) <= (e.m == 1 ? 0.5 : 0.2) * off) return r;
    return g;
}

int nearest_node(const std::vector<double>& ell, double e) {
    // ell is decreasing
    auto it = std::lower_bound(ell.begin(), ell.end(), e, [](double a, double b) { return a > b; });
    std::size_t hi = static_cast<std::size_t>(it - ell.begin());
    if (hi == 0) return 0;
    if (hi >= ell.size()) return static_cast<int>(ell.size()) - 1;
    return std::abs(ell[hi] - e) < std::abs(ell[hi - 1] - e) ? static_cast<int>(hi) : static_cast<int>(hi - 1);
}

bool newton_from_node(const ArcEquation& eq, double node_ell, P1Point node, double e, P1Point& out) {
    P1Point p = rechart(node);
    Complex dw = eq.chart_derivative(node_ell, p);
    P1Point g{p.w + (e - node_ell) * dw, p.u_chart};
    g = rechart(g);
    if (!eq.refine(e, g)) return false;
    out = g;
    return true;
}

P1Point predicted(const ArcEquation& eq, const Arc& a, double e) {
    if (e < a.track_lo) return expansion_point(a.zero_expansion, e, true);
    if (e > a.track_hi) return expansion_point(a.pole_expansion, e, false);
    int i = nearest_node(a.ell, e);
    P1Point p = rechart(a.nodes[static_cast<std::size_t>(i)]);
    Complex dw = eq.chart_derivative(a.ell[static_cast<std::size_t>(i)], p);
    return rechart({p.w + (e - a.ell[static_cast<std::size_t>(i)]) * dw, p.u_chart});
}

// All roots of rho N + sigma D, split between the two charts.
std::vector<P1Point> global_roots(const ArcEquation& eq, double ell) {
    double rho, sigma;
    weights(ell, rho, sigma);
    const std::size_t n = eq.N().size();
    std::vector<Complex> ft(n), fu(n);
    for (std::size_t k = 0; k < n; ++k) {
        ft[k] = rho * eq.N()[k] + sigma * eq.D()[k];
        fu[k] = rho * eq.N_rev()[k] + sigma * eq.D_rev()[k];
    }
    std::vector<P1Point> out;
    std::vector<P1Point> from_u;
    for (Complex z : aberth_roots(ft))
        if (std::abs(z) <= 1) out.push_back({z, false});
    for (Complex z : aberth_roots(fu))
        if (std::abs(z) < 1) from_u.push_back({z, true});
    // a root exactly at 0 of the u chart is missed when the t-polynomial loses degree
    int missing = eq.degree() - static_cast<int>(out.size() + from_u.size());
    if (missing != 0) {
        out.clear();
        from_u.clear();
        for (Complex z : aberth_roots(fu)) from_u.push_back(rechart({z, true}));
        int lost = eq.degree() - static_cast<int>(from_u.size());
        for (int k = 0; k < lost; ++k) from_u.push_back({Complex(0, 0), false});  // t = 0 roots
    }
    out.insert(out.end(), from_u.begin(), from_u.end());
    for (auto& p : out) {
        P1Point q = p;
        if (eq.refine(ell, q, 4)) p = q;
    }
    return out;
}

// Greedy assignment of roots to predictions by chordal distance.
std::vector<P1Point> match(const std::vector<P1Point>& pred, const std::vector<P1Point>& roots) {
    std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < pred.size(); ++i)
        for (std::size_t j = 0; j < roots.size(); ++j) pairs.emplace_back(chordal_distance(pred[i], roots[j]), i, j);
    std::sort(pairs.begin(), pairs.end());
    std::vector<P1Point> out(pred.size());
    std::vector<bool> used_i(pred.size(), false), used_j(roots.size(), false);
    std::size_t done = 0;
    for (const auto& [dist, i, j] : pairs) {
        if (used_i[i] || used_j[j]) continue;
        used_i[i] = used_j[j] = true;
        out[i] = roots[j];
        ++done;
    }
    if (done != pred.size()) throw NumericError("arc continuation: root count mismatch");
    return out;
}

double min_separation(const std::vector<P1Point>& pts) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) m = std::min(m, chordal_distance(pts[i], pts[j]));
    return m;
}

}  // namespace

P1Point Arc::point_at(double e) const {
    if (e < track_lo) return refined_expansion(*equation, zero_expansion, e, true);
    if (e > track_hi) return refined_expansion(*equation, pole_expansion, e, false);
    int i = nearest_node(ell, e);
    P1Point out;
    if (newton_from_node(*equation, ell[static_cast<std::size_t>(i)], nodes[static_cast<std::size_t>(i)], e, out))
        return out;
    for (int j : {i - 1, i + 1}) {
        if (j < 0 || j >= static_cast<int>(ell.size())) continue;
        if (newton_from_node(*equation, ell[static_cast<std::size_t>(j)], nodes[static_cast<std::size_t>(j)], e, out))
            return out;
    }
    throw NumericError("arc evaluation failed to converge");
}

Complex Arc::t_derivative_at(double e) const { return equation->t_derivative(e, point_at(e)); }

ArcFamily& ArcFamily::operator=(const ArcFamily& o) {
    component = o.component;
    slot = o.slot;
    equation = o.equation;
    arcs = o.arcs;
    critical_ells = o.critical_ells;
    for (auto& a : arcs) a.equation = &equation;
    return *this;
}

double ArcFamily::ell_min() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& a : arcs) m = std::min(m, a.ell_min());
    return m;
}

double ArcFamily::ell_max() const {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& a : arcs) m = std::max(m, a.ell_max());
    return m;
}

std::vector<P1Point> ArcFamily::points_at(double e) const {
    std::vector<P1Point> pred, out;
    bool ok = true;
    for (const auto& a : arcs) {
        pred.push_back(predicted(equation, a, e));
        try {
            out.push_back(a.point_at(e));
        } catch (const NumericError&) {
            ok = false;
            out.push_back(pred.back());
        }
    }
    if (arcs.size() <= 1) {
        if (!ok) throw NumericError("arc evaluation failed to converge");
        return out;
    }
    bool all_tail = true;
    for (const auto& a : arcs)
        if (e >= a.track_lo && e <= a.track_hi) all_tail = false;
    if (ok && min_separation(out) > 1e-13) {
        // each result must stay closest to its own prediction
        for (std::size_t i = 0; i < out.size() && ok; ++i) {
            double own = chordal_distance(out[i], pred[i]);
            for (std::size_t j = 0; j < pred.size(); ++j)
                if (j != i && chordal_distance(out[i], pred[j]) < own) ok = false;
        }
        if (ok || all_tail) return out;
    }
    if (all_tail) return out;
    return match(pred, global_roots(equation, e));
}

ArcFamily extract_arcs(const CycleComponent& comp, int slot, const ArcOptions& opt) {
    if (comp.kind != ComponentKind::Curve) throw std::invalid_argument("arcs exist on curve components only");
    const RationalFunction& phi = comp.coords.at(static_cast<std::size_t>(slot));
    ArcFamily fam;
    fam.slot = slot;
    fam.equation = ArcEquation(phi);
    if (phi.is_constant()) {
        if (in_rneg(phi.constant_value().to_complex(), opt.tol))
            throw InadmissibleError("coordinate " + std::to_string(slot + 1) + " is constant on R^-");
        return fam;
    }
    const ArcEquation& eq = fam.equation;
    const int d = eq.degree();
    auto zeros = endpoints(eq, phi.numerator(), phi.denominator(), true);
    auto poles = endpoints(eq, phi.denominator(), phi.numerator(), false);

    double s0 = 1e-2, s1 = 1e2;
    for (const auto& z : zeros) s0 = std::min(s0, std::pow(kEta, z.endpoint.multiplicity) / std::abs(z.K));
    for (const auto& p : poles) s1 = std::max(s1, std::abs(p.K) / std::pow(kEta, p.endpoint.multiplicity));
    const double ell0 = std::max(std::log(s0), -kEllLimit / 2), ell1 = std::min(std::log(s1), kEllLimit / 2);

    // starting points from the zero expansions
    std::vector<Arc> arcs;
    std::vector<P1Point> pts;
    for (const auto& z : zeros) {
        const int m = z.endpoint.multiplicity;
        Complex base = std::pow(z.K, 1.0 / m);
        for (int j = 0; j < m; ++j) {
            Arc a;
            a.slot = slot;
            a.zero = z.endpoint;
            a.zero_expansion = {z.chart_root, base * std::polar(1.0, 2 * M_PI * j / m), m};
            P1Point p = expansion_point(a.zero_expansion, ell0, true);
            p = rechart(p);
            if (!eq.refine(ell0, p)) throw NumericError("arc start failed to converge");
            pts.push_back(p);
            arcs.push_back(a);
        }
    }
    if (static_cast<int>(arcs.size()) != d) throw NumericError("arc start: branch count mismatch");
    if (d > 1 && min_separation(pts) < 1e-12) throw NumericError("arc start: branches not separated");

    // critical values of phi on R^-: two branches meet there
    {
        Polynomial crit = phi.numerator().derivative() * phi.denominator() - phi.numerator() * phi.denominator().derivative();
        for (const Root& r : roots(crit)) {
            Complex v = phi(r.value);
            if (std::isfinite(std::abs(v)) && in_rneg(v, opt.tol) && std::abs(v) > opt.tol) {
                double lc = std::log(-v.real());
                if (lc > ell0 && lc < ell1) fam.critical_ells.push_back(lc);
            }
        }
        std::sort(fam.critical_ells.begin(), fam.critical_ells.end());
    }

    const double h_nom = (ell1 - ell0) / opt.steps;
    std::vector<double> targets;
    for (int k = 1; k <= opt.steps; ++k) targets.push_back(ell0 + k * h_nom);
    const double delta = 1e-3 * h_nom;
    for (double c : fam.critical_ells) {
        targets.push_back(c - delta);
        targets.push_back(c + delta);
    }
    std::sort(targets.begin(), targets.end());

    std::vector<std::vector<double>> track_ell(arcs.size());
    std::vector<std::vector<P1Point>> track_pts(arcs.size());
    auto record = [&](double e) {
        for (std::size_t b = 0; b < arcs.size(); ++b) {
            track_ell[b].push_back(e);
            track_pts[b].push_back(pts[b]);
        }
    };
    record(ell0);

    auto try_step = [&](double e, double h, std::vector<P1Point>& next) {
        next.resize(pts.size());
        double sep_old = d > 1 ? min_separation(pts) : 1.0;
        std::vector<P1Point> pred(pts.size());
        for (std::size_t b = 0; b < pts.size(); ++b) {
            P1Point p = rechart(pts[b]);
            pred[b] = rechart({p.w + h * eq.chart_derivative(e, p), p.u_chart});
            P1Point q = pred[b];
            if (!eq.refine(e + h, q)) return false;
            if (chordal_distance(q, pred[b]) > 0.2 * std::min(sep_old, 0.25)) return false;
            if (chordal_distance(q, pts[b]) > 0.5 * std::min(sep_old, 1.0)) return false;
            next[b] = q;
        }
        if (d > 1 && min_separation(next) < 0.25 * std::min(sep_old, 1e-3)) return false;
        return true;
    };

    double e = ell0;
    double h_cur = h_nom;
    int global_steps = 0;
    std::vector<P1Point> next;
    for (double target : targets) {
        bool crit_jump = false;
        for (double c : fam.critical_ells)
            if (e < c && target > c) crit_jump = true;
        if (crit_jump) {
            std::vector<P1Point> pred(pts.size());
            for (std::size_t b = 0; b < pts.size(); ++b) {
                P1Point p = rechart(pts[b]);
                pred[b] = rechart({p.w + (target - e) * eq.chart_derivative(e, p), p.u_chart});
            }
            pts = match(pred, global_roots(eq, target));
            e = target;
            record(e);
            continue;
        }
        while (e < target - 1e-14 * std::max(1.0, std::abs(target))) {
            double h = std::min(h_cur, target - e);
            if (try_step(e, h, next)) {
                e += h;
                pts = next;
                record(e);
                h_cur = std::min(h_nom, 2 * h_cur);
            } else {
                h_cur = h / 2;
                if (h_cur < h_nom * 1e-7) {
                    // collision not predicted by the critical values: solve globally
                    if (++global_steps > 64) throw NumericError("arc continuation breakdown");
                    double hh = std::min(h_nom * 1e-3, target - e);
                    std::vector<P1Point> pred(pts.size());
                    for (std::size_t b = 0; b < pts.size(); ++b) {
                        P1Point p = rechart(pts[b]);
                        pred[b] = rechart({p.w + hh * eq.chart_derivative(e, p), p.u_chart});
                    }
                    pts = match(pred, global_roots(eq, e + hh));
                    e += hh;
                    record(e);
                    h_cur = h_nom * 1e-3;
                }
            }
        }
        e = target;
    }

    // pole assignment
    {
        std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
        for (std::size_t b = 0; b < pts.size(); ++b)
            for (std::size_t k = 0; k < poles.size(); ++k)
                pairs.emplace_back(chordal_distance(pts[b], poles[k].endpoint.point), b, k);
        std::sort(pairs.begin(), pairs.end());
        std::vector<int> capacity;
        for (const auto& p : poles) capacity.push_back(p.endpoint.multiplicity);
        std::vector<int> assigned(pts.size(), -1);
        for (const auto& [dist, b, k] : pairs) {
            if (assigned[b] >= 0 || capacity[k] == 0) continue;
            assigned[b] = static_cast<int>(k);
            --capacity[k];
        }
        for (std::size_t b = 0; b < pts.size(); ++b) {
            if (assigned[b] < 0) throw NumericError("arc end: no pole left for branch");
            const auto& P = poles[static_cast<std::size_t>(assigned[b])];
            const int m = P.endpoint.multiplicity;
            P1Point w = to_chart(pts[b], P.chart_root.u_chart);
            Complex raw = (w.w - P.chart_root.w) * std::exp(ell1 / m);
            Complex base = std::pow(P.K, 1.0 / m);
            Complex best = base;
            for (int j = 1; j < m; ++j) {
                Complex c = base * std::polar(1.0, 2 * M_PI * j / m);
                if (std::abs(c - raw) < std::abs(best - raw)) best = c;
            }
            if (std::abs(best - raw) > 0.1 * std::abs(best))
                throw NumericError("arc end does not approach a pole");
            arcs[b].pole = P.endpoint;
            arcs[b].pole_expansion = {P.chart_root, best, m};
        }
    }

    // nodes in orientation order, with tail samples at both ends
    for (std::size_t b = 0; b < arcs.size(); ++b) {
        Arc& a = arcs[b];
        a.equation = &fam.equation;
        a.track_lo = ell0;
        a.track_hi = ell1;
        std::vector<double> E;
        std::vector<P1Point> P;
        for (double t = ell1 + kTailStep;; t += kTailStep) {
            P1Point q = refined_expansion(eq, a.pole_expansion, t, false);
            E.push_back(t);
            P.push_back(q);
            if (chordal_distance(q, a.pole_expansion.root) < 1e-15 || t > kEllLimit) break;
        }
        std::reverse(E.begin(), E.end());
        std::reverse(P.begin(), P.end());
        for (std::size_t k = track_ell[b].size(); k-- > 0;) {
            E.push_back(track_ell[b][k]);
            P.push_back(track_pts[b][k]);
        }
        for (double t = ell0 - kTailStep;; t -= kTailStep) {
            P1Point q = refined_expansion(eq, a.zero_expansion, t, true);
            E.push_back(t);
            P.push_back(q);
            if (chordal_distance(q, a.zero_expansion.root) < 1e-15 || t < -kEllLimit) break;
        }
        a.ell = std::move(E);
        a.nodes = std::move(P);
    }
    fam.arcs = std::move(arcs);
    for (auto& a : fam.arcs) a.equation = &fam.equation;
    return fam;
}

// ---------------------------------------------------------------------------

namespace {

Complex coord_value(const RationalFunction& f, const P1Point& p) {
    if (!p.is_infinity()) {
        Complex t = p.t();
        return f(t);
    }
    int dn = f.numerator().degree(), dd = f.denominator().degree();
    if (dn < dd) return 0;
    if (dn > dd) return {std::numeric_limits<double>::infinity(), 0};
    return (f.numerator().leading() / f.denominator().leading()).to_complex();
}

bool strictly_rneg(Complex v, double tol) {
    double a = std::abs(v);
    if (!std::isfinite(a) || a <= tol || a >= 1 / tol) return false;
    return v.real() < 0 && std::abs(v.imag()) <= tol * a;
}

// root of Im g(t(ell)) on [lo, hi] by bisection, g = phi_b on arc A
double refine_crossing(const Arc& A, const RationalFunction& fb, double lo, double hi) {
    auto im = [&](double e) { return coord_value(fb, A.point_at(e)).imag(); };
    double flo = im(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = im(mid);
        if (fm == 0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

PairwiseReport pairwise_proper(const ArcFamily& A, const ArcFamily& B, const CycleComponent& comp, double tol) {
    PairwiseReport rep;
    const RationalFunction& fa = comp.coords.at(static_cast<std::size_t>(A.slot));
    const RationalFunction& fb = comp.coords.at(static_cast<std::size_t>(B.slot));
    for (std::size_t ia = 0; ia < A.arcs.size(); ++ia) {
        const Arc& arc = A.arcs[ia];
        std::vector<Complex> vals;
        for (const auto& p : arc.nodes) vals.push_back(coord_value(fb, p));
        // overlap: a run of tracked nodes on R^-
        int run = 0;
        double run_start = 0;
        for (std::size_t k = 0; k < vals.size(); ++k) {
            const double e = arc.ell[k];
            bool on = e >= arc.track_lo && e <= arc.track_hi && strictly_rneg(vals[k], tol);
            if (on) {
                if (run == 0) run_start = e;
                ++run;
                if (run >= 3 && std::abs(run_start - e) > 0.5) {
                    rep.proper = false;
                    rep.issues.push_back("real faces " + std::to_string(A.slot + 1) + " and " + std::to_string(B.slot + 1) +
                                         " overlap along an arc");
                    break;
                }
            } else {
                run = 0;
            }
        }
        for (std::size_t k = 0; k + 1 < vals.size(); ++k) {
            Complex v0 = vals[k], v1 = vals[k + 1];
            if (!std::isfinite(std::abs(v0)) || !std::isfinite(std::abs(v1))) continue;
            if ((v0.imag() < 0) == (v1.imag() < 0) && v0.imag() != 0) continue;
            if (v0.real() >= 0 && v1.real() >= 0) continue;
            double e = refine_crossing(arc, fb, arc.ell[k + 1], arc.ell[k]);
            P1Point pt = arc.point_at(e);
            Complex vb = coord_value(fb, pt);
            double avb = std::abs(vb);
            if (!std::isfinite(avb) || avb <= 1e3 * tol || avb >= 1 / (1e3 * tol)) {
                rep.endpoint_incidences.push_back(pt.t());
                continue;
            }
            if (vb.real() >= 0) continue;
            if (std::abs(vb.imag()) > 1e-6 * avb) continue;  // pole of phi_b crossed, not the real axis
            // the endpoints of A are not crossings
            if (chordal_distance(pt, arc.zero.point) < 1e-9 || chordal_distance(pt, arc.pole.point) < 1e-9) continue;
            Crossing c;
            c.t = pt.t();
            c.arc_a = static_cast<int>(ia);
            c.ell_a = e;
            c.ell_b = std::log(-vb.real());
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t ib = 0; ib < B.arcs.size(); ++ib) {
                double dist = chordal_distance(B.arcs[ib].point_at(c.ell_b), pt);
                if (dist < best) {
                    best = dist;
                    c.arc_b = static_cast<int>(ib);
                }
            }
            if (best > 1e-6) throw NumericError("crossing point not found on the second arc family");
            if (pt.is_infinity()) throw NumericError("arcs cross at t = infinity");
            Complex da = fa.derivative_at(c.t), db = fb.derivative_at(c.t);
            double orient = (da * std::conj(db)).imag();
            if (std::abs(orient) <= 1e-12 * std::abs(da) * std::abs(db)) {
                rep.proper = false;
                rep.issues.push_back("tangential intersection of real faces " + std::to_string(A.slot + 1) + " and " +
                                     std::to_string(B.slot + 1));
                continue;
            }
            c.sign = orient > 0 ? 1 : -1;
            // the same point may be found from two neighbouring samples
            bool dup = false;
            for (const auto& o : rep.crossings)
                if (std::abs(o.t - c.t) <= 1e-9 * std::max(1.0, std::abs(c.t))) dup = true;
            if (!dup) rep.crossings.push_back(c);
        }
    }
    return rep;
}

std::vector<ArcEvent> coordinate_events(const Arc& arc, const CycleComponent& comp, double tol) {
    std::vector<ArcEvent> out;
    const RationalFunction& fa = comp.coords.at(static_cast<std::size_t>(arc.slot));
    for (std::size_t c = 0; c < comp.coords.size(); ++c) {
        if (static_cast<int>(c) == arc.slot) continue;
        const RationalFunction& fc = comp.coords[c];
        if (fc.is_constant()) continue;
        for (bool pole : {false, true}) {
            const Polynomial& P = pole ? fc.denominator() : fc.numerator();
            std::vector<P1Point> locs;
            for (const Root& r : roots(P)) locs.push_back(P1Point::from_t(r.value));
            const Polynomial& Q = pole ? fc.numerator() : fc.denominator();
            if (Q.degree() > P.degree())
                locs.push_back({Complex(0, 0), true});
            for (const auto& loc : locs) {
                Complex v = coord_value(fa, loc);
                if (!strictly_rneg(v, tol)) continue;
                double e = std::log(-v.real());
                if (chordal_distance(arc.point_at(e), loc) < 1e-6)
                    out.push_back({e, static_cast<int>(c), pole});
            }
        }
    }
    return out;
}

RealAdmissibilityReport is_real_admissible(const ParamCycle& Z, double tol) {
    RealAdmissibilityReport rep;
    auto fail = [&](const std::string& msg) {
        rep.real_admissible = false;
        rep.violations.push_back(msg);
    };
    for (std::size_t ci = 0; ci < Z.components.size(); ++ci) {
        const CycleComponent& comp = Z.components[ci];
        const std::string where = "component " + std::to_string(ci + 1) + ": ";
        if (comp.kind == ComponentKind::Point) {
            for (std::size_t k = 0; k < comp.point.size(); ++k)
                if (!comp.point[k].infinite && in_rneg(comp.point[k].value(), tol))
                    fail(where + "coordinate " + std::to_string(k + 1) + " lies on R^-");
            continue;
        }
        std::vector<ArcFamily> fams;
        for (int s = 0; s < static_cast<int>(comp.coords.size()); ++s) {
            try {
                fams.push_back(extract_arcs(comp, s, {512, tol}));
            } catch (const InadmissibleError& e) {
                fail(where + e.what());
                fams.emplace_back();
                fams.back().slot = s;
            }
            fams.back().component = static_cast<int>(ci);
        }
        for (const auto& fam : fams)
            for (const auto& arc : fam.arcs)
                for (const auto& ev : coordinate_events(arc, comp, tol))
                    rep.incidences.push_back(where + "real face " + std::to_string(fam.slot + 1) + " meets {z" +
                                             std::to_string(ev.slot + 1) + (ev.pole ? " = inf}" : " = 0}") +
                                             " away from its boundary");
        for (std::size_t a = 0; a < fams.size(); ++a)
            for (std::size_t b = a + 1; b < fams.size(); ++b) {
                PairwiseReport pr = pairwise_proper(fams[a], fams[b], comp, tol);
                RealAdmissibilityReport::PairInfo info{static_cast<int>(a) + 1, static_cast<int>(b) + 1,
                                                       static_cast<int>(ci) + 1,
                                                       static_cast<int>(pr.crossings.size()), pr.proper, {}};
                for (const auto& c : pr.crossings) {
                    info.points.push_back(c.t);
                    for (std::size_t k = 0; k < comp.coords.size(); ++k) {
                        if (k == a || k == b) continue;
                        if (strictly_rneg(comp.coords[k](c.t), tol))
                            fail(where + "three real faces meet at a point");
                    }
                }
                for (const auto& issue : pr.issues) fail(where + issue);
                for (Complex t : pr.endpoint_incidences) {
                    std::ostringstream os;
                    os << where << "boundary of real face " << a + 1 << " meets real face " << b + 1 << " at t = ("
                       << t.real() << ", " << t.imag() << ")";
                    rep.incidences.push_back(os.str());
                }
                rep.pairs.push_back(info);
            }
    }
    return rep;
}

std::string describe(const ArcFamily& fam) {
    std::ostringstream os;
    os.precision(17);
    auto pt = [&](const ArcEndpoint& e) {
        std::ostringstream s;
        s.precision(17);
        if (e.point.is_infinity()) {
            s << "\"inf\"";
        } else {
            Complex t = e.point.t();
            s << "[" << t.real() << ", " << t.imag() << "]";
        }
        return s.str();
    };
    os << "{\"slot\": " << fam.slot + 1 << ", \"arcs\": [";
    for (std::size_t k = 0; k < fam.arcs.size(); ++k) {
        const Arc& a = fam.arcs[k];
        if (k) os << ", ";
        os << "{\"pole\": " << pt(a.pole) << ", \"zero\": " << pt(a.zero) << ", \"nodes\": " << a.nodes.size()
           << ", \"multiplicity\": " << a.multiplicity << "}";
    }
    os << "]}";
    return os.str();
}

}  // namespace dbreg
