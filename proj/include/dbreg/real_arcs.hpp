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

// Preimages of the negative real axis under a coordinate function: the arcs
// {t : phi(t) = -s, 0 <= s <= inf}, tracked by continuation in ell = log s
// from the zeros of phi to its poles and oriented pole -> zero.

#ifndef DBREG_REAL_ARCS_HPP
#define DBREG_REAL_ARCS_HPP

#include <string>
#include <vector>

#include "dbreg/chow_cycles.hpp"
#include "dbreg/polynomial.hpp"

namespace dbreg {

/// A point of P^1 in one of the two standard charts (t, or u = 1/t).
struct P1Point {
    Complex w;
    bool u_chart = false;

    static P1Point from_t(Complex t);
    bool is_infinity() const { return u_chart && w == Complex(0, 0); }
    /// t coordinate; infinite points return (inf, 0).
    Complex t() const;
};

double chordal_distance(const P1Point& a, const P1Point& b);

struct ArcEndpoint {
    P1Point point;
    bool exact = false;
    GaussianRational exact_value;
    int multiplicity = 1;
};

/// The equation rho N(t) + sigma D(t) = 0 with s = sigma / rho, solved in
/// either chart of P^1.
class ArcEquation {
public:
    ArcEquation() = default;
    explicit ArcEquation(const RationalFunction& phi);

    int degree() const { return d_; }
    /// Newton refinement at parameter ell = log s. Returns false on failure.
    bool refine(double ell, P1Point& p, int max_iter = 12) const;
    /// dt/dell (or du/dell in the u chart) at a point of the arc family.
    Complex chart_derivative(double ell, const P1Point& p) const;
    /// dt/dell regardless of the chart.
    Complex t_derivative(double ell, const P1Point& p) const;
    Complex phi(Complex t) const;

    const std::vector<Complex>& N() const { return n_; }
    const std::vector<Complex>& D() const { return dd_; }
    const std::vector<Complex>& N_rev() const { return nr_; }
    const std::vector<Complex>& D_rev() const { return dr_; }

private:
    int d_ = 0;
    std::vector<Complex> n_, dd_, nr_, dr_;
};

class Arc {
public:
    int component = 0;
    int slot = 0;
    int multiplicity = 1;
    ArcEndpoint pole;  // s -> inf, start of the oriented arc
    ArcEndpoint zero;  // s -> 0, end of the oriented arc
    /// Tracked samples in orientation order (pole -> zero); ell decreasing.
    std::vector<double> ell;
    std::vector<P1Point> nodes;

    /// The arc point with -phi(t) = exp(ell). Extends beyond the tracked range
    /// with local expansions at the endpoints.
    P1Point point_at(double ell) const;
    Complex t_at(double e) const { return point_at(e).t(); }
    /// dt/dell at the arc point.
    Complex t_derivative_at(double ell) const;
    double ell_min() const { return ell.back(); }
    double ell_max() const { return ell.front(); }

    // chart-local expansions w ~ root + coef * s^(1/m) at the zero end and
    // w ~ root + coef * s^(-1/m) at the pole end
    struct Expansion {
        P1Point root;
        Complex coef;
        int m = 1;
    };
    Expansion zero_expansion;
    Expansion pole_expansion;
    /// ell range covered by continuation; outside it the expansions are used.
    double track_lo = 0;
    double track_hi = 0;
    const ArcEquation* equation = nullptr;
};

struct ArcFamily {
    int component = 0;
    int slot = 0;
    ArcEquation equation;
    std::vector<Arc> arcs;

    ArcFamily() = default;
    ArcFamily(const ArcFamily& o) { *this = o; }
    ArcFamily& operator=(const ArcFamily& o);

    /// All branch points at ell, one per arc, each root of the equation used
    /// exactly once (falls back to a global solve near collisions).
    std::vector<P1Point> points_at(double ell) const;
    double ell_min() const;
    double ell_max() const;
    /// ell values where two branches of this family collide.
    std::vector<double> critical_ells;
};

struct ArcOptions {
    int steps = 512;
    double tol = 1e-9;
};

/// Arcs of the real face {z_slot in R^-} on a curve component.
/// Throws NumericError on continuation breakdown.
ArcFamily extract_arcs(const CycleComponent& comp, int slot, const ArcOptions& opt = {});

struct Crossing {
    Complex t;
    int arc_a = 0;
    int arc_b = 0;
    double ell_a = 0;
    double ell_b = 0;
    int sign = 0;  // orientation of (tangent_a, tangent_b)
};

struct PairwiseReport {
    bool proper = true;
    std::vector<Crossing> crossings;
    std::vector<std::string> issues;
    std::vector<Complex> endpoint_incidences;
};

/// Intersections of two arc families of the same component.
PairwiseReport pairwise_proper(const ArcFamily& A, const ArcFamily& B, const CycleComponent& comp, double tol = 1e-9);

/// ell values on `arc` where another coordinate has a zero or pole (kind 0 / 1).
struct ArcEvent {
    double ell;
    int slot;
    bool pole;
};
std::vector<ArcEvent> coordinate_events(const Arc& arc, const CycleComponent& comp, double tol = 1e-9);

/// Debug dump (JSON text): slot, endpoints, node count, multiplicity.
std::string describe(const ArcFamily& fam);

}  // namespace dbreg

#endif  // DBREG_REAL_ARCS_HPP
