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

// Cubical higher Chow chains over a point given by rational parametrizations:
// faces, the Bloch boundary, admissibility, the symmetric-group action and
// the example cycles C(a), D(b) and graphs of constants.

#ifndef DBREG_CHOW_CYCLES_HPP
#define DBREG_CHOW_CYCLES_HPP

#include <string>
#include <vector>

#include "dbreg/coefficients.hpp"
#include "dbreg/expression.hpp"
#include "dbreg/formal_currents.hpp"
#include "dbreg/polynomial.hpp"

namespace dbreg {

/// A coordinate value in P^1: exact in Q(i), numeric, or infinity.
struct PointValue {
    bool infinite = false;
    bool exact = true;
    GaussianRational q;
    Complex z;

    static PointValue exact_value(const GaussianRational& v) { return {false, true, v, v.to_complex()}; }
    static PointValue numeric(Complex v) { return {false, false, {}, v}; }
    static PointValue infinity() { return {true, true, {}, {}}; }

    Complex value() const { return z; }
    bool equals(const GaussianRational& v, double tol) const;
    bool same_point(const PointValue& o, double tol) const;
    std::string to_string() const;
};

struct PointTerm {
    Rational multiplicity;
    std::vector<PointValue> coords;
};

/// Zero-dimensional chain in cube^n. Equal points are merged (exactly when
/// both are exact, within `tol` otherwise) and zero multiplicities dropped.
class PointCycle {
public:
    PointCycle() = default;
    explicit PointCycle(int n, double tol = 1e-9) : n_(n), tol_(tol) {}

    int n() const { return n_; }
    const std::vector<PointTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Rational& multiplicity, std::vector<PointValue> coords);
    PointCycle& operator+=(const PointCycle& o);
    PointCycle& operator-=(const PointCycle& o);
    PointCycle operator*(const Rational& q) const;
    /// Same support with the same multiplicities (order-insensitive).
    bool equals(const PointCycle& o) const;

    std::string to_string() const;

private:
    int n_ = 0;
    double tol_ = 1e-9;
    std::vector<PointTerm> terms_;
};

enum class ComponentKind { Curve, Point };

struct CycleComponent {
    Rational multiplicity = 1;
    ComponentKind kind = ComponentKind::Curve;
    std::vector<RationalFunction> coords;  // curves
    std::vector<PointValue> point;         // points
};

struct ParamCycle {
    int n = 0;
    int p = 0;
    std::vector<CycleComponent> components;

    /// Merges components with identical coordinates and drops zero multiplicities.
    void normalize();
    ParamCycle& operator+=(const ParamCycle& o);
    ParamCycle operator-() const;
    ParamCycle operator*(const Rational& q) const;
    friend ParamCycle operator+(ParamCycle a, const ParamCycle& b) { return a += b; }
    friend ParamCycle operator-(ParamCycle a, const ParamCycle& b) { return a += -b; }
};

enum class FaceValue { Zero, Infinity };

struct FaceReport {
    PointCycle points;
    std::vector<std::string> violations;
};

/// Restriction to {z_i = eps} (slot i is 0-based). Points with a remaining
/// coordinate equal to 1 are dropped; a remaining coordinate at 0 or infinity
/// is reported as a violation.
FaceReport face_report(const ParamCycle& Z, int i, FaceValue eps, double tol = 1e-9);
/// As face_report, but throws InadmissibleError on any violation.
PointCycle face(const ParamCycle& Z, int i, FaceValue eps, double tol = 1e-9);

/// sum_i (-1)^(i+1) (face(i, 0) - face(i, inf)) with 1-based i.
PointCycle bloch_boundary(const ParamCycle& Z, double tol = 1e-9);
/// Boundary of a zero-dimensional chain over a point: points never meet faces.
PointCycle bloch_boundary(const PointCycle& Z);

struct AdmissibilityReport {
    bool admissible = true;
    bool degenerate = false;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
};

AdmissibilityReport is_admissible(const ParamCycle& Z, double tol = 1e-9);

struct RealAdmissibilityReport {
    bool real_admissible = true;
    std::vector<std::string> violations;
    /// Pairwise intersections of real faces: slot pair and crossing count.
    struct PairInfo {
        int slot_a;
        int slot_b;
        int component;
        int crossings;
        bool proper;
        std::vector<Complex> points;
    };
    std::vector<PairInfo> pairs;
    std::vector<std::string> incidences;
};

/// Real faces T_i = {z_i in R^-} meet the chain properly (numerically, within tol).
RealAdmissibilityReport is_real_admissible(const ParamCycle& Z, double tol = 1e-9);

struct SignedCycle {
    int sign;
    ParamCycle cycle;
};

/// Moves coordinate i to slot g[i]; the sign is sgn(g).
SignedCycle permute(const Permutation& g, const ParamCycle& Z);
std::vector<PointValue> permute_coords(const Permutation& g, const std::vector<PointValue>& v);

/// (1/n!) sum_g sgn(g) g.Z
ParamCycle alt_cycle(const ParamCycle& Z);
PointCycle alt_points(const PointCycle& Z);

/// C(a) = (t, 1 - a/t, 1 - t) for a outside (-inf, 0] and (1, inf).
ParamCycle totaro_C(const GaussianRational& a);
/// D(b) = (1 - t, 1 - b/t, t), same parameter range.
ParamCycle totaro_D(const GaussianRational& b);
/// The point f in cube^1 with (n, p) = (1, 1).
ParamCycle graph_point(const GaussianRational& f);

/// True when z lies on the closed negative real axis, within tol.
bool in_rneg(Complex z, double tol);

std::string to_string(const ParamCycle& Z);

}  // namespace dbreg

#endif  // DBREG_CHOW_CYCLES_HPP
