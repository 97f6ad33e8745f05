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

#include "dbreg/abel_jacobi.hpp"

#include <cmath>

#include "dbreg/errors.hpp"

namespace dbreg {

Complex JacobianValue::lattice_generator() const {
    Complex w = 1;
    for (int k = 0; k < p; ++k) w *= Complex(0, 2 * M_PI);
    return w;
}

JacobianValue reduce(const JacobianValue& v) {
    const Complex w = v.lattice_generator();
    JacobianValue out = v;
    out.value = v.value - std::round((v.value / w).real()) * w;
    return out;
}

std::optional<int> torsion_order(const JacobianValue& v, int max_order, double tol) {
    if (max_order < 1) throw std::invalid_argument("max_order must be at least 1");
    const Complex w = v.lattice_generator();
    auto on_lattice = [&](int m) {
        Complex mv = static_cast<double>(m) * v.value;
        return std::abs(mv - std::round((mv / w).real()) * w) <= tol;
    };
    // convergents h/k of x = Re(v / w)
    double x = (v.value / w).real();
    long h0 = 1, k0 = 0, h1 = static_cast<long>(std::floor(x)), k1 = 1;
    double frac = x - std::floor(x);
    for (int it = 0; it < 64 && k1 <= max_order; ++it) {
        if (on_lattice(static_cast<int>(k1))) return static_cast<int>(k1);
        if (frac < 1e-15) break;
        double inv = 1 / frac;
        long a = static_cast<long>(std::floor(inv));
        frac = inv - a;
        long h2 = a * h1 + h0, k2 = a * k1 + k0;
        h0 = h1;
        k0 = k1;
        h1 = h2;
        k1 = k2;
    }
    return std::nullopt;
}

HomologyReport is_homologous_to_zero(const ParamCycle& Z) {
    HomologyReport rep;
    try {
        rep.closed = bloch_boundary(Z).is_zero();
    } catch (const InadmissibleError&) {
        rep.closed = false;  // no boundary in the admissible complex
    }
    if (Z.n != 2 * Z.p) {
        rep.reason = "H^" + std::to_string(2 * Z.p - Z.n) + " of a point vanishes";
        return rep;
    }
    Rational count = 0;
    for (const auto& comp : Z.components) {
        if (comp.kind == ComponentKind::Point) {
            if (Z.n == 0) count += comp.multiplicity;
            continue;
        }
        ArcFamily A = extract_arcs(comp, 0), B = extract_arcs(comp, 1);
        PairwiseReport pr = pairwise_proper(A, B, comp);
        if (!pr.proper) throw InadmissibleError(pr.issues.empty() ? "real faces meet improperly" : pr.issues.front());
        long s = 0;
        for (const auto& c : pr.crossings) s += c.sign;
        count += comp.multiplicity * Rational(s);
    }
    rep.signed_count = count;
    rep.homologous_to_zero = count == 0;
    rep.reason = "signed count of Z meeting (R^-)^" + std::to_string(Z.n) + " is " + count.get_str();
    return rep;
}

JacobianValue aj_P(const ParamCycle& Z, const RegulatorOptions& opt) {
    if (!bloch_boundary(Z).is_zero()) throw InadmissibleError("Abel-Jacobi needs a closed cycle");
    HomologyReport h = is_homologous_to_zero(Z);
    if (!h.homologous_to_zero) throw InadmissibleError("cycle is not homologous to zero: " + h.reason);
    RegulatorValue r = regulate_P(Z, opt);
    JacobianValue v;
    v.p = Z.p;
    v.value = integrate_full(r.path);
    v.error = r.error_estimate;
    return v;
}

}  // namespace dbreg
