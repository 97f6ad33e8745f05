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

#include "dbreg/chow_cycles.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dbreg/errors.hpp"

namespace dbreg {

bool in_rneg(Complex z, double tol) {
    return std::abs(z.imag()) <= tol * std::max(1.0, std::abs(z)) && z.real() <= tol;
}

bool PointValue::equals(const GaussianRational& v, double tol) const {
    if (infinite) return false;
    if (exact) return q == v;
    Complex w = v.to_complex();
    return std::abs(z - w) <= tol * std::max(1.0, std::abs(w));
}

bool PointValue::same_point(const PointValue& o, double tol) const {
    if (infinite || o.infinite) return infinite && o.infinite;
    if (exact && o.exact) return q == o.q;
    return std::abs(z - o.z) <= tol * std::max(1.0, std::abs(z));
}

std::string PointValue::to_string() const {
    if (infinite) return "inf";
    if (exact) return q.to_string();
    std::ostringstream os;
    os.precision(15);
    os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

void PointCycle::add(const Rational& multiplicity, std::vector<PointValue> coords) {
    if (static_cast<int>(coords.size()) != n_) throw std::invalid_argument("point dimension mismatch");
    if (multiplicity == 0) return;
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        bool same = true;
        for (int k = 0; k < n_ && same; ++k)
            same = it->coords[static_cast<std::size_t>(k)].same_point(coords[static_cast<std::size_t>(k)], tol_);
        if (!same) continue;
        it->multiplicity += multiplicity;
        if (it->multiplicity == 0) terms_.erase(it);
        return;
    }
    terms_.push_back({multiplicity, std::move(coords)});
}

PointCycle& PointCycle::operator+=(const PointCycle& o) {
    if (terms_.empty() && n_ == 0) n_ = o.n_;
    for (const auto& t : o.terms_) add(t.multiplicity, t.coords);
    return *this;
}

PointCycle& PointCycle::operator-=(const PointCycle& o) {
    if (terms_.empty() && n_ == 0) n_ = o.n_;
    for (const auto& t : o.terms_) add(Rational(-t.multiplicity), t.coords);
    return *this;
}

PointCycle PointCycle::operator*(const Rational& q) const {
    PointCycle out(n_, tol_);
    for (const auto& t : terms_) out.add(Rational(t.multiplicity * q), t.coords);
    return out;
}

bool PointCycle::equals(const PointCycle& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    if (n_ != o.n_) return false;
    PointCycle diff = *this;
    diff -= o;
    return diff.is_zero();
}

std::string PointCycle::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        bool neg = t.multiplicity < 0;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        Rational m = abs(t.multiplicity);
        if (m != 1) os << m.get_str() << "*";
        os << "(";
        for (std::size_t k = 0; k < t.coords.size(); ++k) os << (k ? ", " : "") << t.coords[k].to_string();
        os << ")";
    }
    return os.str();
}

void ParamCycle::normalize() {
    std::vector<CycleComponent> merged;
    for (auto& c : components) {
        bool found = false;
        for (auto& m : merged) {
            if (m.kind != c.kind) continue;
            bool same = m.kind == ComponentKind::Curve ? m.coords == c.coords : false;
            if (m.kind == ComponentKind::Point) {
                same = m.point.size() == c.point.size();
                for (std::size_t k = 0; same && k < c.point.size(); ++k) same = m.point[k].same_point(c.point[k], 1e-12);
            }
            if (same) {
                m.multiplicity += c.multiplicity;
                found = true;
                break;
            }
        }
        if (!found) merged.push_back(c);
    }
    components.clear();
    for (auto& m : merged)
        if (m.multiplicity != 0) components.push_back(std::move(m));
}

ParamCycle& ParamCycle::operator+=(const ParamCycle& o) {
    if (components.empty() && n == 0) {
        n = o.n;
        p = o.p;
    }
    if (n != o.n || p != o.p) throw std::invalid_argument("adding cycles of different (n, p)");
    components.insert(components.end(), o.components.begin(), o.components.end());
    normalize();
    return *this;
}

ParamCycle ParamCycle::operator-() const { return *this * Rational(-1); }

ParamCycle ParamCycle::operator*(const Rational& q) const {
    ParamCycle out = *this;
    for (auto& c : out.components) c.multiplicity *= q;
    out.normalize();
    return out;
}

namespace {

// Value of a coordinate function at a numerically known parameter value.
PointValue evaluate_numeric(const RationalFunction& f, Complex t) {
    Complex d = f.denominator()(t);
    double scale = 0;
    double r = std::abs(t), pw = 1;
    for (const auto& c : f.denominator().coefficients()) {
        scale += std::abs(c.to_complex()) * pw;
        pw *= r;
    }
    if (std::abs(d) <= 1e-10 * std::max(scale, 1e-300)) return PointValue::infinity();
    return PointValue::numeric(f.numerator()(t) / d);
}

PointValue evaluate_exact(const RationalFunction& f, const GaussianRational& t) {
    auto v = f.evaluate(t);
    return v ? PointValue::exact_value(*v) : PointValue::infinity();
}

PointValue evaluate_infinity(const RationalFunction& f) {
    auto v = f.evaluate_at_infinity();
    return v ? PointValue::exact_value(*v) : PointValue::infinity();
}

bool is_zero_value(const PointValue& v, double tol) { return v.equals(GaussianRational(0), tol); }
bool is_one_value(const PointValue& v, double tol) { return v.equals(GaussianRational(1), tol); }

}  // namespace

FaceReport face_report(const ParamCycle& Z, int i, FaceValue eps, double tol) {
    if (i < 0 || i >= Z.n) throw std::invalid_argument("face slot out of range");
    FaceReport rep{PointCycle(Z.n - 1, tol), {}};
    const std::string face_name =
        "face(" + std::to_string(i + 1) + ", " + (eps == FaceValue::Zero ? "0" : "inf") + ")";

    for (std::size_t k = 0; k < Z.components.size(); ++k) {
        const CycleComponent& comp = Z.components[k];
        const std::string where = "component " + std::to_string(k + 1) + ", " + face_name;
        if (comp.kind == ComponentKind::Point) {
            const PointValue& v = comp.point[static_cast<std::size_t>(i)];
            if ((eps == FaceValue::Zero && is_zero_value(v, tol)) || (eps == FaceValue::Infinity && v.infinite))
                rep.violations.push_back(where + ": point lies on the face");
            continue;
        }
        const RationalFunction& phi = comp.coords[static_cast<std::size_t>(i)];
        if (phi.is_constant()) {
            if (eps == FaceValue::Zero && phi.is_zero())
                rep.violations.push_back(where + ": component contained in the face");
            continue;
        }

        struct Candidate {
            std::vector<PointValue> coords;
            int multiplicity;
        };
        std::vector<Candidate> candidates;
        auto others = [&](auto&& eval) {
            std::vector<PointValue> v;
            for (int j = 0; j < Z.n; ++j)
                if (j != i) v.push_back(eval(comp.coords[static_cast<std::size_t>(j)]));
            return v;
        };

        const Polynomial& target = eps == FaceValue::Zero ? phi.numerator() : phi.denominator();
        if (target.degree() > 0) {
            for (const Root& r : roots(target)) {
                if (r.exact)
                    candidates.push_back(
                        {others([&](const RationalFunction& f) { return evaluate_exact(f, r.exact_value); }),
                         r.multiplicity});
                else
                    candidates.push_back(
                        {others([&](const RationalFunction& f) { return evaluate_numeric(f, r.value); }),
                         r.multiplicity});
            }
        }
        const int deficit = eps == FaceValue::Zero ? phi.denominator().degree() - phi.numerator().degree()
                                                   : phi.numerator().degree() - phi.denominator().degree();
        if (deficit > 0)
            candidates.push_back({others([](const RationalFunction& f) { return evaluate_infinity(f); }), deficit});

        for (auto& cand : candidates) {
            bool hits_one = false, hits_face = false;
            for (const auto& v : cand.coords) {
                hits_one = hits_one || is_one_value(v, tol);
                hits_face = hits_face || v.infinite || is_zero_value(v, tol);
            }
            if (hits_one) continue;
            if (hits_face) {
                std::string pt = "(";
                for (std::size_t m = 0; m < cand.coords.size(); ++m) pt += (m ? ", " : "") + cand.coords[m].to_string();
                rep.violations.push_back(where + ": improper intersection at " + pt + ")");
                continue;
            }
            rep.points.add(Rational(comp.multiplicity * cand.multiplicity), std::move(cand.coords));
        }
    }
    return rep;
}

PointCycle face(const ParamCycle& Z, int i, FaceValue eps, double tol) {
    FaceReport rep = face_report(Z, i, eps, tol);
    if (!rep.violations.empty()) throw InadmissibleError(rep.violations.front());
    return rep.points;
}

PointCycle bloch_boundary(const ParamCycle& Z, double tol) {
    PointCycle out(Z.n - 1, tol);
    for (int i = 0; i < Z.n; ++i) {
        PointCycle term = face(Z, i, FaceValue::Zero, tol);
        term -= face(Z, i, FaceValue::Infinity, tol);
        out += i % 2 == 0 ? term : term * Rational(-1);
    }
    return out;
}

PointCycle bloch_boundary(const PointCycle& Z) { return PointCycle(Z.n() > 0 ? Z.n() - 1 : 0); }

AdmissibilityReport is_admissible(const ParamCycle& Z, double tol) {
    AdmissibilityReport rep;
    auto violate = [&](std::string msg) {
        rep.admissible = false;
        rep.violations.push_back(std::move(msg));
    };
    for (std::size_t k = 0; k < Z.components.size(); ++k) {
        const CycleComponent& c = Z.components[k];
        const std::string where = "component " + std::to_string(k + 1);
        if (c.kind == ComponentKind::Curve) {
            if (Z.p != Z.n - 1) violate(where + ": a curve over a point needs p = n - 1");
            if (static_cast<int>(c.coords.size()) != Z.n) {
                violate(where + ": expected " + std::to_string(Z.n) + " coordinates");
                continue;
            }
            bool all_constant = true;
            for (int i = 0; i < Z.n; ++i) {
                const RationalFunction& f = c.coords[static_cast<std::size_t>(i)];
                if (!f.is_constant()) {
                    all_constant = false;
                    continue;
                }
                GaussianRational v = f.constant_value();
                const std::string slot = where + ", coordinate " + std::to_string(i + 1);
                if (v.is_zero())
                    violate(slot + " is identically 0 (contained in a face)");
                else if (v == GaussianRational(1))
                    violate(slot + " is identically 1 (contained in the boundary divisor)");
                else {
                    rep.degenerate = true;
                    rep.notes.push_back(slot + " is constant (degenerate)");
                }
            }
            if (all_constant) violate(where + ": parametrization is constant");
        } else {
            if (Z.p != Z.n) violate(where + ": a point over a point needs p = n");
            if (static_cast<int>(c.point.size()) != Z.n) {
                violate(where + ": expected " + std::to_string(Z.n) + " coordinates");
                continue;
            }
            for (int i = 0; i < Z.n; ++i) {
                const PointValue& v = c.point[static_cast<std::size_t>(i)];
                if (v.infinite || is_zero_value(v, tol) || is_one_value(v, tol))
                    violate(where + ", coordinate " + std::to_string(i + 1) + " lies in {0, 1, inf}");
            }
        }
    }
    if (!rep.admissible) return rep;
    for (int i = 0; i < Z.n; ++i)
        for (FaceValue eps : {FaceValue::Zero, FaceValue::Infinity})
            for (auto& v : face_report(Z, i, eps, tol).violations) violate(std::move(v));
    return rep;
}

std::vector<PointValue> permute_coords(const Permutation& g, const std::vector<PointValue>& v) {
    std::vector<PointValue> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(g[i])] = v[i];
    return out;
}

SignedCycle permute(const Permutation& g, const ParamCycle& Z) {
    if (static_cast<int>(g.size()) != Z.n) throw std::invalid_argument("permutation size mismatch");
    ParamCycle out = Z;
    for (auto& c : out.components) {
        if (c.kind == ComponentKind::Curve) {
            std::vector<RationalFunction> coords(c.coords.size());
            for (std::size_t i = 0; i < c.coords.size(); ++i) coords[static_cast<std::size_t>(g[i])] = c.coords[i];
            c.coords = std::move(coords);
        } else {
            c.point = permute_coords(g, c.point);
        }
    }
    return {permutation_sign(g), std::move(out)};
}

ParamCycle alt_cycle(const ParamCycle& Z) {
    ParamCycle out;
    out.n = Z.n;
    out.p = Z.p;
    const Rational inv = Rational(1) / factorial(Z.n);
    for (const auto& g : all_permutations(Z.n)) {
        SignedCycle s = permute(g, Z);
        for (auto& c : s.cycle.components) {
            c.multiplicity *= inv * s.sign;
            out.components.push_back(std::move(c));
        }
    }
    out.normalize();
    return out;
}

PointCycle alt_points(const PointCycle& Z) {
    PointCycle out(Z.n());
    const Rational inv = Rational(1) / factorial(Z.n());
    for (const auto& g : all_permutations(Z.n())) {
        const int sign = permutation_sign(g);
        for (const auto& t : Z.terms()) out.add(Rational(t.multiplicity * inv * sign), permute_coords(g, t.coords));
    }
    return out;
}

namespace {

void check_totaro_parameter(const GaussianRational& a, const char* name) {
    if (a.is_real() && (a.re <= 0 || a.re > 1))
        throw std::invalid_argument(std::string(name) + ": parameter must avoid (-inf, 0] and (1, inf)");
}

CycleComponent curve(std::vector<RationalFunction> coords) {
    CycleComponent c;
    c.kind = ComponentKind::Curve;
    c.coords = std::move(coords);
    return c;
}

}  // namespace

ParamCycle totaro_C(const GaussianRational& a) {
    check_totaro_parameter(a, "totaro_C");
    const Polynomial t = Polynomial::t();
    const Polynomial one(GaussianRational(1));
    ParamCycle Z{3, 2, {}};
    Z.components.push_back(curve({RationalFunction(t), RationalFunction(t - Polynomial(a), t), RationalFunction(one - t)}));
    return Z;
}

ParamCycle totaro_D(const GaussianRational& b) {
    check_totaro_parameter(b, "totaro_D");
    const Polynomial t = Polynomial::t();
    const Polynomial one(GaussianRational(1));
    ParamCycle Z{3, 2, {}};
    Z.components.push_back(curve({RationalFunction(one - t), RationalFunction(t - Polynomial(b), t), RationalFunction(t)}));
    return Z;
}

ParamCycle graph_point(const GaussianRational& f) {
    if (f.is_real() && f.re <= 0) throw std::invalid_argument("graph_point: value must avoid (-inf, 0]");
    if (f == GaussianRational(1)) throw std::invalid_argument("graph_point: value must differ from 1");
    CycleComponent c;
    c.kind = ComponentKind::Point;
    c.point = {PointValue::exact_value(f)};
    return ParamCycle{1, 1, {c}};
}

std::string to_string(const ParamCycle& Z) {
    std::ostringstream os;
    os << "n=" << Z.n << " p=" << Z.p << ":";
    if (Z.components.empty()) os << " 0";
    for (const auto& c : Z.components) {
        os << "\n  " << c.multiplicity.get_str() << " * (";
        if (c.kind == ComponentKind::Curve)
            for (std::size_t i = 0; i < c.coords.size(); ++i) os << (i ? ", " : "") << c.coords[i].to_string();
        else
            for (std::size_t i = 0; i < c.point.size(); ++i) os << (i ? ", " : "") << c.point[i].to_string();
        os << ")";
    }
    return os.str();
}

}  // namespace dbreg
