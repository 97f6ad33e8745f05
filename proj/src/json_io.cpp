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

#include "dbreg/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "dbreg/errors.hpp"
#include "dbreg/expression.hpp"

namespace dbreg {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw ParseError("cycle file: " + msg); }

Json word_json(const Word& w) {
    Json a = Json::array();
    for (Letter l : w) a.push_back(letter_name(l));
    return a;
}

Word word_from_json(const Json& j) {
    Word w;
    for (const auto& l : j) w.push_back(parse_letter(l.get<std::string>()));
    return w;
}

GaussianRational parameter_from_json(const std::string& name, const Json& v) {
    if (v.is_string()) return parse_constant(v.get<std::string>());
    if (v.is_number()) return GaussianRational(rational_from_double(v.get<double>()));
    if (v.is_object()) {
        double re = v.value("re", 0.0), im = v.value("im", 0.0);
        return GaussianRational(rational_from_double(re), rational_from_double(im));
    }
    bad("parameter '" + name + "' must be a string, a number or {re, im}");
}

PointValue point_coord(const Json& v, const ParameterMap& params) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "inf" || s == "infinity") return PointValue::infinity();
        return PointValue::exact_value(parse_constant(s, params));
    }
    if (v.is_number_integer()) return PointValue::exact_value(GaussianRational(Rational(v.get<long>())));
    if (v.is_number() || v.is_object() || v.is_array()) return PointValue::numeric(complex_from_json(v));
    bad("unreadable point coordinate");
}

}  // namespace

Json to_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) {
        Rational q = parse_rational(j.get<std::string>());
        q.canonicalize();
        return q;
    }
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number()) return rational_from_double(j.get<double>());
    throw ParseError("expected a rational number");
}

Json to_json(const GaussianRational& z) { return z.to_string(); }

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
    if (j.is_object()) return {j.value("re", 0.0), j.value("im", 0.0)};
    throw ParseError("expected a complex number");
}

Json to_json(const PointValue& v) {
    if (v.infinite) return "inf";
    if (v.exact) return v.q.to_string();
    return Json{{"re", v.z.real()}, {"im", v.z.imag()}};
}

PointValue point_value_from_json(const Json& j) { return point_coord(j, {}); }

ParamCycle cycle_from_json(const Json& j) {
    try {
        if (!j.is_object()) bad("top level must be an object");
        if (!j.contains("n") || !j["n"].is_number_integer()) bad("integer 'n' required");
        if (!j.contains("components") || !j["components"].is_array()) bad("'components' array required");
        ParamCycle Z;
        Z.n = j["n"].get<int>();
        if (Z.n < 1) bad("n must be positive");
        Z.p = j.contains("p") ? j["p"].get<int>() : Z.n - 1;
        ParameterMap params;
        if (j.contains("parameters")) {
            if (!j["parameters"].is_object()) bad("'parameters' must be an object");
            for (const auto& [name, v] : j["parameters"].items()) {
                if (name == "t" || name == "i") bad("parameter name '" + name + "' is reserved");
                params[name] = parameter_from_json(name, v);
            }
        }
        for (const auto& c : j["components"]) {
            CycleComponent comp;
            comp.multiplicity = c.contains("multiplicity") ? rational_from_json(c["multiplicity"]) : Rational(1);
            if (c.contains("coords") == c.contains("point")) bad("each component needs exactly one of 'coords' or 'point'");
            const Json& list = c.contains("coords") ? c["coords"] : c["point"];
            if (!list.is_array() || static_cast<int>(list.size()) != Z.n)
                bad("component needs " + std::to_string(Z.n) + " coordinates");
            if (c.contains("coords")) {
                comp.kind = ComponentKind::Curve;
                for (const auto& e : list) {
                    if (!e.is_string()) bad("curve coordinates must be expressions in t");
                    comp.coords.push_back(parse_expression(e.get<std::string>(), params));
                }
            } else {
                comp.kind = ComponentKind::Point;
                for (const auto& e : list) comp.point.push_back(point_coord(e, params));
            }
            Z.components.push_back(std::move(comp));
        }
        return Z;
    } catch (const nlohmann::json::exception& e) {
        bad(e.what());
    } catch (const std::invalid_argument& e) {
        bad(e.what());
    }
}

Json cycle_to_json(const ParamCycle& Z) {
    Json comps = Json::array();
    for (const auto& c : Z.components) {
        Json o;
        o["multiplicity"] = to_json(c.multiplicity);
        Json list = Json::array();
        if (c.kind == ComponentKind::Curve) {
            for (const auto& f : c.coords) list.push_back(f.to_string("t"));
            o["coords"] = list;
        } else {
            for (const auto& v : c.point) list.push_back(to_json(v));
            o["point"] = list;
        }
        comps.push_back(o);
    }
    return Json{{"n", Z.n}, {"p", Z.p}, {"components", comps}};
}

ParamCycle read_cycle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return cycle_from_json(j);
}

Json to_json(const PathSum& A) {
    Json out = Json::array();
    for (const auto& [w, c] : A.terms()) {
        std::set<int> powers;
        for (const auto& v : c.f)
            for (const auto& [k, q] : v.terms()) powers.insert(k);
        for (const auto& v : c.g)
            for (const auto& [k, q] : v.terms()) powers.insert(k);
        for (int k : powers) {
            Json f = Json::array(), g = Json::array();
            for (const auto& v : c.f) f.push_back(to_json(v.coefficient(k)));
            for (const auto& v : c.g) g.push_back(to_json(v.coefficient(k)));
            out.push_back(Json{{"word", word_json(w)}, {"tau", k}, {"f", f}, {"g", g}});
        }
    }
    return out;
}

PathSum path_sum_from_json(const Json& j, int n) {
    PathSum A(n);
    for (const auto& e : j) {
        const int k = e.at("tau").get<int>();
        std::vector<TauScalar> f, g;
        for (const auto& q : e.at("f")) f.emplace_back(rational_from_json(q), k);
        for (const auto& q : e.at("g")) g.emplace_back(rational_from_json(q), k);
        A.add(word_from_json(e.at("word")), PolyForm<TauScalar>(f, g));
    }
    return A;
}

Json to_json(const ScalarSum& A) {
    Json out = Json::array();
    for (const auto& [w, c] : A.terms())
        for (const auto& [k, q] : c.terms())
            out.push_back(Json{{"word", word_json(w)}, {"tau", k}, {"coefficient", to_json(q)}});
    return out;
}

ScalarSum scalar_sum_from_json(const Json& j, int n) {
    ScalarSum A(n);
    for (const auto& e : j)
        A.add(word_from_json(e.at("word")), TauScalar(rational_from_json(e.at("coefficient")), e.at("tau").get<int>()));
    return A;
}

Json to_json(const FormalTriple& t) {
    return Json{{"a", to_json(t.a)}, {"b", to_json(t.b)}, {"c", to_json(t.c)}, {"degree", t.degree}};
}

FormalTriple formal_triple_from_json(const Json& j, int n) {
    FormalTriple t;
    t.a = scalar_sum_from_json(j.at("a"), n);
    t.b = scalar_sum_from_json(j.at("b"), n);
    t.c = scalar_sum_from_json(j.at("c"), n);
    t.degree = j.at("degree").get<int>();
    return t;
}

Json to_json(const PolyForm<Complex>& u) {
    Json f = Json::array(), g = Json::array();
    for (auto c : u.f) f.push_back(to_json(c));
    for (auto c : u.g) g.push_back(to_json(c));
    return Json{{"f", f}, {"g", g}};
}

PolyForm<Complex> complex_form_from_json(const Json& j) {
    std::vector<Complex> f, g;
    for (const auto& c : j.at("f")) f.push_back(complex_from_json(c));
    for (const auto& c : j.at("g")) g.push_back(complex_from_json(c));
    return PolyForm<Complex>(f, g);
}

Json to_json(const Triple<Complex>& t) {
    return Json{{"a", to_json(t.a)}, {"b", to_json(t.b)}, {"c", to_json(t.c)}, {"degree", t.degree}};
}

Triple<Complex> complex_triple_from_json(const Json& j) {
    Triple<Complex> t;
    t.a = complex_from_json(j.at("a"));
    t.b = complex_from_json(j.at("b"));
    t.c = complex_from_json(j.at("c"));
    t.degree = j.at("degree").get<int>();
    return t;
}

Json to_json(const PointCycle& Z) {
    Json terms = Json::array();
    for (const auto& t : Z.terms()) {
        Json pt = Json::array();
        for (const auto& v : t.coords) pt.push_back(to_json(v));
        terms.push_back(Json{{"multiplicity", to_json(t.multiplicity)}, {"point", pt}});
    }
    return Json{{"n", Z.n()}, {"terms", terms}};
}

PointCycle point_cycle_from_json(const Json& j) {
    PointCycle Z(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
        std::vector<PointValue> coords;
        for (const auto& v : t.at("point")) coords.push_back(point_value_from_json(v));
        Z.add(rational_from_json(t.at("multiplicity")), coords);
    }
    return Z;
}

Json to_json(const RegulatorValue& r) {
    Json terms = Json::array();
    for (const auto& d : r.diagnostics)
        terms.push_back(Json{{"word", d.word},
                             {"component", d.component},
                             {"method", d.method},
                             {"value", to_json(d.value)},
                             {"error", d.error}});
    Json out;
    out["model"] = r.model == Model::Path ? "path" : "triple";
    out["p"] = r.p;
    out["n"] = r.n;
    out["payload"] = r.model == Model::Path ? to_json(r.path) : to_json(r.triple);
    out["error_estimate"] = r.error_estimate;
    out["terms"] = terms;
    return out;
}

Json to_json(const CrossCheckReport& r) {
    Json items = Json::array();
    for (const auto& i : r.items) items.push_back(Json{{"name", i.name}, {"pass", i.pass}, {"deviation", i.deviation}});
    return Json{{"pass", r.pass}, {"tol", r.tol}, {"items", items}};
}

Json to_json(const AdmissibilityReport& r) {
    return Json{{"admissible", r.admissible},
                {"degenerate", r.degenerate},
                {"violations", r.violations},
                {"notes", r.notes}};
}

Json to_json(const RealAdmissibilityReport& r) {
    Json pairs = Json::array();
    for (const auto& p : r.pairs) {
        Json pts = Json::array();
        for (auto z : p.points) pts.push_back(to_json(z));
        pairs.push_back(Json{{"component", p.component},
                             {"slots", {p.slot_a, p.slot_b}},
                             {"proper", p.proper},
                             {"crossings", p.crossings},
                             {"points", pts}});
    }
    return Json{{"real_admissible", r.real_admissible},
                {"violations", r.violations},
                {"incidences", r.incidences},
                {"pairs", pairs}};
}

Json to_json(const HomologyReport& r) {
    Json out{{"closed", r.closed}, {"homologous_to_zero", r.homologous_to_zero}};
    out["signed_count"] = r.signed_count ? Json(r.signed_count->get_str()) : Json(nullptr);
    out["reason"] = r.reason;
    return out;
}

Json to_json(const SuiteResult& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json o{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) o["detail"] = c.detail;
        checks.push_back(o);
    }
    return Json{{"suite", r.suite}, {"pass", r.pass}, {"checks", checks}};
}

}  // namespace dbreg
