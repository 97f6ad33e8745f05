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

// dbreg command-line front end.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "dbreg/abel_jacobi.hpp"
#include "dbreg/errors.hpp"
#include "dbreg/json_io.hpp"
#include "dbreg/regulator_engine.hpp"
#include "dbreg/verify.hpp"

using namespace dbreg;

namespace {

enum Exit { kOk = 0, kParse = 1, kInadmissible = 2, kIdentity = 3, kNumeric = 4 };

struct Globals {
    bool json = false;
    bool timings = false;
    double tol = 1e-10;
    int digits = 12;
    std::uint64_t seed = 1;
};

class Clock {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(Complex z, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

std::string fmt(double x, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

std::string text(const PolyForm<Complex>& u, int digits) {
    std::ostringstream os;
    os << "f:";
    for (std::size_t k = 0; k < u.f.size(); ++k) os << "\n  x^" << k << ": " << fmt(u.f[k], digits);
    os << "\ng (dx):";
    for (std::size_t k = 0; k < u.g.size(); ++k) os << "\n  x^" << k << ": " << fmt(u.g[k], digits);
    return os.str();
}

void emit(const Globals& g, const std::string& command, Json inputs, Json results, const Clock& clock) {
    Json report;
    report["command"] = command;
    report["inputs"] = std::move(inputs);
    report["results"] = std::move(results);
    if (g.timings) report["timings"] = Json{{"total_seconds", clock.seconds()}};
    std::cout << report.dump(2) << "\n";
}

int generate_rn(const Globals& g, int n, const std::string& model) {
    Clock clock;
    if (n < 1 || n > 12) throw std::out_of_range("n must lie in 1..12");
    Json inputs{{"n", n}, {"model", model}};
    if (model == "path") {
        const PathSum R = build_RP(n);
        if (g.json) {
            Json res{{"zero_form_terms", dx_part(R, 0).size()}, {"one_form_terms", dx_part(R, 1).size()}, {"terms", to_json(R)}};
            emit(g, "generate-rn", inputs, res, clock);
        } else {
            std::cout << "R^" << n << "_P = " << to_string(R) << "\n";
        }
    } else {
        const FormalTriple R = build_RC(n);
        if (g.json)
            emit(g, "generate-rn", inputs, to_json(R), clock);
        else
            std::cout << "R^" << n << "_C = " << to_string(R) << "\n";
    }
    return kOk;
}

int verify(const Globals& g, const std::string& suite, int max_n) {
    Clock clock;
    if (max_n < 1 || max_n > 8) throw std::out_of_range("--max-n must lie in 1..8");
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names = {suite};
    bool pass = true;
    Json suites = Json::array();
    for (const auto& name : names) {
        SuiteResult r = run_suite(name, max_n, g.seed);
        pass = pass && r.pass;
        if (g.json) {
            suites.push_back(to_json(r));
        } else {
            for (const auto& c : r.checks)
                std::cout << (c.pass ? "ok   " : "FAIL ") << name << ": " << c.name
                          << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
            std::cout << name << ": " << (r.pass ? "pass" : "FAIL") << "\n";
        }
    }
    if (g.json)
        emit(g, "verify", Json{{"suite", suite}, {"max_n", max_n}, {"seed", g.seed}},
             Json{{"pass", pass}, {"suites", suites}}, clock);
    return pass ? kOk : kIdentity;
}

int boundary(const Globals& g, const std::string& file) {
    Clock clock;
    const ParamCycle Z = read_cycle_file(file);
    const PointCycle b = bloch_boundary(Z);
    if (g.json)
        emit(g, "boundary", Json{{"cycle", file}}, Json{{"boundary", to_json(b)}, {"is_zero", b.is_zero()}}, clock);
    else
        std::cout << "boundary: " << b.to_string() << "\n";
    return kOk;
}

int admissible(const Globals& g, const std::string& file) {
    Clock clock;
    const ParamCycle Z = read_cycle_file(file);
    const AdmissibilityReport a = is_admissible(Z, 1e-9);
    const RealAdmissibilityReport r = is_real_admissible(Z, 1e-9);
    if (g.json) {
        emit(g, "admissible", Json{{"cycle", file}}, Json{{"admissible", to_json(a)}, {"real_admissible", to_json(r)}},
             clock);
    } else {
        std::cout << "admissible: " << (a.admissible ? "yes" : "no") << (a.degenerate ? " (degenerate)" : "") << "\n";
        for (const auto& v : a.violations) std::cout << "  violation: " << v << "\n";
        for (const auto& v : a.notes) std::cout << "  note: " << v << "\n";
        std::cout << "real admissible: " << (r.real_admissible ? "yes" : "no") << "\n";
        for (const auto& v : r.violations) std::cout << "  violation: " << v << "\n";
        for (const auto& v : r.incidences) std::cout << "  incidence: " << v << "\n";
        for (const auto& p : r.pairs)
            std::cout << "  component " << p.component << " slots (" << p.slot_a << "," << p.slot_b
                      << "): " << p.crossings << " crossing(s)" << (p.proper ? "" : ", improper") << "\n";
    }
    return a.admissible && r.real_admissible ? kOk : kInadmissible;
}

int alt(const Globals& g, const std::string& file) {
    Clock clock;
    ParamCycle A = alt_cycle(read_cycle_file(file));
    A.normalize();
    if (g.json)
        emit(g, "alt", Json{{"cycle", file}}, cycle_to_json(A), clock);
    else
        std::cout << to_string(A) << "\n";
    return kOk;
}

int regulate(const Globals& g, const std::string& file, const std::string& model, bool with_checks) {
    Clock clock;
    const ParamCycle Z = read_cycle_file(file);
    RegulatorOptions opt;
    opt.abs_tol = g.tol;
    const RegulatorValue r = model == "path" ? regulate_P(Z, opt) : regulate_C(Z, opt);
    Json res = to_json(r);
    Json checks{{"admissible", true}, {"real_admissible", true}, {"holomorphic_tol", opt.holomorphic_tol}};
    std::optional<CrossCheckReport> cc;
    if (with_checks) {
        cc = cross_checks(Z, 1e-8, opt);
        checks["cross_checks"] = to_json(*cc);
    }
    res["checks"] = checks;
    if (model == "path") res["integral"] = to_json(integrate_full(r.path));
    if (g.json) {
        emit(g, "regulate", Json{{"cycle", file}, {"model", model}, {"tol", g.tol}}, res, clock);
    } else {
        std::cout << "model: " << model << "  p = " << r.p << "  n = " << r.n << "\n";
        if (model == "path") {
            std::cout << text(r.path, g.digits) << "\n";
            std::cout << "integral over [0,1]: " << fmt(integrate_full(r.path), g.digits) << "\n";
        } else {
            std::cout << "a: " << fmt(r.triple.a, g.digits) << "\nb: " << fmt(r.triple.b, g.digits)
                      << "\nc: " << fmt(r.triple.c, g.digits) << "\n";
        }
        std::cout << "error estimate: " << fmt(r.error_estimate, 3) << "\n";
        if (cc)
            for (const auto& i : cc->items)
                std::cout << (i.pass ? "ok   " : "FAIL ") << i.name << " (deviation " << fmt(i.deviation, 3) << ")\n";
    }
    return cc && !cc->pass ? kIdentity : kOk;
}

int abel_jacobi(const Globals& g, const std::string& file, int torsion_max) {
    Clock clock;
    const ParamCycle Z = read_cycle_file(file);
    RegulatorOptions opt;
    opt.abs_tol = g.tol;
    const HomologyReport h = is_homologous_to_zero(Z);
    const JacobianValue v = aj_P(Z, opt);
    const JacobianValue red = reduce(v);
    const std::optional<int> order = torsion_order(v, torsion_max);
    if (g.json) {
        Json res{{"value", to_json(v.value)},
                 {"lattice", to_json(v.lattice_generator())},
                 {"reduced", to_json(red.value)},
                 {"torsion_order", order ? Json(*order) : Json(nullptr)},
                 {"error_estimate", v.error},
                 {"homology", to_json(h)}};
        emit(g, "abel-jacobi", Json{{"cycle", file}, {"torsion_max", torsion_max}, {"tol", g.tol}}, res, clock);
    } else {
        std::cout << "value: " << fmt(v.value, g.digits) << "\n";
        std::cout << "lattice: (2 pi i)^" << v.p << " Z\n";
        std::cout << "reduced: " << fmt(red.value, g.digits) << "\n";
        std::cout << "torsion order (<= " << torsion_max << "): " << (order ? std::to_string(*order) : "none") << "\n";
        std::cout << "error estimate: " << fmt(v.error, 3) << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regulators of higher Chow cycles in Deligne-Beilinson cohomology"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "machine-readable JSON report");
    app.add_flag("--timings", g.timings, "include wall-clock timings in the JSON report");
    app.add_option("--tol", g.tol, "absolute tolerance for numerical integration")->check(CLI::PositiveNumber);
    app.add_option("--digits", g.digits, "significant digits in text output")->check(CLI::Range(1, 17));
    app.add_option("--seed", g.seed, "seed for randomized suites");

    int n = 2;
    std::string model = "path";
    auto* gen = app.add_subcommand("generate-rn", "print the kernel R^n in either model");
    gen->add_option("--n", n, "number of slots")->required();
    gen->add_option("--model", model)->check(CLI::IsMember({"path", "triple"}));

    std::string suite = "all";
    int max_n = 6;
    auto* ver = app.add_subcommand("verify", "run exact identity suites");
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    ver->add_option("--suite", suite)->check(CLI::IsMember(suites));
    ver->add_option("--max-n", max_n);

    std::string file;
    auto add_cycle = [&](CLI::App* sub) { sub->add_option("--cycle,cycle", file, "cycle file (JSON)")->required(); };
    auto* bnd = app.add_subcommand("boundary", "Bloch boundary of a cycle");
    add_cycle(bnd);
    auto* adm = app.add_subcommand("admissible", "admissibility and real admissibility");
    add_cycle(adm);
    auto* alt_cmd = app.add_subcommand("alt", "alternation of a cycle");
    add_cycle(alt_cmd);
    bool with_checks = false;
    auto* reg = app.add_subcommand("regulate", "regulator in the path or triple model");
    add_cycle(reg);
    reg->add_option("--model", model)->check(CLI::IsMember({"path", "triple"}));
    reg->add_flag("--cross-checks", with_checks, "also run the model and symmetry cross-checks");
    int torsion_max = 100;
    auto* aj = app.add_subcommand("abel-jacobi", "Abel-Jacobi image of a cycle homologous to zero");
    add_cycle(aj);
    aj->add_option("--torsion-max", torsion_max)->check(CLI::PositiveNumber);

    for (auto* sub : {gen, ver, bnd, adm, alt_cmd, reg, aj}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kParse;
    }

    try {
        if (*gen) return generate_rn(g, n, model);
        if (*ver) return verify(g, suite, max_n);
        if (*bnd) return boundary(g, file);
        if (*adm) return admissible(g, file);
        if (*alt_cmd) return alt(g, file);
        if (*reg) return regulate(g, file, model, with_checks);
        if (*aj) return abel_jacobi(g, file, torsion_max);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const InadmissibleError& e) {
        std::cerr << "inadmissible: " << e.what() << "\n";
        return kInadmissible;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kNumeric;
    } catch (const std::domain_error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kNumeric;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    }
    return kOk;
}
