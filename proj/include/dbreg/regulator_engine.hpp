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

#ifndef DBREG_REGULATOR_ENGINE_HPP
#define DBREG_REGULATOR_ENGINE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dbreg/chow_cycles.hpp"
#include "dbreg/formal_currents.hpp"
#include "dbreg/real_arcs.hpp"
#include "dbreg/simplex_forms.hpp"
#include "dbreg/three_term.hpp"

namespace dbreg {

enum class Model { Path, Triple };

struct Estimate {
    Complex value;
    double error = 0;
};

struct TermDiagnostic {
    std::string word;
    int component = 0;
    Complex value;
    double error = 0;
    std::string method;  // "arc", "crossings", "holomorphic", "point"
};

struct RegulatorValue {
    Model model = Model::Path;
    int p = 0;
    int n = 0;
    PolyForm<Complex> path;
    Triple<Complex> triple;
    double error_estimate = 0;
    std::vector<TermDiagnostic> diagnostics;
};

struct RegulatorOptions {
    double abs_tol = 1e-10;
    /// Threshold for the holomorphic-vanishing assertion on double-dlog terms.
    double holomorphic_tol = 1e-9;
    int arc_steps = 512;
};

PolyForm<Complex> to_complex(const PolyForm<TauScalar>& u);
/// (w(0), w(1), integral of w).
Triple<Complex> ev(const PolyForm<Complex>& w);

/// Integral of prod_j log z_j * dlog z_c over the real face {z_r in R^-} of a
/// curve component, arcs oriented pole -> zero. Slots are 0-based.
struct ArcTerm {
    int rneg_slot = 0;
    std::vector<int> log_slots;
    int dlog_slot = 0;
};

/// Evaluates words of formal currents on the components of a cycle, caching
/// arcs and crossings per component.
class WordEvaluator {
public:
    WordEvaluator(const ParamCycle& Z, RegulatorOptions opt);
    ~WordEvaluator();
    WordEvaluator(const WordEvaluator&) = delete;
    WordEvaluator& operator=(const WordEvaluator&) = delete;

    /// Sum over components (with multiplicity) of the word's value; words
    /// whose degree differs from the component dimension contribute zero.
    Estimate evaluate(const Word& w, std::vector<TermDiagnostic>* diag = nullptr);
    Estimate arc_integral(int component, const ArcTerm& term, double abs_tol);
    /// Signed crossings of the real faces of slots a and b, weighted by the
    /// product of log z_j over `log_slots` at each crossing.
    Estimate crossing_sum(int component, int a, int b, const std::vector<int>& log_slots);
    /// Integral of the dx^dy-coefficient of prod log z_j * dlog z_a ^ dlog z_b
    /// over the parameter sphere, computed in real coordinates.
    double holomorphic_defect(int component, int a, int b, const std::vector<int>& log_slots);

private:
    struct ComponentCache;
    ComponentCache& cache(int component);
    const ArcFamily& family(int component, int slot);
    const PairwiseReport& pair(int component, int a, int b);

    ParamCycle Z_;
    RegulatorOptions opt_;
    std::map<int, std::unique_ptr<ComponentCache>> caches_;
    std::map<Word, Estimate> memo_;
};

RegulatorValue regulate_P(const ParamCycle& Z, const RegulatorOptions& opt = {});
RegulatorValue regulate_C(const ParamCycle& Z, const RegulatorOptions& opt = {});

struct CrossCheckItem {
    std::string name;
    bool pass = false;
    double deviation = 0;
};

struct CrossCheckReport {
    bool pass = true;
    double tol = 1e-8;
    std::vector<CrossCheckItem> items;
};

/// (i) ev(r_P(Z)) = r_C(alt Z); (ii) the first two components of ev(r_P(Z))
/// equal those of r_C(Z); (iii) r_P(g.Z) = sgn(g) r_P(Z) for all g in S_n.
CrossCheckReport cross_checks(const ParamCycle& Z, double tol = 1e-8, const RegulatorOptions& opt = {});

/// Largest coefficient difference of two path payloads.
double max_difference(const PolyForm<Complex>& u, const PolyForm<Complex>& v);
double max_difference(const Triple<Complex>& u, const Triple<Complex>& v);

}  // namespace dbreg

#endif  // DBREG_REGULATOR_ENGINE_HPP
