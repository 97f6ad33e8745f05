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

#ifndef DBREG_JSON_IO_HPP
#define DBREG_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include <string>

#include "dbreg/abel_jacobi.hpp"
#include "dbreg/chow_cycles.hpp"
#include "dbreg/formal_currents.hpp"
#include "dbreg/regulator_engine.hpp"
#include "dbreg/verify.hpp"

namespace dbreg {

using Json = nlohmann::ordered_json;

/// Cycle files:
///   {"n": 3, "p": 2,
///    "components": [{"multiplicity": "1", "coords": ["t", "1 - a/t", "1 - t"]},
///                   {"multiplicity": "-1", "point": ["2", "1/2 + i"]}],
///    "parameters": {"a": {"re": 0.5, "im": 0.0}}}
/// Parameters may also be given as exact strings ("1/2", "3/10 - 2/5*i").
/// Decimal parameters are converted with rational_from_double.
ParamCycle cycle_from_json(const Json& j);
Json cycle_to_json(const ParamCycle& Z);
ParamCycle read_cycle_file(const std::string& path);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const GaussianRational& z);
Json to_json(Complex z);
Complex complex_from_json(const Json& j);
Json to_json(const PointValue& v);
PointValue point_value_from_json(const Json& j);

/// One entry per (word, tau power): {"word": [...], "tau": k, "f": [...], "g": [...]}.
Json to_json(const PathSum& A);
PathSum path_sum_from_json(const Json& j, int n);
/// Entries {"word": [...], "tau": k, "coefficient": "q"}.
Json to_json(const ScalarSum& A);
ScalarSum scalar_sum_from_json(const Json& j, int n);
Json to_json(const FormalTriple& t);
FormalTriple formal_triple_from_json(const Json& j, int n);

Json to_json(const PolyForm<Complex>& u);
PolyForm<Complex> complex_form_from_json(const Json& j);
Json to_json(const Triple<Complex>& t);
Triple<Complex> complex_triple_from_json(const Json& j);

Json to_json(const PointCycle& Z);
PointCycle point_cycle_from_json(const Json& j);

Json to_json(const RegulatorValue& r);
Json to_json(const CrossCheckReport& r);
Json to_json(const AdmissibilityReport& r);
Json to_json(const RealAdmissibilityReport& r);
Json to_json(const HomologyReport& r);
Json to_json(const SuiteResult& r);

}  // namespace dbreg

#endif  // DBREG_JSON_IO_HPP
