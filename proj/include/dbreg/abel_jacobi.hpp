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

#ifndef DBREG_ABEL_JACOBI_HPP
#define DBREG_ABEL_JACOBI_HPP

#include <optional>
#include <string>

#include "dbreg/regulator_engine.hpp"

namespace dbreg {

/// A complex number modulo the lattice (2 pi i)^p Z.
struct JacobianValue {
    Complex value;
    int p = 0;
    double error = 0;

    Complex lattice_generator() const;
};

/// Integral over [0, 1] of the path-model regulator. Throws InadmissibleError
/// when the cycle is not closed or not homologous to zero.
JacobianValue aj_P(const ParamCycle& Z, const RegulatorOptions& opt = {});

/// Representative v - k w with k = round(Re(v / w)), w the lattice generator.
JacobianValue reduce(const JacobianValue& v);

/// Smallest m <= max_order with m v within tol of the lattice, found among the
/// continued-fraction denominators of v / w.
std::optional<int> torsion_order(const JacobianValue& v, int max_order, double tol = 1e-9);

struct HomologyReport {
    bool closed = true;
    bool homologous_to_zero = true;
    /// Signed count of Z meeting (R^-)^n; only computed when n = 2p.
    std::optional<Rational> signed_count;
    std::string reason;
};

HomologyReport is_homologous_to_zero(const ParamCycle& Z);

}  // namespace dbreg

#endif  // DBREG_ABEL_JACOBI_HPP
