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

#ifndef DBREG_QUADRATURE_HPP
#define DBREG_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "dbreg/coefficients.hpp"

namespace dbreg {

struct QuadratureResult {
    Complex value;
    double error = 0;
    int panels = 0;
    bool converged = true;
};

/// Globally adaptive Gauss-Legendre: every panel is estimated with 10 and 20
/// points and the worst panel is bisected until the summed error is below
/// abs_tol. `breaks` are interior points where f may be singular or jump.
QuadratureResult integrate(const std::function<Complex(double)>& f, double a, double b, double abs_tol,
                           const std::vector<double>& breaks = {}, int max_panels = 20000);

}  // namespace dbreg

#endif  // DBREG_QUADRATURE_HPP
