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

#ifndef DBREG_SPECIAL_FUNCTIONS_HPP
#define DBREG_SPECIAL_FUNCTIONS_HPP

#include "dbreg/coefficients.hpp"

namespace dbreg {

/// Principal logarithm, cut along R^-, arg in (-pi, pi].
Complex log_branch(Complex z);

/// Principal dilogarithm, cut along (1, inf). Throws std::domain_error on the cut.
Complex dilog(Complex z);

}  // namespace dbreg

#endif  // DBREG_SPECIAL_FUNCTIONS_HPP
