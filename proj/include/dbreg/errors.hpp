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

#ifndef DBREG_ERRORS_HPP
#define DBREG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dbreg {

/// Malformed input: expressions, cycle files, flags.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A chain that does not meet the faces (or real faces) properly.
class InadmissibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Root tracking or quadrature did not reach the requested accuracy.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dbreg

#endif  // DBREG_ERRORS_HPP
