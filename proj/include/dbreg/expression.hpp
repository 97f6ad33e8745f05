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

// Recursive-descent parser for coordinate expressions such as "1 - a/t" or
// "(t^2 + 3*i)/(2t - 1)". Grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/' | <implicit>) unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' ['-'] integer)?
//   primary := number | identifier | '(' expr ')'
// Identifiers are the variable, a named parameter, or the imaginary unit i.

#ifndef DBREG_EXPRESSION_HPP
#define DBREG_EXPRESSION_HPP

#include <map>
#include <string>

#include "dbreg/polynomial.hpp"

namespace dbreg {

using ParameterMap = std::map<std::string, GaussianRational>;

/// Throws ParseError on malformed input or division by zero.
RationalFunction parse_expression(const std::string& text, const ParameterMap& params = {},
                                  const std::string& var = "t");

/// Parses an expression that must not depend on the variable.
GaussianRational parse_constant(const std::string& text, const ParameterMap& params = {});

}  // namespace dbreg

#endif  // DBREG_EXPRESSION_HPP
