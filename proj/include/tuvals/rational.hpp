// Copyright 2026 The tuvals Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TUVALS_RATIONAL_HPP_
#define TUVALS_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tuvals {

// Exact arbitrary-precision rational. Every worth, payoff, coefficient and
// weight in the engine is one of these; no floating point enters any
// computation path.
using Rational = mpq_class;

// Per-player payoff vector; index 0 holds player 1.
using Allocation = std::vector<Rational>;

// Parses an exact rational from "p/q", integer, or decimal text
// (e.g. "-3", "7/2", "1.25"). Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

// Canonical fraction rendering: reduced terms, positive denominator,
// plain "p" when the denominator is 1.
std::string to_fraction_string(const Rational& value);

// Decimal rendering with the given number of significant digits (courtesy
// output only; never fed back into computations).
std::string to_decimal_string(const Rational& value, int significant_digits = 6);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

Rational sum(const Allocation& payoffs);

std::vector<std::string> to_fraction_strings(const Allocation& payoffs);

}  // namespace tuvals

#endif  // TUVALS_RATIONAL_HPP_
