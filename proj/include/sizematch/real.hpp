/* Copyright 2026 The sizematch Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SIZEMATCH_REAL_HPP_
#define SIZEMATCH_REAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sizematch {

// Exact rational scalar used for every measuring-function value and every
// coordinate in the plane of cornerpoints. Reduced size functions are step
// functions, so all comparisons are exact; nothing is compared with a
// tolerance.
using Real = mpq_class;

// Parses a decimal literal ("3", "-0.25", "1.5e-3") into its exact rational
// value. Throws std::invalid_argument on anything else, including nan/inf.
Real parse_decimal(std::string_view text);

// Interprets a double as the shortest decimal that round-trips to it, so
// that 0.1 read through a JSON parser means 1/10 and not the binary
// neighbour of 1/10.
Real from_double(double value);

// Nearest double.
double to_double(const Real& value);

// Exact decimal text when the denominator is of the form 2^a 5^b,
// otherwise "p/q".
std::string to_string(const Real& value);

Real make_real(long numerator, long denominator = 1);

Real abs(const Real& value);
const Real& max(const Real& a, const Real& b);
const Real& min(const Real& a, const Real& b);

// A real number or +infinity. Used where the pseudo-distance between
// points of the extended half-plane may be infinite.
struct ExtendedReal {
  Real value{};
  bool infinite = false;

  static ExtendedReal infinity() { return ExtendedReal{Real(0), true}; }
  static ExtendedReal finite(Real v) { return ExtendedReal{std::move(v), false}; }

  friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.value == b.value;
  }
  friend bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend bool operator<=(const ExtendedReal& a, const ExtendedReal& b) {
    return !(b < a);
  }
};

std::string to_string(const ExtendedReal& value);

}  // namespace sizematch

#endif  // SIZEMATCH_REAL_HPP_
