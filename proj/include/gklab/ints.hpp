// Copyright 2026 The gklab authors
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

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gklab {

/// Arbitrary-precision signed integer. All genus, degree and bound
/// computations go through this type; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, used for the L/U covering-degree bounds.
using Rat = boost::multiprecision::cpp_rational;

/// Bad user input: violated divisibility constraint, hypothesis failure,
/// mixed-field operands. CLI maps this to exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal cross-check failure (oracle mismatch, odd bracket before
/// halving, non-integer quotient). CLI maps this to exit code 3.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Enumeration work exceeded the configured time budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int ipow(Int base, unsigned long long e) {
    Int r{1};
    while (e) {
        if (e & 1ULL) r *= base;
        base *= base;
        e >>= 1ULL;
    }
    return r;
}

inline Int igcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

/// Floor division for signed big integers (cpp_int's operator/ truncates).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) == (b < 0))) ++q;
    return q;
}

inline Int rat_floor(const Rat& x) { return floor_div(numerator(x), denominator(x)); }
inline Int rat_ceil(const Rat& x) { return ceil_div(numerator(x), denominator(x)); }

/// Division that must be exact; anything else is a transcription bug.
inline Int exact_div(const Int& a, const Int& b, const char* what) {
    if (b == 0 || a % b != 0)
        throw ConsistencyError(std::string("non-exact division in ") + what);
    return a / b;
}

inline Int halve_even(const Int& a, const char* what) {
    if (a % 2 != 0)
        throw ConsistencyError(std::string("odd bracket before halving in ") + what);
    return a / 2;
}

inline std::string dec(const Int& x) { return x.str(); }

}  // namespace gklab
