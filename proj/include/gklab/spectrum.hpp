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

#include "gklab/curves.hpp"
#include "gklab/ints.hpp"

namespace gklab {

/// e-sweep policy: Full evaluates the closed forms at e = n^2 - n + 1;
/// AllDivisors also walks proper divisors of n^2 - n + 1, where only the
/// ramification engine can produce the genus.
enum class EPolicy { Full, AllDivisors };

struct SpectrumEntry {
    Int genus;
    std::vector<CurveParams> realized_by;
};

struct SpectrumReport {
    long long n = 0;
    EPolicy policy = EPolicy::Full;
    std::vector<SpectrumEntry> entries;  // strictly increasing genus

    std::vector<Int> genera() const;
    json to_json() const;
};

/// Sweeps every validated tuple of the given families, evaluates genera,
/// dedupes and sorts. Every genus keeps the full list of realizing tuples.
SpectrumReport enumerate_genera(long long n,
                                const std::vector<Family>& families = {Family::C1, Family::C2,
                                                                       Family::C3, Family::XK},
                                EPolicy policy = EPolicy::Full, unsigned jobs = 0);

}  // namespace gklab
