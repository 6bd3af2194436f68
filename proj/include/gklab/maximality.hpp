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

#include "gklab/places.hpp"

namespace gklab {

/// q^2 + 1 + 2 g q, the rational-point ceiling over F_{q^2}.
Int hasse_weil_bound(const Int& q, const Int& g);

struct MaximalityReport {
    CurveParams params;
    Int q;                           // the curve lives over F_{q^2}
    Int genus;                       // best available genus (formula, else oracle)
    std::optional<Int> genus_formula;
    std::optional<Int> genus_oracle;  // ramification-engine genus
    Int bound;                        // hasse_weil_bound(q, genus)
    Int N1;                           // counted degree-one places (when counted)
    bool counted = false;
    enum class Verdict { Maximal, NotMaximal, BoundExceeded, FormulaOnly } verdict;
    long long elapsed_ms = 0;

    const char* verdict_name() const;
    json to_json() const;
};

/// Assembles genus + exact place count into a maximality verdict. Counting
/// honors opts.budget_ms (0 falls back to the GKLAB_BUDGET_MS environment
/// variable); a blown budget downgrades the report to formula-only.
MaximalityReport verify_maximal(const CurveParams& params, const CountOptions& opts = {});

}  // namespace gklab
