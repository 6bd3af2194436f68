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

#include "gklab/maximality.hpp"

#include <chrono>
#include <cstdlib>

#include "gklab/genus.hpp"

namespace gklab {

Int hasse_weil_bound(const Int& q, const Int& g) { return q * q + 1 + 2 * g * q; }

const char* MaximalityReport::verdict_name() const {
    switch (verdict) {
        case Verdict::Maximal: return "maximal";
        case Verdict::NotMaximal: return "not-maximal";
        case Verdict::BoundExceeded: return "bound-exceeded";
        case Verdict::FormulaOnly: return "formula-only";
    }
    return "?";
}

json MaximalityReport::to_json() const {
    json j{{"family", family_name(params.family)},
           {"params", params.to_json()},
           {"n", params.n},
           {"q", int_to_json(q)},
           {"genus", int_to_json(genus)},
           {"bound", int_to_json(bound)},
           {"verdict", verdict_name()},
           {"elapsed_ms", elapsed_ms}};
    j["genus_formula"] = genus_formula ? int_to_json(*genus_formula) : json(nullptr);
    j["genus_oracle"] = genus_oracle ? int_to_json(*genus_oracle) : json(nullptr);
    j["N1"] = counted ? int_to_json(N1) : json(nullptr);
    return j;
}

MaximalityReport verify_maximal(const CurveParams& raw, const CountOptions& opts_in) {
    auto t0 = std::chrono::steady_clock::now();
    CurveParams P = validate(raw);
    CountOptions opts = opts_in;
    if (opts.budget_ms == 0) {
        if (const char* env = std::getenv("GKLAB_BUDGET_MS")) opts.budget_ms = std::atoll(env);
    }

    MaximalityReport rep;
    rep.params = P;
    rep.q = (P.family == Family::HermitianSmall) ? Int(P.n) : Int(P.n) * P.n * P.n;
    rep.genus_formula = closed_form_genus(P);

    CurveSystem sys = emit_system(P);
    auto [p, k] = counting_field(P);
    auto F = FieldCtx::build_field(p, k);
    std::optional<TowerInst> ti;
    bool enumerable = F.enumerable() && F.size() <= (1ULL << 21);
    if (enumerable) {
        ti.emplace(sys, F);
        rep.genus_oracle = genus_via_hurwitz(*ti);
        if (rep.genus_formula && *rep.genus_formula != *rep.genus_oracle)
            throw ConsistencyError("formula and ramification genus disagree for " + P.describe());
    }
    if (rep.genus_formula)
        rep.genus = *rep.genus_formula;
    else if (rep.genus_oracle)
        rep.genus = *rep.genus_oracle;
    else
        throw ValidationError("no genus route available for " + P.describe());
    rep.bound = hasse_weil_bound(rep.q, rep.genus);

    if (enumerable) {
        try {
            CountResult cr = count_degree_one_places(*ti, opts);
            rep.N1 = cr.total;
            rep.counted = true;
            if (rep.N1 > rep.bound)
                rep.verdict = MaximalityReport::Verdict::BoundExceeded;
            else if (rep.N1 == rep.bound)
                rep.verdict = MaximalityReport::Verdict::Maximal;
            else
                rep.verdict = MaximalityReport::Verdict::NotMaximal;
        } catch (const BudgetExceeded&) {
            rep.verdict = MaximalityReport::Verdict::FormulaOnly;
        }
    } else {
        rep.verdict = MaximalityReport::Verdict::FormulaOnly;
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

}  // namespace gklab
