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

#include "gklab/spectrum.hpp"

#include <map>
#include <thread>

#include "gklab/genus.hpp"
#include "gklab/places.hpp"

namespace gklab {

std::vector<Int> SpectrumReport::genera() const {
    std::vector<Int> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.genus);
    return out;
}

json SpectrumReport::to_json() const {
    json entries_j = json::array();
    for (const auto& e : entries) {
        json tuples = json::array();
        for (const auto& P : e.realized_by) tuples.push_back(P.to_json());
        entries_j.push_back(json{{"genus", int_to_json(e.genus)}, {"realized_by", tuples}});
    }
    return json{{"n", n},
                {"e_policy", policy == EPolicy::Full ? "full" : "all-divisors"},
                {"genera", entries_j}};
}

SpectrumReport enumerate_genera(long long n, const std::vector<Family>& families, EPolicy policy,
                                unsigned jobs) {
    uint32_t p = 0, u = 0;
    if (!prime_power(n, p, u)) throw ValidationError("enumerate_genera: n is not a prime power");
    long long e2 = n * n - n + 1;

    std::vector<long long> divs, ediv;
    for (long long d = 1; d <= n + 1; ++d)
        if ((n + 1) % d == 0) divs.push_back(d);
    for (long long d = 1; d <= e2; ++d)
        if (e2 % d == 0) ediv.push_back(d);

    std::vector<CurveParams> tuples;
    for (Family fam : families) {
        if (fam == Family::XK) {
            for (long long c : divs)
                for (long long d : ediv) {
                    CurveParams P{fam, n};
                    P.c = c;
                    P.d = d;
                    if (violations(P).empty()) tuples.push_back(P);
                }
            continue;
        }
        std::vector<long long> es =
            policy == EPolicy::Full ? std::vector<long long>{e2} : ediv;
        for (long long d1 : divs)
            for (long long d2 : divs)
                for (long long d3 : divs)
                    for (long long e : es) {
                        CurveParams P{fam, n, d1, d2, d3, e};
                        if (violations(P).empty()) tuples.push_back(P);
                    }
    }

    std::vector<Int> genera(tuples.size());
    unsigned njobs = jobs ? jobs : std::thread::hardware_concurrency();
    if (njobs == 0) njobs = 1;
    njobs = std::min<unsigned>(njobs, 32);
    // the all-divisors policy goes through the ramification engine, which
    // builds one field per call; share it by staying single-threaded
    if (policy == EPolicy::AllDivisors) njobs = 1;
    std::optional<FieldCtx> engine_field;
    auto work = [&](unsigned t) {
        for (size_t i = t; i < tuples.size(); i += njobs) {
            CurveParams P = validate(tuples[i]);
            auto g = closed_form_genus(P);
            if (g) {
                genera[i] = *g;
                continue;
            }
            CurveSystem sys = emit_system(P);
            if (!engine_field) {
                auto [fp, fk] = counting_field(P);
                engine_field.emplace(FieldCtx::build_field(fp, fk));
            }
            genera[i] = genus_via_hurwitz(TowerInst(sys, *engine_field));
        }
    };
    if (njobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < njobs; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    std::map<Int, std::vector<CurveParams>> by_genus;
    for (size_t i = 0; i < tuples.size(); ++i) by_genus[genera[i]].push_back(tuples[i]);

    SpectrumReport rep;
    rep.n = n;
    rep.policy = policy;
    for (auto& [g, realizers] : by_genus) rep.entries.push_back(SpectrumEntry{g, realizers});
    return rep;
}

}  // namespace gklab
