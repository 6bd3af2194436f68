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

#include <doctest.h>

#include <set>

#include "gklab/genus.hpp"
#include "gklab/maximality.hpp"
#include "gklab/spectrum.hpp"

using namespace gklab;

TEST_CASE("spectrum at n = 5 contains the twenty published genera") {
    SpectrumReport rep = enumerate_genera(5);
    std::set<Int> got;
    for (const auto& e : rep.entries) {
        CHECK_FALSE(e.realized_by.empty());
        got.insert(e.genus);
    }
    const long long published[] = {37,  74,  109, 121, 148, 220, 242, 361, 442, 484,
                                   724, 1450, 160, 233, 469, 478, 496, 737, 1477, 1486};
    for (long long g : published) CHECK(got.count(Int(g)) == 1);
    // strictly increasing
    for (size_t i = 1; i < rep.entries.size(); ++i)
        CHECK(rep.entries[i - 1].genus < rep.entries[i].genus);
    // ceiling: nothing beyond the Hermitian maximum
    Int cap = genus_hermitian(Int(125));
    for (const auto& e : rep.entries) {
        CHECK(e.genus >= 0);
        CHECK(e.genus <= cap);
    }
}

TEST_CASE("spectrum at n = 2 contains the GK genus and the elliptic value") {
    SpectrumReport rep = enumerate_genera(2);
    std::set<Int> got(rep.genera().begin(), rep.genera().end());
    CHECK(got.count(Int(10)) == 1);
    CHECK(got.count(Int(1)) == 1);
}

TEST_CASE("all-divisors policy extends the full sweep") {
    SpectrumReport full = enumerate_genera(2, {Family::C1, Family::C2, Family::C3, Family::XK},
                                           EPolicy::Full);
    SpectrumReport all = enumerate_genera(2, {Family::C1, Family::C2, Family::C3, Family::XK},
                                          EPolicy::AllDivisors);
    std::set<Int> f(full.genera().begin(), full.genera().end());
    std::set<Int> a(all.genera().begin(), all.genera().end());
    for (const auto& g : f) CHECK(a.count(g) == 1);
    CHECK(a.size() >= f.size());
}

TEST_CASE("spectrum report round-trips through json") {
    SpectrumReport rep = enumerate_genera(3);
    json j = rep.to_json();
    CHECK(j.at("n") == 3);
    CHECK(j.at("genera").size() == rep.entries.size());
    // every entry keeps at least one realizing tuple that re-parses
    for (const auto& je : j.at("genera")) {
        REQUIRE(je.at("realized_by").size() >= 1);
        CurveParams P = CurveParams::from_json(je.at("realized_by")[0]);
        CHECK(violations(P).empty());
    }
}

TEST_CASE("verify_maximal: small exhaustive cases") {
    MaximalityReport r = verify_maximal(CurveParams{Family::GK_X, 2});
    CHECK(r.verdict == MaximalityReport::Verdict::Maximal);
    CHECK(r.genus == 10);
    CHECK(r.N1 == 225);
    CHECK(r.counted);
    CHECK(r.genus_oracle.has_value());
    CHECK(*r.genus_oracle == 10);

    MaximalityReport rc = verify_maximal(CurveParams{Family::C3, 2, 1, 1, 1, 3});
    CHECK(rc.verdict == MaximalityReport::Verdict::Maximal);
    CHECK(rc.genus == 1);
    CHECK(rc.N1 == 81);
    CHECK_FALSE(rc.genus_formula.has_value());  // proper divisor e, engine only

    MaximalityReport rh = verify_maximal(CurveParams{Family::HermitianBig, 2});
    CHECK(rh.verdict == MaximalityReport::Verdict::Maximal);
    CHECK(rh.N1 == 513);

    json j = r.to_json();
    CHECK(j.at("verdict") == "maximal");
    CHECK(j.at("N1") == 225);
}

TEST_CASE("hasse_weil_bound") {
    CHECK(hasse_weil_bound(Int(8), Int(10)) == 225);
    CHECK(hasse_weil_bound(Int(5), Int(0)) == 26);
    CHECK(hasse_weil_bound(Int(27), Int(99)) == 6076);
}

TEST_CASE("formula-only verdict for fields beyond the enumeration budget") {
    MaximalityReport r = verify_maximal(CurveParams{Family::C1, 17, 1, 18, 6, 273});
    CHECK(r.verdict == MaximalityReport::Verdict::FormulaOnly);
    CHECK_FALSE(r.counted);
    CHECK(r.genus == 233416);
    CHECK(r.to_json().at("N1").is_null());
}
