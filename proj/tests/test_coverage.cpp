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

#include "gklab/coverage.hpp"
#include "gklab/genus.hpp"
#include "gklab/maximality.hpp"

using namespace gklab;

TEST_CASE("cover bounds: GK at n = 2 against the Hermitian over F_64") {
    // counts 513 and 225 with genus pair (28, 10)
    CoverBounds b = cover_bounds(Int(513), Int(225), Int(28), Int(10));
    CHECK(b.L == Rat(513, 225));
    CHECK(b.U == Rat(3));
    CHECK(b.ceilL == 3);
    CHECK(b.floorU == 3);
    CHECK_FALSE(obstruction(b));  // GK at n = 2 is Hermitian-covered

    CoverBounds same = cover_bounds(Int(513), Int(513), Int(28), Int(28));
    CHECK(same.L == Rat(1));
    CHECK(same.U == Rat(1));
    CHECK_FALSE(obstruction(same));

    CoverBounds low = cover_bounds(Int(513), Int(81), Int(28), Int(1));
    CHECK_FALSE(low.U_defined);
    CHECK_THROWS_AS(obstruction(low), ValidationError);
}

TEST_CASE("unique-degree threshold by exact squaring") {
    // q = 8: f(8) is a little under 9, so g = 9 passes and g = 8 fails
    CHECK(above_unique_degree_threshold(Int(8), Int(9)));
    CHECK_FALSE(above_unique_degree_threshold(Int(8), Int(8)));
    CHECK_FALSE(above_unique_degree_threshold(Int(8), Int(0)));
    CHECK(above_unique_degree_threshold(Int(27), Int(99)));
}

TEST_CASE("scan at n = 17 reproduces the published non-covered genera") {
    auto rows = scan_table(17);
    // collect triples by genus
    std::set<std::array<long long, 3>> g1_triples, g2_triples;
    for (const auto& r : rows) {
        CHECK(r.obstructed);
        CHECK(r.ceilL > r.floorU);
        if (r.genus == 233416)
            g1_triples.insert({r.params.d1, r.params.d2, r.params.d3});
        if (r.genus == 233398)
            g2_triples.insert({r.params.d1, r.params.d2, r.params.d3});
    }
    const std::array<long long, 3> published[] = {
        {1, 18, 6},  {2, 9, 6},  {2, 18, 3}, {2, 18, 6}, {3, 18, 6},
        {6, 9, 6},   {6, 18, 3}, {6, 18, 6}, {9, 2, 6},  {9, 6, 6},
        {9, 18, 2},  {9, 18, 6}, {18, 1, 6}, {18, 2, 3}, {18, 2, 6},
        {18, 3, 6},  {18, 6, 3}, {18, 6, 6}, {18, 9, 2}, {18, 9, 6}};
    for (const auto& t : published) CHECK(g1_triples.count(t) == 1);
    CHECK(g2_triples.count({9, 18, 2}) == 1);
}

TEST_CASE("scan at n = 2 finds nothing (everything is covered)") {
    CHECK(scan_table(2).empty());
}

TEST_CASE("scan rows serialize to csv") {
    auto rows = scan_table(17);
    std::string csv = scan_rows_to_csv(rows);
    CHECK(csv.find("n,family,d1,d2,d3,e,genus,ceilL,floorU,obstructed") == 0);
    CHECK(csv.find("233416") != std::string::npos);
    CHECK(csv.find("233398") != std::string::npos);
}

TEST_CASE("certificate 63: exhaustive all-fail at (7,2) and (8,3)") {
    GaloisCertificate c = galois_cert_63(7, 2);
    CHECK(c.verdict);
    CHECK(c.candidate_degree == 14);
    CHECK(c.outcomes.size() == 2);  // u + 1 splits
    for (const auto& o : c.outcomes) CHECK(o.fails);
    CHECK(c.degree_unique);

    GaloisCertificate c83 = galois_cert_63(8, 3);
    CHECK(c83.verdict);
    CHECK(c83.outcomes.size() == 4);  // u = 3
    for (const auto& o : c83.outcomes) CHECK(o.fails);

    // k = 1 short-circuits to the GK curve itself
    GaloisCertificate c1 = galois_cert_63(9, 1);
    CHECK(c1.verdict);
    CHECK(c1.outcomes.empty());

    CHECK_THROWS_AS(galois_cert_63(5, 2), ValidationError);   // n < 7
    CHECK_THROWS_AS(galois_cert_63(8, 9), ValidationError);   // sqrt bound
    CHECK_THROWS_AS(galois_cert_63(7, 3), ValidationError);   // 3 does not divide 8
}

TEST_CASE("certificate 64: hypothesis arithmetic and the (13,2) run") {
    CHECK_THROWS_AS(galois_cert_64(23, 8), ValidationError);  // (n+1)/k = 3
    CHECK_THROWS_AS(galois_cert_64(23, 4), ValidationError);  // 3 | 6
    CHECK_THROWS_AS(galois_cert_64(11, 4), ValidationError);  // (n+1)/k = 3
    CHECK_THROWS_AS(galois_cert_64(11, 2), ValidationError);  // 3 | 6
    GaloisCertificate c = galois_cert_64(13, 2);
    CHECK(c.verdict);
    CHECK(c.outcomes.size() == 2);
    for (const auto& o : c.outcomes) {
        CHECK_FALSE(o.skipped);
        CHECK(o.fails);
    }

    auto adm = cert_64_admissible(30);
    CHECK(std::find(adm.begin(), adm.end(), std::pair<long long, long long>{13, 2}) != adm.end());
    for (auto [n, k] : adm) CHECK_NOTHROW(galois_cert_64(n, k));
}

TEST_CASE("certificate 65: frozen identity failures") {
    GaloisCertificate c = galois_cert_65(5, 2, 1);
    CHECK(c.verdict);
    CHECK(c.outcomes.size() == 2);
    // by hand: (v,w) = (0,1) gives 80 != 0, (1,0) gives -120 != -200
    CHECK(c.outcomes[0].detail.find("80") != std::string::npos);
    for (const auto& o : c.outcomes) CHECK(o.fails);

    CHECK(galois_cert_65(7, 1, 1).verdict);
    CHECK(galois_cert_65(8, 3, 1).verdict);  // branch 3: 3*1*(3-1-1) = 3 < 8

    CHECK_THROWS_AS(galois_cert_65(5, 2, 3), ValidationError);
    CHECK_THROWS_AS(galois_cert_65(5, 3, 1), ValidationError);   // no branch holds
    CHECK_THROWS_AS(galois_cert_65(7, 3, 1), ValidationError);   // 3 does not divide 8
}

TEST_CASE("degree uniqueness matches the threshold remark") {
    // certificate degrees sit above f(q), so ceil L = floor U there
    GaloisCertificate c = galois_cert_63(7, 2);
    Int q = ipow(Int(7), 3);
    Int g = genus_c1(7, 4, 1, 8);
    CHECK(above_unique_degree_threshold(q, g));
    CHECK(c.degree_unique);
}
