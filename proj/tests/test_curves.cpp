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

#include "gklab/curves.hpp"

using namespace gklab;

namespace {

const long long kPrimePowers[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32};

std::vector<long long> divisors(long long n) {
    std::vector<long long> out;
    for (long long d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

// independent evaluation of a factor's expanded monomial list
FieldElem eval_monomials(const FieldCtx& F, const std::vector<std::pair<long long, long long>>& ms,
                         const FieldElem& x) {
    FieldElem acc = F.zero();
    for (auto& [c, e] : ms) acc = F.add(acc, F.mul(F.scalar(c), F.pow(x, Int(e))));
    return acc;
}

}  // namespace

TEST_CASE("validate: divisibility constraints") {
    CurveParams ok{Family::C1, 5, 2, 3, 6, 21};
    CHECK(violations(ok).empty());
    CHECK(validate(ok).e == 21);

    CurveParams bad = ok;
    bad.d1 = 4;  // 4 does not divide 6
    auto v = violations(bad);
    REQUIRE(v.size() >= 1);
    CHECK(v[0].find("d1 = 4") != std::string::npos);
    CHECK_THROWS_AS(validate(bad), ValidationError);

    CurveParams xk{Family::XK, 5};
    xk.c = 3;
    xk.d = 7;
    CHECK(violations(xk).empty());

    CurveParams nn{Family::C1, 6};
    CHECK_FALSE(violations(nn).empty());  // 6 is not a prime power
}

TEST_CASE("compute_D and compute_M") {
    CHECK(compute_D(17, 18, 9) == 9);
    CHECK(compute_D(17, 1, 1) == 1);
    CHECK(compute_D(5, 1, 1) == 1);
    CHECK(compute_D(5, 6, 6) == 6);

    CHECK(compute_M(17, 18, 9, 2) == 3);
    CHECK(compute_M(5, 1, 3, 2) == 1);
    CHECK(compute_M(2, 3, 3, 3) == 3);
}

TEST_CASE("compute_M identity holds for all tuples up to n = 32") {
    for (long long n : kPrimePowers) {
        for (long long d1 : divisors(n + 1))
            for (long long d2 : divisors(n + 1))
                for (long long d3 : divisors(n + 1))
                    CHECK_NOTHROW(compute_M(n, d1, d2, d3));  // throws on mismatch
    }
}

TEST_CASE("covering degrees") {
    CHECK(covering_degree(CurveParams{Family::C1, 2, 3, 3, 3, 3}) == 1);
    CHECK(covering_degree(CurveParams{Family::XK, 2, 1, 1, 1, 0, 3, 3}) == 1);
    CurveParams xk5{Family::XK, 5};
    xk5.c = 1;
    xk5.d = 1;
    CHECK(covering_degree(xk5) == 126);
    CHECK(covering_degree(CurveParams{Family::GK_X, 7}) == 1);

    // C2 with maximal divisor tuple has degree (n+1)^2 / (n+1)^3 < 1
    CurveParams c2bad{Family::C2, 5, 6, 6, 6, 21};
    CHECK_THROWS_AS(covering_degree(c2bad), ValidationError);
}

TEST_CASE("covering degree is a positive integer on every validated tuple") {
    for (long long n : {2LL, 3LL, 4LL, 5LL, 7LL, 8LL}) {
        long long e2 = n * n - n + 1;
        for (Family fam : {Family::C1, Family::C2, Family::C3}) {
            for (long long d1 : divisors(n + 1))
                for (long long d2 : divisors(n + 1))
                    for (long long d3 : divisors(n + 1))
                        for (long long e : divisors(e2)) {
                            CurveParams P{fam, n, d1, d2, d3, e};
                            if (!violations(P).empty()) continue;
                            Int deg = covering_degree(P);
                            CHECK(deg >= 1);
                        }
        }
        for (long long c : divisors(n + 1))
            for (long long d : divisors(e2)) {
                CurveParams P{Family::XK, n};
                P.c = c;
                P.d = d;
                CHECK(covering_degree(P) >= 1);
            }
    }
}

TEST_CASE("degree-1 tuples exist per family") {
    for (long long n : {2LL, 3LL, 4LL, 5LL}) {
        long long e2 = n * n - n + 1;
        CHECK(covering_degree(CurveParams{Family::C1, n, n + 1, n + 1, n + 1, e2}) == 1);
        CurveParams xk{Family::XK, n};
        xk.c = n + 1;
        xk.d = e2;
        CHECK(covering_degree(xk) == 1);
    }
}

TEST_CASE("emit_system: XK shape") {
    CurveParams P{Family::XK, 5};
    P.c = 3;
    P.d = 7;
    CurveSystem S = emit_system(P);
    CHECK(S.tower.b == 6);
    CHECK(S.tower.m == 7);
    CHECK(S.tower.v_exp == 1);
    REQUIRE(S.tower.g.size() == 2);
    CHECK(S.tower.g[0].first.kind == FactorSpec::Kind::U);
    CHECK(S.tower.g[0].second == 3);
    CHECK(S.tower.g[1].first.kind == FactorSpec::Kind::PowMinusOne);
    CHECK(S.tower.g[1].first.T2 == 3);
    REQUIRE(S.tower.h.size() == 1);
    CHECK(S.tower.h[0].first.kind == FactorSpec::Kind::CycloRatio);
    CHECK(S.tower.h[0].first.T2 == 12);
    CHECK(S.tower.h[0].first.T1 == 3);
    // 1 + u^c + ... + u^{(n-2)c} has n-1 = 4 monomials
    CHECK(S.tower.h[0].first.expanded_monomials().size() == 4);
}

TEST_CASE("emit_system: C1 and the GK_X degenerate case coincide") {
    CurveSystem gk = emit_system(CurveParams{Family::GK_X, 3});
    CurveSystem c1 = emit_system(CurveParams{Family::C1, 3, 4, 4, 4, 7});
    CHECK(gk.tower.b == c1.tower.b);
    CHECK(gk.tower.m == c1.tower.m);
    CHECK(gk.tower.v_exp == c1.tower.v_exp);
    CHECK(gk.tower.m == 7);       // n^2 - n + 1
    CHECK(gk.tower.v_exp == 1);   // d2 / M = 1
    CHECK(gk.variables == std::vector<std::string>{"X", "Y", "Z"});
}

TEST_CASE("emit_system: n = 2 degeneracies collapse the ratio factor") {
    CurveSystem S = emit_system(CurveParams{Family::C1, 2, 3, 3, 3, 3});
    // (U^{d1(n-1)}-1)/(U^{d1}-1) = 1 at n = 2; only the U factor remains
    REQUIRE(S.tower.h.size() == 1);
    CHECK(S.tower.h[0].first.kind == FactorSpec::Kind::U);
    CHECK(S.tower.m == 3);
}

TEST_CASE("emit_system rejects inadmissible C1 exponents") {
    // M = 3 does not divide d3 * e = 1
    CHECK_THROWS_AS(emit_system(CurveParams{Family::C1, 2, 3, 3, 1, 1}), ValidationError);
}

TEST_CASE("curve system JSON round-trip") {
    for (CurveParams P : {CurveParams{Family::C1, 5, 2, 3, 6, 21},
                          CurveParams{Family::C2, 5, 6, 3, 2, 21},
                          CurveParams{Family::GK_C, 3},
                          CurveParams{Family::HermitianBig, 2}}) {
        CurveSystem S = emit_system(P);
        json j = S.to_json();
        CurveSystem back = CurveSystem::from_json(j);
        CHECK(back.params == S.params);
        CHECK(back.variables == S.variables);
        CHECK(back.to_json() == j);
    }
}

TEST_CASE("factor semantics match their monomial expansion") {
    auto F = FieldCtx::build_field(5, 6);
    FactorSpec ratio = FactorSpec::cyclo_ratio(12, 3);
    FactorSpec pmo = FactorSpec::pow_minus_one(6);
    for (uint64_t i = 1; i < 200; i += 7) {
        FieldElem x = F.elem_at(i);
        // ratio as (x^12 - 1)/(x^3 - 1) wherever the denominator is nonzero
        FieldElem den = F.sub(F.pow(x, Int(3)), F.one());
        if (!F.is_zero(den)) {
            FieldElem direct = F.div(F.sub(F.pow(x, Int(12)), F.one()), den);
            CHECK(eval_monomials(F, ratio.expanded_monomials(), x) == direct);
        }
        CHECK(eval_monomials(F, pmo.expanded_monomials(), x) ==
              F.sub(F.pow(x, Int(6)), F.one()));
    }
}

TEST_CASE("GK_C step-2 factor expands with unit coefficients") {
    for (long long n : {2LL, 3LL, 4LL, 5LL, 8LL, 9LL}) {
        CurveSystem S = emit_system(CurveParams{Family::GK_C, n});
        REQUIRE(S.tower.h.size() == 1);
        const FactorSpec& f = S.tower.h[0].first;
        CHECK(f.kind == FactorSpec::Kind::Generic);
        CHECK(f.degree() == n * (n - 1));
        for (auto& [c, e] : f.monomials) CHECK((c == 1 || c == -1));
    }
    // and the expansion really is (x^n + x)^{n-1} - 1 in the field
    auto F = FieldCtx::build_field(3, 6);
    CurveSystem S = emit_system(CurveParams{Family::GK_C, 3});
    for (uint64_t i = 0; i < 120; i += 11) {
        FieldElem x = F.elem_at(i);
        FieldElem t = F.add(F.pow(x, Int(3)), x);
        FieldElem direct = F.sub(F.mul(t, t), F.one());  // (x^3+x)^2 - 1
        CHECK(eval_monomials(F, S.tower.h[0].first.monomials, x) == direct);
    }
}

TEST_CASE("projectivity between the two GK models (exhaustive, n = 2, 3)") {
    CHECK(projectivity_check(2));
    CHECK(projectivity_check(3));
    CHECK_THROWS_AS(projectivity_check(5), ValidationError);
}

TEST_CASE("counting fields") {
    CHECK(counting_field(CurveParams{Family::GK_X, 2}) == std::pair<uint32_t, uint32_t>{2, 6});
    CHECK(counting_field(CurveParams{Family::HermitianSmall, 3}) ==
          std::pair<uint32_t, uint32_t>{3, 2});
    CHECK(counting_field(CurveParams{Family::HermitianBig, 4}) ==
          std::pair<uint32_t, uint32_t>{2, 12});
}
