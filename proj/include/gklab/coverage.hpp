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

// Hermitian-coverage machinery: exact L/U covering-degree bounds, the
// non-coverage obstruction, and the non-Galois-coverage certificates.
// Every ceil/floor decision is exact-rational; square-root hypothesis
// bounds are decided by integer squaring.

struct CoverBounds {
    Rat L;           // |H(F_{q^2})| / |Y(F_{q^2})|
    Rat U;           // (2 g_H - 2) / (2 g_Y - 2), meaningful iff U_defined
    bool U_defined;  // requires g_Y >= 2
    Int ceilL;
    Int floorU;
    json to_json() const;
};

/// Requires N_Y >= 1; U is left undefined when g_Y <= 1.
CoverBounds cover_bounds(const Int& N_H, const Int& N_Y, const Int& g_H, const Int& g_Y);

/// ceil(L) > floor(U): no integer covering degree fits, so the curve is not
/// a subcover of the Hermitian curve. Requires U defined.
bool obstruction(const CoverBounds& b);

/// Exact comparison g > f(q) where f marks the genus above which a covering
/// degree, if any, is unique: decided as (2qg + q^2 + 1)^2 > q^5 + 2q^4 +
/// q^3 + q^2 + 2q + 1.
bool above_unique_degree_threshold(const Int& q, const Int& g);

struct ScanRow {
    CurveParams params;
    Int genus;
    Int ceilL;
    Int floorU;
    bool obstructed;
};

/// Sweeps every validated (d1, d2, d3) with e = n^2-n+1 for the given
/// families, computes genus and the obstruction from formula-level data
/// (N_Y from maximality, N_H = q^3 + 1), and returns rows. With
/// only_obstructed the returned rows are exactly the non-covered curves.
std::vector<ScanRow> scan_table(long long n,
                                const std::vector<Family>& families = {Family::C1, Family::C2,
                                                                       Family::C3},
                                bool only_obstructed = true, unsigned jobs = 0);

std::string scan_rows_to_csv(const std::vector<ScanRow>& rows);

/// One tested (v, w) split in a certificate.
struct VWOutcome {
    long long v, w;
    std::string detail;
    bool fails;          // divisibility / identity test fails as required
    bool skipped = false;  // zero denominator
};

struct GaloisCertificate {
    int theorem;  // 63, 64 or 65
    long long n;
    long long k = 0;
    long long gamma = 0, delta = 0;
    Int candidate_degree;
    std::vector<VWOutcome> outcomes;
    bool verdict;  // true: not Galois covered (every split fails)
    bool degree_unique = false;  // L > deg-1 and U < deg+1 re-derived exactly
    std::string note;
    json to_json() const;
};

/// d1 = (n+1)/k, d2 = 1, d3 = n+1. Hypotheses: n >= 7 prime power,
/// k | n+1, k < sqrt(n+1) + 1. Hypothesis violations raise ValidationError.
GaloisCertificate galois_cert_63(long long n, long long k);

/// d1 = (n+1)/k, d2 = n+1, d3 = 1. Hypotheses: n > 3, k | n+1,
/// 3 does not divide (n+1)/k, k < sqrt(n+1) + 1; n >= 23 when 3 | n+1.
GaloisCertificate galois_cert_64(long long n, long long k);

/// The (c, d) = ((n+1)/gamma, (n^2-n+1)/delta) quotient. One of the three
/// hypothesis branches must hold.
GaloisCertificate galois_cert_65(long long n, long long gamma, long long delta);

/// Admissible (n, k) pairs of the second certificate for n <= n_max; the
/// hypothesis set is thin and worth enumerating.
std::vector<std::pair<long long, long long>> cert_64_admissible(long long n_max);

}  // namespace gklab
