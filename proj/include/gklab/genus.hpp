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

// Closed-form genus formulas, all in exact big-integer arithmetic. Brackets
// are asserted even before halving and quotients asserted exact, so a
// transcription slip fails loudly instead of rounding.

/// g of the base extension V^b = U^a - 1:  1 + (ab - a - b - gcd(a,b))/2.
Int genus_base(long long a, long long b);

/// First family, full second-step exponent (e = n^2 - n + 1).
Int genus_c1(long long n, long long d1, long long d2, long long d3);

/// Second and third family in the (h, k) normal form: h is the U-exponent,
/// k the V-exponent (C2: h = d1/M, k = d2; C3: h = d1, k = d2/M).
Int genus_c23(long long n, long long h, long long k, long long d3);

Int genus_xk(long long n, long long c, long long d);

/// Quotient genus by the explicit group of the d1 | 3d3 case, the branch
/// with 3 not dividing (n+1)/d3. Also exposes the intermediate Hermitian
/// quotient genus when `g_bar_out` is non-null.
Int genus_case_A(long long n, long long d1, long long d2, long long d3, Int* g_bar_out = nullptr);

/// Same case, branch with 3 | (n+1)/d3.
Int genus_case_B(long long n, long long d1, long long d2, long long d3);

/// The d1 | d2 case with gcd(d1, d3(n^2-n+1)) = 1.
Int genus_case_2(long long n, long long d1, long long d2, long long d3);

/// True when (n, d1, d2, d3) satisfies the hypotheses of the explicit-group
/// genus computations; branch A/B selected by the divisibility of
/// (n+1)/d3 by 3.
bool case_AB_admissible(long long n, long long d1, long long d2, long long d3);
bool case_2_admissible(long long n, long long d1, long long d2, long long d3);

/// Tame-quotient bookkeeping for the fixed-point-free projection argument.
struct TameGroupData {
    Int order_L;         // |L|
    Int order_L_Lambda;  // |L ∩ Λ|, divides n^2 - n + 1 and |L|
    Int genus_bar;       // genus of the Hermitian quotient H / bar L
};

/// g_L = g_bar + [(n^3+1)(n^2 - |L_Λ| - 1) - |L_Λ|(n^2 - n - 2)] / (2|L|).
Int genus_prop_fg(const TameGroupData& data, long long n);

/// Hermitian-subgroup quotient genus (p^{5u} - p^{3u-v} - (k-1) p^{3u-w}
/// + k - 1) / (2k) with u = v + w; exact rational, integrality NOT
/// asserted (the non-coverage arguments hinge on it failing).
Rat genus_gsx(long long p, long long u, long long v, long long w, const Int& k);

Int genus_hermitian(const Int& q);

/// Genus of the GK curve over F_{n^6}, obtained through the degree-1
/// parameter tuple (never hard-coded).
Int genus_gk(long long n);

/// Closed-form genus for a validated parameter tuple, when one applies
/// (C1/C2/C3/XH with e = n^2-n+1, XK, GK models, Hermitians). Returns
/// nothing for proper divisors e, where only the ramification engine can
/// answer.
std::optional<Int> closed_form_genus(const CurveParams& params);

}  // namespace gklab
