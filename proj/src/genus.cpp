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

#include "gklab/genus.hpp"

#include <numeric>

namespace gklab {

namespace {

Int gg(const Int& a, const Int& b) { return igcd(a, b); }

void check_genus(const Int& g, const char* what) {
    if (g < 0) throw ConsistencyError(std::string("negative genus from ") + what);
}

}  // namespace

Int genus_base(long long a, long long b) {
    if (a < 1 || b < 1) throw ValidationError("genus_base: a, b >= 1");
    Int br = Int(a) * b - a - b - std::gcd(a, b);
    Int g = 1 + halve_even(br, "genus_base");
    check_genus(g, "genus_base");
    return g;
}

Int genus_c1(long long n, long long d1, long long d2, long long d3) {
    Int e2 = Int(n) * n - n + 1;
    Int M = compute_M(n, d1, d2, d3);
    Int m = exact_div(Int(d3) * e2, M, "genus_c1 m");
    Int A = exact_div(Int(d1), M, "genus_c1 d1/M");
    Int B = exact_div(Int(d2), M, "genus_c1 d2/M");
    Int np1M = exact_div(Int(n) + 1, M, "genus_c1 (n+1)/M");
    Int br = Int(d1) * d2 * m * (n - 1)      //
             - Int(d2) * gg(A, m)            //
             - Int(d1) * gg(B, m)            //
             - Int(d1) * d2 * (n - 2) * gg(m, np1M)  //
             - gg(gg(Int(d1), Int(d2)) * m, 2 * exact_div(Int(d1) * d2, M, "genus_c1 last"));
    Int g = 1 + halve_even(br, "genus_c1");
    check_genus(g, "genus_c1");
    return g;
}

Int genus_c23(long long n, long long h, long long k, long long d3) {
    Int r = Int(d3) * (Int(n) * n - n + 1);
    Int br = Int(h) * k * r * (n - 1)            //
             - Int(k) * gg(Int(h), r)            //
             - Int(h) * gg(Int(k), r)            //
             - Int(h) * k * (n - 2) * gg(r, Int(n) + 1)  //
             - gg(gg(Int(h), Int(k)) * r, 2 * Int(h) * k);
    Int g = 1 + halve_even(br, "genus_c23");
    check_genus(g, "genus_c23");
    return g;
}

Int genus_xk(long long n, long long c, long long d) {
    if (c < 1 || (n + 1) % c != 0) throw ValidationError("genus_xk: c must divide n+1");
    if (d < 1 || (n * n - n + 1) % d != 0)
        throw ValidationError("genus_xk: d must divide n^2-n+1");
    Int br = (Int(d) - 1) * n * n + n - d - std::gcd(2LL, (n + 1) / c);
    Int g = halve_even(Int(c) * br, "genus_xk") + 1;
    check_genus(g, "genus_xk");
    return g;
}

bool case_AB_admissible(long long n, long long d1, long long d2, long long d3) {
    uint32_t p = 0, u = 0;
    if (!prime_power(n, p, u)) return false;
    if ((n + 1) % d1 || (n + 1) % d2 || (n + 1) % d3) return false;
    if ((3 * d3) % d1 != 0) return false;
    if (std::gcd(d1, d2) != 1) return false;
    if ((n + 1) % (d1 * d2) != 0) return false;  // the group needs d1 d2 | n+1
    return true;
}

bool case_2_admissible(long long n, long long d1, long long d2, long long d3) {
    uint32_t p = 0, u = 0;
    if (!prime_power(n, p, u)) return false;
    if ((n + 1) % d2 || (n + 1) % d3) return false;
    if (d2 % d1 != 0) return false;
    if (std::gcd(d1, d3 * (n * n - n + 1)) != 1) return false;
    if ((n + 1) % (d1 * d3) != 0) return false;  // lambda exponent (n+1)/(d1 d3)
    return true;
}

Int genus_case_A(long long n, long long d1, long long d2, long long d3, Int* g_bar_out) {
    if (!case_AB_admissible(n, d1, d2, d3))
        throw ValidationError("genus_case_A: hypotheses d1 | 3d3, gcd(d1,d2)=1, d1d2 | n+1 fail");
    if (((n + 1) / d3) % 3 == 0)
        throw ValidationError("genus_case_A: requires 3 not dividing (n+1)/d3");
    Int D = Int(d1) * d2 * d3;
    long long q12 = (n + 1) / (d1 * d2);
    long long q3 = (n + 1) / d3;
    Int inner = Int(n) - 2 - q3 - std::gcd(q12, q3) - std::gcd(q12, 2 * q3) + 3;
    Int g_bar = 1 + exact_div(D * inner, 2 * (Int(n) + 1), "genus_case_A g_bar");
    if (g_bar_out) *g_bar_out = g_bar;
    Int inner2 = Int(n) + 1 - q3 - std::gcd(q12, q3) - std::gcd(q12, 2 * q3);
    Int g = 1 + exact_div(D * inner2, 2 * (Int(n) + 1), "genus_case_A") +
            halve_even(D * (Int(n) * n * n - 2 * Int(n) * n + n), "genus_case_A tail");
    check_genus(g, "genus_case_A");
    return g;
}

Int genus_case_B(long long n, long long d1, long long d2, long long d3) {
    if (!case_AB_admissible(n, d1, d2, d3))
        throw ValidationError("genus_case_B: hypotheses d1 | 3d3, gcd(d1,d2)=1, d1d2 | n+1 fail");
    if (((n + 1) / d3) % 3 != 0)
        throw ValidationError("genus_case_B: requires 3 | (n+1)/d3");
    Int D = Int(d1) * d2 * d3;
    long long q12 = (n + 1) / (d1 * d2);
    long long q3 = (n + 1) / (3 * d3);
    Int inner = Int(n) + 1 - q3 - std::gcd(q12, q3) - std::gcd(q12, 2 * q3);
    Int g = 1 + exact_div(3 * D * inner, 2 * (Int(n) + 1), "genus_case_B") +
            halve_even(D * (Int(n) * n * n - 2 * Int(n) * n - n + 2), "genus_case_B tail");
    check_genus(g, "genus_case_B");
    return g;
}

Int genus_case_2(long long n, long long d1, long long d2, long long d3) {
    if (!case_2_admissible(n, d1, d2, d3))
        throw ValidationError(
            "genus_case_2: hypotheses d1 | d2, gcd(d1, d3(n^2-n+1))=1, d1d3 | n+1 fail");
    long long m = std::gcd(3LL, (n + 1) / (d1 * d3));
    Int D = Int(d1) * d2 * d3;
    long long q2 = (n + 1) / d2;
    long long q13 = (n + 1) / (d1 * d3 * m);
    if ((n + 1) % (d1 * d3 * m) != 0)
        throw ValidationError("genus_case_2: d1 d3 m does not divide n+1");
    Int inner = Int(n) + 1 - q13 - std::gcd(q2, q13) - std::gcd(q2, 2 * q13);
    Int g = 1 + exact_div(D * m * inner, 2 * (Int(n) + 1), "genus_case_2") +
            halve_even(D * (Int(n) * n * n - 2 * Int(n) * n + (2 - m) * n + m - 1),
                       "genus_case_2 tail");
    check_genus(g, "genus_case_2");
    return g;
}

Int genus_prop_fg(const TameGroupData& data, long long n) {
    if (data.order_L < 1 || data.order_L_Lambda < 1)
        throw ValidationError("genus_prop_fg: group orders must be positive");
    Int e2 = Int(n) * n - n + 1;
    if (e2 % data.order_L_Lambda != 0 ||
        (data.order_L % data.order_L_Lambda != 0))
        throw ValidationError("genus_prop_fg: |L_Lambda| must divide n^2-n+1 and |L|");
    Int n3p1 = Int(n) * n * n + 1;
    Int num = n3p1 * (Int(n) * n - data.order_L_Lambda - 1) -
              data.order_L_Lambda * (Int(n) * n - n - 2);
    Int g = data.genus_bar + exact_div(num, 2 * data.order_L, "genus_prop_fg");
    check_genus(g, "genus_prop_fg");
    return g;
}

Rat genus_gsx(long long p, long long u, long long v, long long w, const Int& k) {
    if (u != v + w || v < 0 || w < 0) throw ValidationError("genus_gsx: need u = v + w >= 0");
    if (k < 1) throw ValidationError("genus_gsx: k >= 1");
    Int P5 = ipow(Int(p), (unsigned long long)(5 * u));
    Int P3v = ipow(Int(p), (unsigned long long)(3 * u - v));
    Int P3w = ipow(Int(p), (unsigned long long)(3 * u - w));
    Int num = P5 - P3v - (k - 1) * P3w + k - 1;
    return Rat(num, 2 * k);
}

Int genus_hermitian(const Int& q) { return halve_even(q * (q - 1), "genus_hermitian"); }

Int genus_gk(long long n) { return genus_c1(n, n + 1, n + 1, n + 1); }

std::optional<Int> closed_form_genus(const CurveParams& raw) {
    CurveParams P = validate(raw);
    long long n = P.n;
    long long e2 = n * n - n + 1;
    switch (P.family) {
        case Family::GK_C:
        case Family::GK_X: return genus_gk(n);
        case Family::C1:
        case Family::XH:
            if (P.e != e2) return std::nullopt;
            return genus_c1(n, P.d1, P.d2, P.d3);
        case Family::C2: {
            if (P.e != e2) return std::nullopt;
            long long M = (long long)compute_M(n, P.d1, P.d2, P.d3);
            return genus_c23(n, P.d1 / M, P.d2, P.d3);
        }
        case Family::C3: {
            if (P.e != e2) return std::nullopt;
            long long M = (long long)compute_M(n, P.d1, P.d2, P.d3);
            return genus_c23(n, P.d1, P.d2 / M, P.d3);
        }
        case Family::XK: return genus_xk(n, P.c, P.d);
        case Family::HermitianSmall: return genus_hermitian(Int(n));
        case Family::HermitianBig: return genus_hermitian(Int(n) * n * n);
    }
    return std::nullopt;
}

}  // namespace gklab
