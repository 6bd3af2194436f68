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

#include <optional>
#include <string>
#include <vector>

#include "gklab/ffield.hpp"
#include "gklab/ints.hpp"
#include "gklab/jsonio.hpp"

namespace gklab {

enum class Family {
    GK_C,            // original model on the cone X^n + X
    GK_X,            // transformed model on the cone X^{n+1} - 1
    C1,
    C2,
    C3,
    XH,              // C1 with e = n^2 - n + 1, kept as its own tag
    XK,              // two-parameter quotient family (c, d)
    HermitianSmall,  // Y^{n+1} = X^{n+1} - 1 over F_{n^2}
    HermitianBig     // Y^{n^3+1} = X^{n^3} + X over F_{n^6}
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

/// Parameters of a curve family member. Which fields matter depends on the
/// family: (d1,d2,d3,e) for C1/C2/C3/XH, (c,d) for XK, only n otherwise.
struct CurveParams {
    Family family = Family::GK_X;
    long long n = 0;
    long long d1 = 1, d2 = 1, d3 = 1;
    long long e = 0;  // 0 means "full", i.e. e = n^2 - n + 1
    long long c = 1, d = 1;

    bool operator==(const CurveParams&) const = default;
    json to_json() const;
    static CurveParams from_json(const json& j);
    std::string describe() const;
};

/// Prime-power decomposition n = p^u; false when n is not a prime power.
bool prime_power(long long n, uint32_t& p, uint32_t& u);

/// All violated constraints of the parameter tuple (empty when valid).
std::vector<std::string> violations(const CurveParams& params);

/// Returns the params with e defaulted, or throws ValidationError listing
/// every violated constraint.
CurveParams validate(CurveParams params);

/// D = gcd(d1, d2, n+1, d1*d2*n*(n-1)/gcd(d2, 2*d1))
Int compute_D(long long n, long long d1, long long d2);

/// M = gcd(d1, d2, d3*(n^2-n+1)); also evaluated as gcd(D, d3*(n^2-n+1))
/// and the two are asserted equal.
Int compute_M(long long n, long long d1, long long d2, long long d3);

/// Degree of the covering GK -> member curve; throws ValidationError when
/// the parameter combination makes it non-integral.
Int covering_degree(const CurveParams& params);

/// A single polynomial factor in u. Everything the ramification engine
/// needs about it (roots, degree, unit values) follows from the kind.
struct FactorSpec {
    enum class Kind { One, U, PowMinusOne, CycloRatio, Generic };
    Kind kind = Kind::One;
    long long T1 = 0;  // CycloRatio denominator exponent
    long long T2 = 0;  // PowMinusOne / CycloRatio numerator exponent
    std::vector<std::pair<long long, long long>> monomials;  // Generic: (coeff, exp)

    long long degree() const;
    /// Dense list of (coeff, exponent) pairs, coefficients in {0, +-1}
    /// except for Generic factors which carry their own coefficients.
    std::vector<std::pair<long long, long long>> expanded_monomials() const;
    json to_json() const;
    static FactorSpec from_json(const json& j);

    static FactorSpec one();
    static FactorSpec u();
    static FactorSpec pow_minus_one(long long T);
    static FactorSpec cyclo_ratio(long long T2, long long T1);  // collapses to One if equal
    static FactorSpec generic(std::vector<std::pair<long long, long long>> monomials);
};

/// Two-step Kummer tower:  V^b = prod g_i(U)^{e_i},
///                         S^m = V^{v_exp} * prod h_i(U)^{e_i}.
struct TowerSpec {
    long long b = 1;
    std::vector<std::pair<FactorSpec, long long>> g;
    long long m = 1;
    long long v_exp = 0;
    std::vector<std::pair<FactorSpec, long long>> h;

    json to_json() const;
    static TowerSpec from_json(const json& j);
};

/// Emitted defining system of a family member: variables, the tower form,
/// and the flat equation list (derived from the tower, same shape as the
/// published displays).
struct CurveSystem {
    CurveParams params;
    std::vector<std::string> variables;
    TowerSpec tower;

    /// Tame-exponent sanity: b and m coprime to p and dividing n^3 + 1
    /// (n^2 - 1 resp. n^6 - 1 for the Hermitian models).
    void check_invariants() const;

    json to_json() const;
    static CurveSystem from_json(const json& j);
};

CurveSystem emit_system(const CurveParams& params);

/// Cardinality of the field the member curve is counted over, as (p, k):
/// F_{n^2} for HermitianSmall, F_{n^6} for everything else.
std::pair<uint32_t, uint32_t> counting_field(const CurveParams& params);

/// The 4x4 matrix of the projectivity between the two GK models, entries
/// in F_{n^2} embedded into the given field.
struct ProjectivityA {
    std::vector<FieldElem> a;  // row-major 4x4
    std::vector<FieldElem> a_inv;
};

ProjectivityA build_projectivity(const FieldCtx& big, const FieldCtx& sub, long long n);

/// Exhaustively checks that the projectivity maps the affine rational point
/// set of the X^n + X model onto the X^{n+1} - 1 model and back (points
/// pushed to the hyperplane at infinity are checked against the projective
/// closures). n <= 4.
bool projectivity_check(long long n);

}  // namespace gklab
