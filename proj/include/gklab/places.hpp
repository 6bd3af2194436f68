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
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gklab/curves.hpp"
#include "gklab/ffield.hpp"

namespace gklab {

// Independent verification engine: exact two-step Kummer tower analysis of
// an emitted curve system over F_{q^2}. Everything here works with the
// factored tower form; residues at ramified branches and at infinity come
// out in closed form as monomial-unit values, so no series expansions are
// needed anywhere.

/// Splitting data of W^m = t^v * (unit with reduced residue u0) over a
/// rational place: d places of residue degree gcd-determined, each with
/// ramification e2 = m/d; they are rational iff u0 is a d-th power.
struct KummerFiber {
    long long d;               // gcd(m, v)
    long long rational_count;  // d or 0
    long long e2;              // m / d
};

/// Requires gcd(m, p) = 1, m | q^2 - 1 and u0 != 0.
KummerFiber kummer_fiber(const FieldCtx& F, long long m, long long v, const FieldElem& u0);

/// A base point of the u-line: either a field element or the pole of u.
struct BasePoint {
    bool at_infinity = false;
    FieldElem a;  // meaningful when finite
    std::string label;
};

/// One Kummer branch over a base point, step-1 and step-2 data combined.
struct BranchRec {
    long long e1 = 1;            // step-1 ramification
    long long v_h = 0;           // valuation of h along the branch
    bool rational = false;       // step-1 place rational over F_{q^2}
    FieldElem psi;               // branch label: the r-th root of the g-unit
    FieldElem u0;                // reduced residue of h at the branch
    long long d = 1;             // gcd(m, v_h)
    long long e2 = 1;            // m / d
    long long rational_places = 0;  // degree-one places above this branch
};

struct FiberProfile {
    BasePoint base;
    long long step1_classes = 0;   // number of places over the base (closure)
    bool step1_rational = false;   // those places are rational
    std::vector<BranchRec> branches;
    long long rational_total = 0;  // degree-one places of the full tower here
};

/// The tower of a curve system instantiated over a concrete field, with
/// factor roots resolved and indexed. Immutable once built.
class TowerInst {
public:
    TowerInst(const CurveSystem& sys, const FieldCtx& F);

    const CurveSystem& system() const { return sys_; }
    const FieldCtx& field() const { return *F_; }
    long long b() const { return sys_.tower.b; }
    long long m() const { return sys_.tower.m; }

    /// Roots of g, roots and poles of every factor of h, and infinity.
    const std::vector<BasePoint>& special_base_points() const { return specials_; }
    bool is_special_index(uint64_t idx) const { return special_idx_.count(idx) > 0; }

    FiberProfile fiber_profile(const BasePoint& base) const;

    struct FactorInst {
        FactorSpec spec;
        long long exponent;
        long long degree;
        std::unordered_set<uint64_t> roots;  // all of them, simple and rational
        FieldElem lead;                      // leading coefficient
    };
    const std::vector<FactorInst>& g_factors() const { return g_; }
    const std::vector<FactorInst>& h_factors() const { return h_; }

    FieldElem eval_factor(const FactorInst& f, const FieldElem& a) const;
    /// Value of f / (u - a)^{ord_a f} at a (the unit left after stripping
    /// the vanishing part; equals f(a) away from roots).
    FieldElem unit_value(const FactorInst& f, const FieldElem& a) const;

private:
    struct LocalData {
        long long vg, r, e1, w, vh;
        FieldElem g_unit, h_unit;
    };
    LocalData local_data(const BasePoint& base) const;

    CurveSystem sys_;
    const FieldCtx* F_;
    std::vector<FactorInst> g_, h_;
    std::vector<BasePoint> specials_;
    std::unordered_set<uint64_t> special_idx_;

    friend Int genus_via_hurwitz(const TowerInst&);
};

/// Riemann-Hurwitz genus of the tower over the algebraic closure, computed
/// from ramification alone. Independent of every closed-form gcd formula.
Int genus_via_hurwitz(const TowerInst& ti);
Int genus_via_hurwitz(const CurveSystem& sys);

struct CountOptions {
    unsigned jobs = 0;        // 0 = hardware concurrency
    long long budget_ms = 0;  // 0 = unlimited
};

struct CountResult {
    Int total;        // N1, degree-one places over F_{q^2}
    Int affine;       // places over finite base points
    Int at_infinity;  // places over the pole of u
};

/// Exact degree-one place count over F_{q^2}: generic base points by direct
/// root counting, special ones through the fiber machinery. The two regimes
/// partition the base line exactly.
CountResult count_degree_one_places(const TowerInst& ti, const CountOptions& opts = {});

/// Builds the field and tower for the params' counting field, then counts.
CountResult count_degree_one_places(const CurveParams& params, const CountOptions& opts = {});

/// A group of places sharing one multiplicity in a divisor.
struct DivisorTerm {
    std::string label;
    long long count = 0;  // how many places in the group
    Int multiplicity;
};

struct Divisor {
    std::vector<DivisorTerm> terms;
    std::string note;
    Int degree() const;
    json to_json() const;
};

/// The principal divisor of u^{d1} (u^{d1}-1) ((u^{d1(n-1)}-1)/(u^{d1}-1))^{n+1}
/// on the curve V^{d2} = U^{d1} - 1, written exactly in the published shape.
/// Always of degree zero. When the published count of places over infinity
/// differs from the Kummer-theoretic one the divisor carries a note.
Divisor principal_divisor_alpha(long long n, long long d1, long long d2);

}  // namespace gklab
