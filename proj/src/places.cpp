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

#include "gklab/places.hpp"

#include <chrono>
#include <numeric>
#include <thread>

namespace gklab {

namespace {

long long llgcd(long long a, long long b) { return std::gcd(std::llabs(a), std::llabs(b)); }

// x*a + y*b = gcd(a,b) for signed a, b (a > 0 here)
void extgcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return;
    }
    long long x1, y1;
    extgcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
}

}  // namespace

KummerFiber kummer_fiber(const FieldCtx& F, long long m, long long v, const FieldElem& u0) {
    if (m < 1 || std::gcd((long long)F.p(), m) != 1)
        throw ValidationError("kummer_fiber: wild or non-positive exponent");
    if ((F.cardinality() - 1) % m != 0)
        throw ValidationError("kummer_fiber: field does not contain the m-th roots of unity");
    if (F.is_zero(u0)) throw ValidationError("kummer_fiber: zero residue");
    KummerFiber out;
    out.d = llgcd(m, v);
    out.e2 = m / out.d;
    out.rational_count = F.is_dth_power(u0, out.d) ? out.d : 0;
    return out;
}

// ---------------------------------------------------------------------------
// tower instantiation

TowerInst::TowerInst(const CurveSystem& sys, const FieldCtx& F) : sys_(sys), F_(&F) {
    sys_.check_invariants();
    Int q1 = F.cardinality() - 1;
    for (long long ex : {b(), m()})
        if (q1 % ex != 0)
            throw ValidationError("tower exponent roots of unity not contained in the field");

    auto instantiate = [&](const std::vector<std::pair<FactorSpec, long long>>& fs,
                           std::vector<FactorInst>& out) {
        for (const auto& [spec, e] : fs) {
            FactorInst fi;
            fi.spec = spec;
            fi.exponent = e;
            fi.degree = spec.degree();
            fi.lead = F.one();
            switch (spec.kind) {
                case FactorSpec::Kind::One: break;
                case FactorSpec::Kind::U: fi.roots.insert(F.index_of(F.zero())); break;
                case FactorSpec::Kind::PowMinusOne:
                    for (const auto& z : F.roots_of_unity(spec.T2)) fi.roots.insert(F.index_of(z));
                    break;
                case FactorSpec::Kind::CycloRatio: {
                    FieldElem zeta = F.primitive_root_of_unity(spec.T2);
                    long long skip = spec.T2 / spec.T1;
                    FieldElem z = F.one();
                    for (long long j = 0; j < spec.T2; ++j) {
                        if (j % skip != 0) fi.roots.insert(F.index_of(z));
                        z = F.mul(z, zeta);
                    }
                    break;
                }
                case FactorSpec::Kind::Generic: {
                    if (!F.enumerable() || F.size() > (1ULL << 21))
                        throw ValidationError("generic factor root scan over this field exceeds the budget");
                    long long lead_exp = -1;
                    for (auto& [c, ex2] : spec.monomials)
                        if (c % F.p() != 0 && ex2 > lead_exp) lead_exp = ex2;
                    for (auto& [c, ex2] : spec.monomials)
                        if (ex2 == lead_exp) fi.lead = F.scalar(c);
                    for (uint64_t i = 0; i < F.size(); ++i) {
                        FieldElem a = F.elem_at(i);
                        if (F.is_zero(eval_factor(fi, a))) {
                            // repeated-root guard: simple roots only
                            FieldElem der = F.zero();
                            for (auto& [c, ex2] : spec.monomials) {
                                if (ex2 == 0) continue;
                                der = F.add(der, F.mul(F.scalar(c * (ex2 % F.p())),
                                                       F.pow(a, Int(ex2 - 1))));
                            }
                            if (F.is_zero(der))
                                throw ConsistencyError("generic factor has a repeated root");
                            fi.roots.insert(i);
                        }
                    }
                    break;
                }
            }
            if ((long long)fi.roots.size() != fi.degree)
                throw ConsistencyError("factor is not split with simple rational roots over F_{q^2}");
            out.push_back(std::move(fi));
        }
    };
    instantiate(sys_.tower.g, g_);
    instantiate(sys_.tower.h, h_);

    // special base points: roots of g, roots of h factors, and infinity
    std::unordered_map<uint64_t, std::string> seen;
    auto add_roots = [&](const std::vector<FactorInst>& fs, bool step1) {
        for (const auto& fi : fs) {
            for (uint64_t idx : fi.roots) {
                if (seen.count(idx)) continue;
                std::string label;
                if (idx == F.index_of(F.zero()))
                    label = "P_0";
                else if (step1)
                    label = "P_alpha[" + std::to_string(idx) + "]";
                else
                    label = "P_beta[" + std::to_string(idx) + "]";
                seen.emplace(idx, label);
                specials_.push_back(BasePoint{false, F.elem_at(idx), label});
            }
        }
    };
    add_roots(g_, true);
    add_roots(h_, false);
    specials_.push_back(BasePoint{true, F.zero(), "P_inf"});
    for (auto& [idx, lab] : seen) special_idx_.insert(idx);
}

FieldElem TowerInst::eval_factor(const FactorInst& f, const FieldElem& a) const {
    const FieldCtx& F = *F_;
    switch (f.spec.kind) {
        case FactorSpec::Kind::One: return F.one();
        case FactorSpec::Kind::U: return a;
        case FactorSpec::Kind::PowMinusOne: return F.sub(F.pow(a, Int(f.spec.T2)), F.one());
        case FactorSpec::Kind::CycloRatio: {
            FieldElem den = F.sub(F.pow(a, Int(f.spec.T1)), F.one());
            if (!F.is_zero(den))
                return F.div(F.sub(F.pow(a, Int(f.spec.T2)), F.one()), den);
            // removable: (T2/T1) * a^{T2-T1}
            return F.mul(F.scalar(f.spec.T2 / f.spec.T1), F.pow(a, Int(f.spec.T2 - f.spec.T1)));
        }
        case FactorSpec::Kind::Generic: {
            FieldElem acc = F.zero();
            for (auto& [c, e] : f.spec.monomials)
                acc = F.add(acc, F.mul(F.scalar(c), F.pow(a, Int(e))));
            return acc;
        }
    }
    return F.one();
}

FieldElem TowerInst::unit_value(const FactorInst& f, const FieldElem& a) const {
    const FieldCtx& F = *F_;
    if (!f.roots.count(F.index_of(a))) return eval_factor(f, a);
    switch (f.spec.kind) {
        case FactorSpec::Kind::U: return F.one();
        case FactorSpec::Kind::PowMinusOne:
            // derivative T * a^{T-1}
            return F.mul(F.scalar(f.spec.T2), F.pow(a, Int(f.spec.T2 - 1)));
        case FactorSpec::Kind::CycloRatio:
            // N'(a)/D(a) at a simple root of the numerator
            return F.div(F.mul(F.scalar(f.spec.T2), F.pow(a, Int(f.spec.T2 - 1))),
                         F.sub(F.pow(a, Int(f.spec.T1)), F.one()));
        case FactorSpec::Kind::Generic: {
            FieldElem der = F.zero();
            for (auto& [c, e] : f.spec.monomials) {
                if (e == 0) continue;
                der = F.add(der, F.mul(F.scalar(c * (e % F.p())), F.pow(a, Int(e - 1))));
            }
            return der;
        }
        default: throw ConsistencyError("unit_value: factor kind with unexpected root");
    }
}

TowerInst::LocalData TowerInst::local_data(const BasePoint& base) const {
    const FieldCtx& F = *F_;
    LocalData L;
    L.g_unit = F.one();
    L.h_unit = F.one();
    long long vg = 0, O = 0;
    if (base.at_infinity) {
        for (const auto& f : g_) {
            vg -= f.exponent * f.degree;
            L.g_unit = F.mul(L.g_unit, F.pow(f.lead, Int(f.exponent)));
        }
        for (const auto& f : h_) {
            O -= f.exponent * f.degree;
            L.h_unit = F.mul(L.h_unit, F.pow(f.lead, Int(f.exponent)));
        }
    } else {
        for (const auto& f : g_) {
            if (f.roots.count(F.index_of(base.a))) vg += f.exponent;
            L.g_unit = F.mul(L.g_unit, F.pow(unit_value(f, base.a), Int(f.exponent)));
        }
        for (const auto& f : h_) {
            if (f.roots.count(F.index_of(base.a))) O += f.exponent;
            L.h_unit = F.mul(L.h_unit, F.pow(unit_value(f, base.a), Int(f.exponent)));
        }
    }
    L.vg = vg;
    L.r = vg == 0 ? b() : llgcd(b(), vg);
    L.e1 = b() / L.r;
    L.w = vg / L.r;
    L.vh = O * L.e1 + sys_.tower.v_exp * L.w;
    return L;
}

FiberProfile TowerInst::fiber_profile(const BasePoint& base) const {
    const FieldCtx& F = *F_;
    LocalData L = local_data(base);
    FiberProfile out;
    out.base = base;
    out.step1_classes = L.r;
    if (F.is_zero(L.g_unit)) throw ConsistencyError("fiber_profile: zero g-unit");
    out.step1_rational = F.is_dth_power(L.g_unit, L.r);
    out.rational_total = 0;
    if (!out.step1_rational) {
        // closure data only: r branches, all with the same e1 and v_h
        BranchRec br;
        br.e1 = L.e1;
        br.v_h = L.vh;
        br.rational = false;
        br.psi = F.zero();
        br.u0 = F.zero();
        br.d = llgcd(m(), L.vh);
        br.e2 = m() / br.d;
        out.branches.assign((size_t)L.r, br);
        return out;
    }
    // branch labels: the r rational r-th roots of the g-unit.  psi is the
    // value of v^{e1} (u-a)^{-w} at the branch (v^{e1} u^{w} at infinity).
    if (llgcd(L.e1, L.w) != 1) throw ConsistencyError("fiber_profile: gcd(e1, w) != 1");
    long long x, y;
    extgcd(L.e1, L.w, x, y);
    if (x * L.e1 + y * L.w == -1) {
        x = -x;
        y = -y;
    }
    if (x * L.e1 + y * L.w != 1) throw ConsistencyError("fiber_profile: Bezout failure");
    long long s_num = sys_.tower.v_exp - y * L.vh;
    if (s_num % L.e1 != 0) throw ConsistencyError("fiber_profile: residue exponent not integral");
    long long s = s_num / L.e1;
    for (const auto& psi : F.dth_roots(L.g_unit, L.r)) {
        BranchRec br;
        br.e1 = L.e1;
        br.v_h = L.vh;
        br.rational = true;
        br.psi = psi;
        br.u0 = F.mul(F.pow(psi, Int(s)), L.h_unit);
        if (F.is_zero(br.u0)) throw ConsistencyError("fiber_profile: branch residue zero");
        KummerFiber kf = kummer_fiber(F, m(), L.vh, br.u0);
        br.d = kf.d;
        br.e2 = kf.e2;
        br.rational_places = kf.rational_count;
        out.rational_total += kf.rational_count;
        out.branches.push_back(std::move(br));
    }
    return out;
}

// ---------------------------------------------------------------------------
// genus over the closure

Int genus_via_hurwitz(const TowerInst& ti) {
    const FieldCtx& F = ti.field();
    long long b = ti.b(), m = ti.m();

    // step 1: ramified over the roots of g and possibly infinity
    long long two_g1 = -2 * b;  // 2 g1 - 2 before adding the different
    for (const auto& bp : ti.special_base_points()) {
        auto L = ti.local_data(bp);
        bool step1_relevant = bp.at_infinity;
        if (!bp.at_infinity)
            for (const auto& f : ti.g_factors())
                if (f.roots.count(F.index_of(bp.a))) step1_relevant = true;
        if (step1_relevant) two_g1 += b - llgcd(b, L.vg);
    }
    if ((two_g1 + 2) % 2 != 0 || two_g1 + 2 < 0)
        throw ConsistencyError("genus_via_hurwitz: inconsistent step-1 different degree");
    // step 2: different over every special point
    long long diff2 = 0;
    for (const auto& bp : ti.special_base_points()) {
        auto L = ti.local_data(bp);
        diff2 += L.r * (m - llgcd(m, L.vh));
    }
    Int two_g2 = Int(m) * two_g1 + diff2;  // 2 g2 - 2
    Int g = halve_even(two_g2 + 2, "genus_via_hurwitz");
    if (g < 0) throw ConsistencyError("genus_via_hurwitz: negative genus");
    return g;
}

Int genus_via_hurwitz(const CurveSystem& sys) {
    auto [p, k] = counting_field(sys.params);
    auto F = FieldCtx::build_field(p, k);
    TowerInst ti(sys, F);
    return genus_via_hurwitz(ti);
}

// ---------------------------------------------------------------------------
// degree-one place counting

CountResult count_degree_one_places(const TowerInst& ti, const CountOptions& opts) {
    const FieldCtx& F = ti.field();
    long long b = ti.b(), m = ti.m(), v_exp = ti.system().tower.v_exp;
    uint64_t q = F.size();

    auto deadline = std::chrono::steady_clock::time_point::max();
    if (opts.budget_ms > 0)
        deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(opts.budget_ms);

    unsigned jobs = opts.jobs ? opts.jobs : std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    jobs = std::min<unsigned>(jobs, 64);

    // generic base points; the special set is skipped here and handled below
    std::vector<Int> partial(jobs, Int(0));
    std::vector<std::exception_ptr> errors(jobs);
    auto worker = [&](unsigned t) {
        try {
            Int local = 0;
            uint64_t lo = q * t / jobs, hi = q * (t + 1) / jobs;
            for (uint64_t i = lo; i < hi; ++i) {
                if ((i & 1023) == 0 && std::chrono::steady_clock::now() > deadline)
                    throw BudgetExceeded("counting budget exceeded");
                if (ti.is_special_index(i)) continue;
                FieldElem a = F.elem_at(i);
                FieldElem gval = F.one();
                for (const auto& f : ti.g_factors())
                    gval = F.mul(gval, F.pow(ti.eval_factor(f, a), Int(f.exponent)));
                if (!F.is_dth_power(gval, b)) continue;
                FieldElem hu = F.one();
                for (const auto& f : ti.h_factors())
                    hu = F.mul(hu, F.pow(ti.eval_factor(f, a), Int(f.exponent)));
                for (const auto& v0 : F.dth_roots(gval, b)) {
                    FieldElem hv = v_exp ? F.mul(F.pow(v0, Int(v_exp)), hu) : hu;
                    if (F.is_zero(hv))
                        throw ConsistencyError("zero h-value at a generic base point");
                    if (F.is_dth_power(hv, m)) local += m;
                }
            }
            partial[t] = local;
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    CountResult res;
    res.affine = 0;
    for (auto& x : partial) res.affine += x;
    res.at_infinity = 0;
    for (const auto& bp : ti.special_base_points()) {
        FiberProfile fp = ti.fiber_profile(bp);
        if (bp.at_infinity)
            res.at_infinity += fp.rational_total;
        else
            res.affine += fp.rational_total;
    }
    res.total = res.affine + res.at_infinity;
    return res;
}

CountResult count_degree_one_places(const CurveParams& params, const CountOptions& opts) {
    CurveSystem sys = emit_system(params);
    auto [p, k] = counting_field(sys.params);
    auto F = FieldCtx::build_field(p, k);
    TowerInst ti(sys, F);
    return count_degree_one_places(ti, opts);
}

// ---------------------------------------------------------------------------
// the published principal divisor

Int Divisor::degree() const {
    Int d = 0;
    for (const auto& t : terms) d += t.multiplicity * t.count;
    return d;
}

json Divisor::to_json() const {
    json terms_j = json::array();
    for (const auto& t : terms)
        terms_j.push_back(json{{"place", t.label},
                               {"count", t.count},
                               {"multiplicity", int_to_json(t.multiplicity)}});
    json j{{"terms", terms_j}, {"degree", int_to_json(degree())}};
    if (!note.empty()) j["note"] = note;
    return j;
}

Divisor principal_divisor_alpha(long long n, long long d1, long long d2) {
    uint32_t p = 0, u = 0;
    if (!prime_power(n, p, u)) throw ValidationError("n is not a prime power");
    if ((n + 1) % d1 != 0 || (n + 1) % d2 != 0)
        throw ValidationError("principal_divisor_alpha: d1, d2 must divide n+1");
    long long gpole = std::gcd(d2, 2 * d1);
    Divisor D;
    D.terms = {
        {"Q_{0,i} over P_0", d2, Int(d1)},
        {"Q_{alpha_i} over P_{alpha_i}", d1, Int(d2)},
        {"Q_{beta_i,j} over P_{beta_i}", d1 * (n - 2) * d2, Int(n + 1)},
        {"Q_{inf,i} over P_inf", gpole,
         -exact_div(Int(d1) * d2 * n * (n - 1), Int(gpole), "principal_divisor_alpha pole")},
    };
    if (D.degree() != 0) throw ConsistencyError("principal divisor has nonzero degree");
    if (gpole != std::gcd(d1, d2))
        D.note = "published split over infinity: gcd(d2, 2 d1) = " + std::to_string(gpole) +
                 " places; Kummer theory gives gcd(d1, d2) = " +
                 std::to_string(std::gcd(d1, d2)) + " places with the same total degree";
    return D;
}

}  // namespace gklab
