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

#include "gklab/curves.hpp"

#include <array>
#include <numeric>
#include <set>
#include <sstream>

namespace gklab {

std::string family_name(Family f) {
    switch (f) {
        case Family::GK_C: return "gk_c";
        case Family::GK_X: return "gk";
        case Family::C1: return "c1";
        case Family::C2: return "c2";
        case Family::C3: return "c3";
        case Family::XH: return "xh";
        case Family::XK: return "xk";
        case Family::HermitianSmall: return "hermitian_small";
        case Family::HermitianBig: return "hermitian_big";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
    for (Family f : {Family::GK_C, Family::GK_X, Family::C1, Family::C2, Family::C3, Family::XH,
                     Family::XK, Family::HermitianSmall, Family::HermitianBig})
        if (family_name(f) == s) return f;
    if (s == "gk_x") return Family::GK_X;
    return std::nullopt;
}

bool prime_power(long long n, uint32_t& p, uint32_t& u) {
    if (n < 2) return false;
    long long m = n;
    for (long long q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            uint32_t cnt = 0;
            while (m % q == 0) {
                m /= q;
                ++cnt;
            }
            if (m != 1) return false;
            p = (uint32_t)q;
            u = cnt;
            return true;
        }
    }
    p = (uint32_t)m;
    u = 1;
    return true;
}

std::string CurveParams::describe() const {
    std::ostringstream os;
    os << family_name(family) << "(n=" << n;
    switch (family) {
        case Family::C1:
        case Family::C2:
        case Family::C3:
        case Family::XH:
            os << ", d1=" << d1 << ", d2=" << d2 << ", d3=" << d3 << ", e=" << e;
            break;
        case Family::XK: os << ", c=" << c << ", d=" << d; break;
        default: break;
    }
    os << ")";
    return os.str();
}

json CurveParams::to_json() const {
    json j{{"family", family_name(family)}, {"n", n}};
    switch (family) {
        case Family::C1:
        case Family::C2:
        case Family::C3:
        case Family::XH:
            j["d1"] = d1;
            j["d2"] = d2;
            j["d3"] = d3;
            j["e"] = e;
            break;
        case Family::XK:
            j["c"] = c;
            j["d"] = d;
            break;
        default: break;
    }
    return j;
}

CurveParams CurveParams::from_json(const json& j) {
    CurveParams P;
    auto f = family_from_name(j.at("family").get<std::string>());
    if (!f) throw ValidationError("unknown family name");
    P.family = *f;
    P.n = j.at("n").get<long long>();
    P.d1 = j.value("d1", 1LL);
    P.d2 = j.value("d2", 1LL);
    P.d3 = j.value("d3", 1LL);
    P.e = j.value("e", 0LL);
    P.c = j.value("c", 1LL);
    P.d = j.value("d", 1LL);
    return P;
}

Int compute_D(long long n, long long d1, long long d2) {
    Int g = std::gcd(d2, 2 * d1);
    Int last = exact_div(Int(d1) * d2 * n * (n - 1), g, "compute_D");
    return igcd(igcd(Int(d1), Int(d2)), igcd(Int(n + 1), last));
}

Int compute_M(long long n, long long d1, long long d2, long long d3) {
    Int r = Int(d3) * (Int(n) * n - n + 1);
    Int direct = igcd(igcd(Int(d1), Int(d2)), r);
    Int via_D = igcd(compute_D(n, d1, d2), r);
    if (direct != via_D)
        throw ConsistencyError("compute_M: gcd(D, d3(n^2-n+1)) != gcd(d1,d2,d3(n^2-n+1)) at " +
                               std::to_string(n) + "," + std::to_string(d1) + "," +
                               std::to_string(d2) + "," + std::to_string(d3));
    return direct;
}

namespace {

// covering degree as an exact fraction (num, den); den = 1 iff admissible
std::pair<Int, Int> degree_fraction(const CurveParams& P) {
    long long n = P.n;
    Int e2 = Int(n) * n - n + 1;
    Int np1sq = Int(n + 1) * (n + 1);
    switch (P.family) {
        case Family::GK_C:
        case Family::GK_X: return {1, 1};
        case Family::C1:
        case Family::C3:
        case Family::XH: {
            Int M = compute_M(n, P.d1, P.d2, P.d3);
            Int num = e2 * M * np1sq;
            Int den = Int(P.e) * P.d1 * P.d2 * P.d3;
            Int g = igcd(num, den);
            return {num / g, den / g};
        }
        case Family::C2: {
            Int num = e2 * np1sq;
            Int den = Int(P.e) * P.d1 * P.d2 * P.d3;
            Int g = igcd(num, den);
            return {num / g, den / g};
        }
        case Family::XK: {
            Int num = Int(n) * n * n + 1;
            Int den = Int(P.c) * P.d;
            Int g = igcd(num, den);
            return {num / g, den / g};
        }
        default: throw ValidationError("covering_degree: not a Galois subcover family");
    }
}

}  // namespace

std::vector<std::string> violations(const CurveParams& raw) {
    std::vector<std::string> out;
    uint32_t p = 0, u = 0;
    if (!prime_power(raw.n, p, u)) {
        out.push_back("n = " + std::to_string(raw.n) + " is not a prime power");
        return out;
    }
    CurveParams P = raw;
    long long n = P.n;
    long long e2 = n * n - n + 1;
    auto need_divides = [&](long long a, long long b, const std::string& aname,
                            const std::string& bname) {
        if (a < 1 || b % a != 0)
            out.push_back(aname + " = " + std::to_string(a) + " does not divide " + bname + " = " +
                          std::to_string(b));
    };
    switch (P.family) {
        case Family::XH:
            if (P.e != 0 && P.e != e2)
                out.push_back("xh fixes e = n^2-n+1, got e = " + std::to_string(P.e));
            P.e = e2;
            [[fallthrough]];
        case Family::C1:
        case Family::C2:
        case Family::C3: {
            if (P.e == 0) P.e = e2;
            need_divides(P.d1, n + 1, "d1", "n+1");
            need_divides(P.d2, n + 1, "d2", "n+1");
            need_divides(P.d3, n + 1, "d3", "n+1");
            need_divides(P.e, e2, "e", "n^2-n+1");
            if (!out.empty()) break;
            Int M = compute_M(n, P.d1, P.d2, P.d3);
            if ((P.family == Family::C1 || P.family == Family::XH) &&
                (Int(P.d3) * P.e) % M != 0)
                out.push_back("M = " + M.str() + " does not divide d3*e = " +
                              std::to_string(P.d3 * P.e));
            auto [num, den] = degree_fraction(P);
            if (den != 1)
                out.push_back("covering degree " + num.str() + "/" + den.str() +
                              " is not an integer");
            break;
        }
        case Family::XK:
            need_divides(P.c, n + 1, "c", "n+1");
            need_divides(P.d, e2, "d", "n^2-n+1");
            break;
        default: break;
    }
    return out;
}

CurveParams validate(CurveParams params) {
    auto bad = violations(params);
    if (!bad.empty()) {
        std::string msg = "invalid parameters for " + params.describe() + ":";
        for (const auto& b : bad) msg += "\n  - " + b;
        throw ValidationError(msg);
    }
    long long e2 = params.n * params.n - params.n + 1;
    switch (params.family) {
        case Family::C1:
        case Family::C2:
        case Family::C3:
            if (params.e == 0) params.e = e2;
            break;
        case Family::XH: params.e = e2; break;
        case Family::GK_C:
        case Family::GK_X:
        case Family::HermitianSmall:
        case Family::HermitianBig:
            params.d1 = params.d2 = params.d3 = 1;
            params.e = 0;
            params.c = params.d = 1;
            break;
        default: break;
    }
    return params;
}

Int covering_degree(const CurveParams& raw) {
    CurveParams P = validate(raw);
    auto [num, den] = degree_fraction(P);
    if (den != 1)
        throw ValidationError("covering degree is not an integer for " + P.describe());
    if (num < 1) throw ConsistencyError("covering degree < 1");
    return num;
}

// ---------------------------------------------------------------------------
// factor specs

FactorSpec FactorSpec::one() { return FactorSpec{}; }

FactorSpec FactorSpec::u() {
    FactorSpec f;
    f.kind = Kind::U;
    return f;
}

FactorSpec FactorSpec::pow_minus_one(long long T) {
    FactorSpec f;
    f.kind = Kind::PowMinusOne;
    f.T2 = T;
    return f;
}

FactorSpec FactorSpec::cyclo_ratio(long long T2, long long T1) {
    if (T2 % T1 != 0) throw ConsistencyError("cyclo_ratio: T1 must divide T2");
    if (T2 == T1) return one();  // degenerate at n = 2
    FactorSpec f;
    f.kind = Kind::CycloRatio;
    f.T1 = T1;
    f.T2 = T2;
    return f;
}

FactorSpec FactorSpec::generic(std::vector<std::pair<long long, long long>> monomials) {
    FactorSpec f;
    f.kind = Kind::Generic;
    f.monomials = std::move(monomials);
    return f;
}

long long FactorSpec::degree() const {
    switch (kind) {
        case Kind::One: return 0;
        case Kind::U: return 1;
        case Kind::PowMinusOne: return T2;
        case Kind::CycloRatio: return T2 - T1;
        case Kind::Generic: {
            long long d = 0;
            for (auto& [c, e] : monomials)
                if (c != 0) d = std::max(d, e);
            return d;
        }
    }
    return 0;
}

std::vector<std::pair<long long, long long>> FactorSpec::expanded_monomials() const {
    switch (kind) {
        case Kind::One: return {{1, 0}};
        case Kind::U: return {{1, 1}};
        case Kind::PowMinusOne: return {{1, T2}, {-1, 0}};
        case Kind::CycloRatio: {
            std::vector<std::pair<long long, long long>> m;
            for (long long j = 0; j * T1 < T2; ++j) m.push_back({1, j * T1});
            return m;  // geometric sum (u^T2 - 1)/(u^T1 - 1)
        }
        case Kind::Generic: return monomials;
    }
    return {};
}

json FactorSpec::to_json() const {
    const char* names[] = {"one", "u", "pow_minus_one", "cyclo_ratio", "generic"};
    json j{{"kind", names[(int)kind]}};
    if (kind == Kind::PowMinusOne) j["T"] = T2;
    if (kind == Kind::CycloRatio) {
        j["T2"] = T2;
        j["T1"] = T1;
    }
    j["monomials"] = json::array();
    for (auto& [c, e] : expanded_monomials()) j["monomials"].push_back({c, e});
    return j;
}

FactorSpec FactorSpec::from_json(const json& j) {
    std::string k = j.at("kind").get<std::string>();
    if (k == "one") return one();
    if (k == "u") return u();
    if (k == "pow_minus_one") return pow_minus_one(j.at("T").get<long long>());
    if (k == "cyclo_ratio")
        return cyclo_ratio(j.at("T2").get<long long>(), j.at("T1").get<long long>());
    if (k == "generic") {
        std::vector<std::pair<long long, long long>> m;
        for (auto& jm : j.at("monomials"))
            m.push_back({jm.at(0).get<long long>(), jm.at(1).get<long long>()});
        return generic(std::move(m));
    }
    throw ValidationError("unknown factor kind: " + k);
}

namespace {

json factors_to_json(const std::vector<std::pair<FactorSpec, long long>>& fs) {
    json a = json::array();
    for (auto& [f, e] : fs) {
        json jf = f.to_json();
        jf["power"] = e;
        a.push_back(jf);
    }
    return a;
}

std::vector<std::pair<FactorSpec, long long>> factors_from_json(const json& a) {
    std::vector<std::pair<FactorSpec, long long>> fs;
    for (auto& jf : a) fs.push_back({FactorSpec::from_json(jf), jf.at("power").get<long long>()});
    return fs;
}

}  // namespace

json TowerSpec::to_json() const {
    return json{{"b", b},
                {"g", factors_to_json(g)},
                {"m", m},
                {"h", json{{"v_exp", v_exp}, {"factors", factors_to_json(h)}}}};
}

TowerSpec TowerSpec::from_json(const json& j) {
    TowerSpec t;
    t.b = j.at("b").get<long long>();
    t.g = factors_from_json(j.at("g"));
    t.m = j.at("m").get<long long>();
    t.v_exp = j.at("h").at("v_exp").get<long long>();
    t.h = factors_from_json(j.at("h").at("factors"));
    return t;
}

void CurveSystem::check_invariants() const {
    uint32_t p = 0, u = 0;
    if (!prime_power(params.n, p, u)) throw ValidationError("n is not a prime power");
    long long n = params.n;
    Int big = (params.family == Family::HermitianSmall) ? Int(n) * n - 1
                                                        : Int(n) * n * n + 1;
    for (long long ex : {tower.b, tower.m}) {
        if (ex < 1 || std::gcd(ex, (long long)p) != 1)
            throw ConsistencyError("tower exponent is wild or non-positive");
        if (big % ex != 0)
            throw ConsistencyError("tower exponent does not divide the group bound");
    }
}

json CurveSystem::to_json() const {
    json eqs = json::array();
    // step-2 equation first, then step-1, matching the display order
    if (tower.m > 1 || !tower.h.empty() || tower.v_exp != 0) {
        json rhs{{"v_exp", tower.v_exp}, {"factors", factors_to_json(tower.h)}};
        eqs.push_back(json{{"lhs", {{"var", variables.back()}, {"exp", tower.m}}},
                           {"rhs", rhs}});
    }
    json rhs1{{"v_exp", 0}, {"factors", factors_to_json(tower.g)}};
    eqs.push_back(
        json{{"lhs", {{"var", variables[1]}, {"exp", tower.b}}}, {"rhs", rhs1}});
    return json{{"family", family_name(params.family)},
                {"params", params.to_json()},
                {"variables", variables},
                {"equations", eqs},
                {"tower", tower.to_json()}};
}

CurveSystem CurveSystem::from_json(const json& j) {
    CurveSystem s;
    s.params = CurveParams::from_json(j.at("params"));
    s.variables = j.at("variables").get<std::vector<std::string>>();
    s.tower = TowerSpec::from_json(j.at("tower"));
    s.check_invariants();
    return s;
}

namespace {

// C(a, b) mod p via Lucas; a, b >= 0, p prime
long long binom_mod_p(long long a, long long b, uint32_t p) {
    auto small = [&](long long ai, long long bi) -> long long {
        if (bi > ai) return 0;
        // factorials stay below p so no p-divisibility issues
        long long num = 1, den = 1;
        for (long long i = 0; i < bi; ++i) {
            num = num * ((ai - i) % p) % p;
            den = den * ((i + 1) % p) % p;
        }
        // den^{-1} mod p
        long long inv = 1, base = den % p, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return num * inv % p;
    };
    long long r = 1;
    while (a || b) {
        r = r * small(a % p, b % p) % p;
        if (r == 0) return 0;
        a /= p;
        b /= p;
    }
    return r;
}

// (u^n + u)^{n-1} - 1 expanded in characteristic p; coefficients come out
// as +-1 because n - 1 has all base-p digits equal to p - 1
FactorSpec gk_c_step2_factor(long long n, uint32_t p) {
    std::vector<std::pair<long long, long long>> mono;
    for (long long j = 0; j <= n - 1; ++j) {
        long long cj = binom_mod_p(n - 1, j, p);
        if (cj == 0) continue;
        if (cj == p - 1) cj = -1;  // print-friendly
        mono.push_back({cj, (n - 1) * (j + 1)});
    }
    mono.push_back({-1, 0});
    return FactorSpec::generic(std::move(mono));
}

}  // namespace

CurveSystem emit_system(const CurveParams& raw) {
    CurveParams P = validate(raw);
    long long n = P.n;
    long long e2 = n * n - n + 1;
    uint32_t p = 0, u = 0;
    prime_power(n, p, u);

    CurveSystem S;
    S.params = P;
    S.variables = {"U", "V", "S"};
    TowerSpec& t = S.tower;

    switch (P.family) {
        case Family::GK_X:
        case Family::C1:
        case Family::XH: {
            long long d1 = P.d1, d2 = P.d2, d3 = P.d3, e = P.e;
            if (P.family == Family::GK_X) {
                d1 = d2 = d3 = n + 1;
                e = e2;
                S.variables = {"X", "Y", "Z"};
            }
            long long M = (long long)compute_M(n, d1, d2, d3);
            t.b = d2;
            t.g = {{FactorSpec::pow_minus_one(d1), 1}};
            t.m = d3 * e / M;
            t.v_exp = d2 / M;
            t.h = {{FactorSpec::u(), d1 / M},
                   {FactorSpec::cyclo_ratio(d1 * (n - 1), d1), (n + 1) / M}};
            break;
        }
        case Family::C2: {
            long long M = (long long)compute_M(n, P.d1, P.d2, P.d3);
            long long a = P.d1 / M;
            t.b = P.d2;
            t.g = {{FactorSpec::pow_minus_one(a), 1}};
            t.m = P.d3 * P.e;
            t.v_exp = 0;
            t.h = {{FactorSpec::u(), a},
                   {FactorSpec::pow_minus_one(a * (n - 1)), 1},
                   {FactorSpec::cyclo_ratio(a * (n - 1), a), n}};
            break;
        }
        case Family::C3: {
            long long M = (long long)compute_M(n, P.d1, P.d2, P.d3);
            t.b = P.d2 / M;
            t.g = {{FactorSpec::pow_minus_one(P.d1), 1}};
            t.m = P.d3 * P.e;
            t.v_exp = 0;
            t.h = {{FactorSpec::u(), P.d1},
                   {FactorSpec::pow_minus_one(P.d1 * (n - 1)), 1},
                   {FactorSpec::cyclo_ratio(P.d1 * (n - 1), P.d1), n}};
            break;
        }
        case Family::XK: {
            S.variables = {"U", "V", "W"};
            t.b = n + 1;
            t.g = {{FactorSpec::u(), P.c}, {FactorSpec::pow_minus_one(P.c), 1}};
            t.m = P.d;
            t.v_exp = 1;
            t.h = {{FactorSpec::cyclo_ratio((n - 1) * P.c, P.c), 1}};
            break;
        }
        case Family::GK_C: {
            S.variables = {"X", "Y", "Z"};
            t.b = n + 1;
            t.g = {{FactorSpec::generic({{1, n}, {1, 1}}), 1}};
            t.m = e2;
            t.v_exp = 1;
            t.h = {{gk_c_step2_factor(n, p), 1}};
            break;
        }
        case Family::HermitianSmall: {
            S.variables = {"X", "Y"};
            t.b = n + 1;
            t.g = {{FactorSpec::pow_minus_one(n + 1), 1}};
            t.m = 1;
            break;
        }
        case Family::HermitianBig: {
            S.variables = {"X", "Y"};
            long long n3 = n * n * n;
            t.b = n3 + 1;
            t.g = {{FactorSpec::generic({{1, n3}, {1, 1}}), 1}};
            t.m = 1;
            break;
        }
    }
    // drop degenerate One factors and zero exponents
    auto prune = [](std::vector<std::pair<FactorSpec, long long>>& fs) {
        std::erase_if(fs, [](const auto& fe) {
            return fe.second == 0 || fe.first.kind == FactorSpec::Kind::One;
        });
    };
    prune(t.g);
    prune(t.h);
    S.check_invariants();
    return S;
}

std::pair<uint32_t, uint32_t> counting_field(const CurveParams& params) {
    uint32_t p = 0, u = 0;
    if (!prime_power(params.n, p, u)) throw ValidationError("n is not a prime power");
    if (params.family == Family::HermitianSmall) return {p, 2 * u};
    return {p, 6 * u};
}

// ---------------------------------------------------------------------------
// projectivity between the two GK models

ProjectivityA build_projectivity(const FieldCtx& big, const FieldCtx& sub, long long n) {
    Embedding em(sub, big);
    FieldElem rho = em.apply(solve_rho(sub, n));
    FieldElem o = big.one(), z = big.zero();
    FieldElem omr = big.sub(o, rho);  // 1 - rho

    ProjectivityA A;
    A.a = {o, z, z, omr,           //
           z, o, z, z,             //
           z, z, big.neg(o), z,    //
           o, z, z, big.neg(rho)};
    A.a_inv = {rho, z, z, omr,          //
               z, o, z, z,              //
               z, z, big.neg(o), z,     //
               o, z, z, big.neg(o)};

    // sanity: A * A^{-1} = I
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            FieldElem s = z;
            for (int l = 0; l < 4; ++l)
                s = big.add(s, big.mul(A.a[4 * i + l], A.a_inv[4 * l + j]));
            if (s != (i == j ? o : z)) throw ConsistencyError("projectivity matrix not inverse");
        }
    }
    return A;
}

namespace {

using Point = std::array<uint64_t, 3>;  // element indices (x, y, z)

std::array<FieldElem, 4> apply4(const FieldCtx& F, const std::vector<FieldElem>& mat,
                                const std::array<FieldElem, 4>& v) {
    std::array<FieldElem, 4> out{F.zero(), F.zero(), F.zero(), F.zero()};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i] = F.add(out[i], F.mul(mat[4 * i + j], v[j]));
    return out;
}

// affine rational points of the X^n + X model
std::set<Point> points_gk_c(const FieldCtx& F, long long n) {
    long long e2 = n * n - n + 1;
    std::set<Point> pts;
    for (uint64_t xi = 0; xi < F.size(); ++xi) {
        FieldElem x = F.elem_at(xi);
        FieldElem tr = F.add(F.pow(x, Int(n)), x);  // x^n + x
        FieldElem w1 = F.sub(F.pow(tr, Int(n - 1)), F.one());
        for (const auto& y : F.dth_roots(tr, n + 1)) {
            FieldElem rhs = F.mul(y, w1);
            for (const auto& zz : F.dth_roots(rhs, e2))
                pts.insert({xi, F.index_of(y), F.index_of(zz)});
        }
    }
    return pts;
}

// affine rational points of the X^{n+1} - 1 model
std::set<Point> points_gk_x(const FieldCtx& F, long long n) {
    long long e2 = n * n - n + 1;
    std::set<Point> pts;
    for (uint64_t xi = 0; xi < F.size(); ++xi) {
        FieldElem x = F.elem_at(xi);
        FieldElem s = F.sub(F.pow(x, Int(n + 1)), F.one());
        // (x^{n^2} - x)/(x^{n+1} - 1) = x * sum_{j=0}^{n-2} x^{(n+1)j}
        FieldElem geom = F.zero();
        for (long long j = 0; j <= n - 2; ++j)
            geom = F.add(geom, F.pow(x, Int(n + 1) * j));
        FieldElem w1 = F.mul(x, geom);
        for (const auto& y : F.dth_roots(s, n + 1)) {
            FieldElem rhs = F.mul(y, w1);
            for (const auto& zz : F.dth_roots(rhs, e2))
                pts.insert({xi, F.index_of(y), F.index_of(zz)});
        }
    }
    return pts;
}

}  // namespace

bool projectivity_check(long long n) {
    if (n > 4) throw ValidationError("projectivity_check: n <= 4 only (exhaustive)");
    uint32_t p = 0, u = 0;
    if (!prime_power(n, p, u)) throw ValidationError("n is not a prime power");
    auto big = FieldCtx::build_field(p, 6 * u);
    auto sub = FieldCtx::build_field(p, 2 * u);
    ProjectivityA A = build_projectivity(big, sub, n);

    const FieldCtx& F = big;
    long long e2 = n * n - n + 1;
    auto SC = points_gk_c(F, n);
    auto SX = points_gk_x(F, n);

    auto on_x_affine = [&](const FieldElem& x, const FieldElem& y, const FieldElem& z) {
        return SX.count({F.index_of(x), F.index_of(y), F.index_of(z)}) > 0;
    };
    auto on_c_affine = [&](const FieldElem& x, const FieldElem& y, const FieldElem& z) {
        return SC.count({F.index_of(x), F.index_of(y), F.index_of(z)}) > 0;
    };

    // forward: phi maps the X^n + X model onto the other one
    for (const auto& pt : SC) {
        std::array<FieldElem, 4> v{F.elem_at(pt[0]), F.elem_at(pt[1]), F.elem_at(pt[2]), F.one()};
        auto w = apply4(F, A.a, v);
        if (!F.is_zero(w[3])) {
            FieldElem it = F.inv(w[3]);
            if (!on_x_affine(F.mul(w[0], it), F.mul(w[1], it), F.mul(w[2], it))) return false;
        } else {
            // projective closure of the target: Y^{n+1} = X^{n+1} - T^{n+1}
            // and Z^{e2} (X^{n+1} - T^{n+1}) = Y T (X^{n^2} - X T^{n^2-1})
            if (F.pow(w[1], Int(n + 1)) != F.pow(w[0], Int(n + 1))) return false;
            if (!F.is_zero(F.mul(F.pow(w[2], Int(e2)), F.pow(w[0], Int(n + 1))))) return false;
        }
    }

    // backward through A^{-1}
    for (const auto& pt : SX) {
        std::array<FieldElem, 4> v{F.elem_at(pt[0]), F.elem_at(pt[1]), F.elem_at(pt[2]), F.one()};
        auto w = apply4(F, A.a_inv, v);
        if (!F.is_zero(w[3])) {
            FieldElem it = F.inv(w[3]);
            if (!on_c_affine(F.mul(w[0], it), F.mul(w[1], it), F.mul(w[2], it))) return false;
        } else {
            // closure of X^n + X model at T = 0 forces Y = 0
            if (!F.is_zero(w[1])) return false;
        }
    }
    return true;
}

}  // namespace gklab
