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

#include "gklab/ffield.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace gklab {

namespace {

std::atomic<uint32_t> g_next_field_id{1};

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- dense polynomials over F_p, little-endian, for modulus search ---

using PolyP = std::vector<uint32_t>;

int pp_deg(const PolyP& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

void pp_trim(PolyP& a) { a.resize(std::max(0, pp_deg(a) + 1)); }

// a mod f, f monic
void pp_mod(PolyP& a, const PolyP& f, uint32_t p) {
    int df = pp_deg(f);
    for (int i = pp_deg(a); i >= df; --i) {
        uint64_t c = a[i] % p;
        if (!c) continue;
        for (int j = 0; j <= df; ++j) {
            uint64_t t = (uint64_t)f[j] * c % p;
            a[i - df + j] = (uint32_t)((a[i - df + j] + p - (uint32_t)t) % p);
        }
    }
    pp_trim(a);
}

PolyP pp_mulmod(const PolyP& a, const PolyP& b, const PolyP& f, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (uint32_t)((r[i + j] + (uint64_t)a[i] * b[j]) % p);
    }
    pp_mod(r, f, p);
    return r;
}

PolyP pp_powmod(PolyP base, uint64_t e, const PolyP& f, uint32_t p) {
    PolyP r{1};
    pp_mod(base, f, p);
    while (e) {
        if (e & 1ULL) r = pp_mulmod(r, base, f, p);
        base = pp_mulmod(base, base, f, p);
        e >>= 1ULL;
    }
    return r;
}

uint32_t inv_mod_p(uint32_t a, uint32_t p) {
    // p is small and prime
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr) {
        int64_t q = r / nr;
        int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return (uint32_t)((t % p + p) % p);
}

PolyP pp_gcd(PolyP a, PolyP b, uint32_t p) {
    pp_trim(a);
    pp_trim(b);
    while (pp_deg(b) >= 0) {
        // a mod b with b made monic on the fly
        uint32_t lead = b[pp_deg(b)];
        if (lead != 1) {
            uint32_t il = inv_mod_p(lead, p);
            for (auto& c : b) c = (uint32_t)((uint64_t)c * il % p);
        }
        pp_mod(a, b, p);
        std::swap(a, b);
    }
    return a;
}

// Degree-k f is irreducible over F_p iff it has no irreducible factor of
// degree <= k/2, i.e. gcd(x^{p^i} - x, f) = 1 for i = 1..k/2.
bool pp_irreducible(const PolyP& f, uint32_t p) {
    int k = pp_deg(f);
    if (k == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    PolyP xp{0, 1};
    for (int i = 1; i <= k / 2; ++i) {
        xp = pp_powmod(xp, p, f, p);  // x^{p^i} mod f
        PolyP d = xp;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (uint32_t)((d[1] + p - 1) % p);  // x^{p^i} - x
        PolyP g = pp_gcd(d, f, p);
        if (pp_deg(g) != 0) return false;
    }
    return true;
}

}  // namespace

uint64_t FieldCtx::size() const {
    if (!size_) throw ValidationError("field too large to enumerate");
    return size_;
}

FieldCtx FieldCtx::build_field(uint32_t p, uint32_t k) {
    if (!is_prime_u32(p)) throw ValidationError("build_field: p is not prime");
    if (k < 1) throw ValidationError("build_field: k < 1");

    FieldCtx F;
    F.lazy_ = std::make_unique<Lazy>();
    F.p_ = p;
    F.k_ = k;
    F.card_ = ipow(Int(p), k);
    F.size_ = F.card_ <= Int(std::numeric_limits<uint64_t>::max() >> 1)
                  ? (uint64_t)F.card_
                  : 0;
    F.id_ = g_next_field_id.fetch_add(1);

    // Lexicographically smallest monic irreducible of degree k, with the
    // constant coefficient as the most significant comparison key. For
    // k >= 2 every irreducible has nonzero constant term, so that block of
    // the search space is skipped wholesale.
    PolyP f(k + 1, 0);
    f[k] = 1;
    std::vector<uint32_t> digits(k, 0);  // digits[i] = coefficient of x^i
    if (k >= 2) digits[0] = 1;
    for (;;) {
        for (uint32_t i = 0; i < k; ++i) f[i] = digits[i];
        if (pp_irreducible(f, p)) break;
        // increment, low-degree coefficient most significant
        int pos = (int)k - 1;
        while (pos >= 0) {
            if (++digits[pos] < p) break;
            digits[pos] = 0;
            --pos;
        }
        if (pos < 0) throw ConsistencyError("no irreducible modulus found");
    }
    F.modulus_ = f;

    if (F.size_ && F.size_ <= kLogTableLimit) {
        // generator first (with plain coefficient arithmetic), then fill
        // the log/exp tables by repeated multiplication
        F.ensure_generator();
        uint64_t q1 = F.size_ - 1;
        F.log_.assign(F.size_, kNoLog);
        F.expo_.assign(q1, 0);
        FieldElem x = F.one();
        for (uint64_t t = 0; t < q1; ++t) {
            uint64_t idx = F.index_of(x);
            F.expo_[t] = (uint32_t)idx;
            F.log_[idx] = (uint32_t)t;
            x = F.mul(x, F.lazy_->gen);
        }
        if (!F.is_one(x)) throw ConsistencyError("generator order mismatch");
        F.has_tables_ = true;
    }
    return F;
}

void FieldCtx::check(const FieldElem& x) const {
    if (x.field_id != id_ || x.c.size() != k_)
        throw ValidationError("mixed-field operands");
}

FieldElem FieldCtx::zero() const { return FieldElem{id_, std::vector<uint32_t>(k_, 0)}; }

FieldElem FieldCtx::one() const {
    FieldElem e = zero();
    e.c[0] = 1;
    return e;
}

FieldElem FieldCtx::from_coeffs(std::vector<uint32_t> c) const {
    if (c.size() > k_) throw ValidationError("coefficient vector longer than k");
    c.resize(k_, 0);
    for (auto& v : c) v %= p_;
    return FieldElem{id_, std::move(c)};
}

FieldElem FieldCtx::scalar(long long v) const {
    long long m = v % (long long)p_;
    if (m < 0) m += p_;
    FieldElem e = zero();
    e.c[0] = (uint32_t)m;
    return e;
}

FieldElem FieldCtx::elem_at(uint64_t index) const {
    FieldElem e = zero();
    for (uint32_t i = 0; i < k_ && index; ++i) {
        e.c[i] = (uint32_t)(index % p_);
        index /= p_;
    }
    return e;
}

uint64_t FieldCtx::index_of(const FieldElem& x) const {
    check(x);
    uint64_t idx = 0;
    for (uint32_t i = k_; i-- > 0;) idx = idx * p_ + x.c[i];
    return idx;
}

bool FieldCtx::is_zero(const FieldElem& x) const {
    check(x);
    return std::all_of(x.c.begin(), x.c.end(), [](uint32_t v) { return v == 0; });
}

bool FieldCtx::is_one(const FieldElem& x) const {
    check(x);
    if (x.c[0] != 1) return false;
    return std::all_of(x.c.begin() + 1, x.c.end(), [](uint32_t v) { return v == 0; });
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
    check(a);
    check(b);
    FieldElem r = a;
    for (uint32_t i = 0; i < k_; ++i) {
        r.c[i] += b.c[i];
        if (r.c[i] >= p_) r.c[i] -= p_;
    }
    return r;
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
    check(a);
    check(b);
    FieldElem r = a;
    for (uint32_t i = 0; i < k_; ++i) {
        r.c[i] += p_ - b.c[i];
        if (r.c[i] >= p_) r.c[i] -= p_;
    }
    return r;
}

FieldElem FieldCtx::neg(const FieldElem& a) const { return sub(zero(), a); }

void FieldCtx::reduce_(std::vector<uint64_t>& wide, std::vector<uint32_t>& out) const {
    // wide has length 2k-1; fold down by the monic modulus
    for (int i = (int)wide.size() - 1; i >= (int)k_; --i) {
        uint64_t c = wide[i] % p_;
        wide[i] = 0;
        if (!c) continue;
        for (uint32_t j = 0; j < k_; ++j) {
            uint64_t t = (uint64_t)modulus_[j] * c % p_;
            wide[i - k_ + j] = (wide[i - k_ + j] + (uint64_t)p_ - t) % p_;
        }
    }
    out.resize(k_);
    for (uint32_t i = 0; i < k_; ++i) out[i] = (uint32_t)(wide[i] % p_);
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
    check(a);
    check(b);
    if (has_tables_) {
        uint32_t la = log_[index_of(a)], lb = log_[index_of(b)];
        if (la == kNoLog || lb == kNoLog) return zero();
        uint64_t q1 = size_ - 1;
        return elem_at(expo_[((uint64_t)la + lb) % q1]);
    }
    std::vector<uint64_t> wide(2 * (size_t)k_ - 1, 0);
    for (uint32_t i = 0; i < k_; ++i) {
        if (!a.c[i]) continue;
        for (uint32_t j = 0; j < k_; ++j)
            wide[i + j] = (wide[i + j] + (uint64_t)a.c[i] * b.c[j]) % p_;
    }
    FieldElem r = zero();
    reduce_(wide, r.c);
    return r;
}

FieldElem FieldCtx::pow_u64(const FieldElem& a, uint64_t e) const {
    FieldElem r = one(), base = a;
    while (e) {
        if (e & 1ULL) r = mul(r, base);
        base = mul(base, base);
        e >>= 1ULL;
    }
    return r;
}

FieldElem FieldCtx::pow(const FieldElem& a, Int e) const {
    check(a);
    if (is_zero(a)) {
        if (e < 0) throw ValidationError("inversion of zero");
        return e == 0 ? one() : zero();
    }
    Int q1 = card_ - 1;
    e %= q1;
    if (e < 0) e += q1;
    if (has_tables_) {
        uint32_t la = log_[index_of(a)];
        uint64_t t = (uint64_t)(Int(la) * e % q1);
        return elem_at(expo_[t]);
    }
    FieldElem r = one(), base = a;
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
    check(a);
    if (is_zero(a)) throw ValidationError("inversion of zero");
    if (has_tables_) {
        uint64_t q1 = size_ - 1;
        uint32_t la = log_[index_of(a)];
        return elem_at(expo_[(q1 - la) % q1]);
    }
    return pow(a, card_ - 2);
}

FieldElem FieldCtx::div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

FieldElem FieldCtx::frobenius(const FieldElem& a) const { return pow(a, Int(p_)); }

std::vector<uint64_t> FieldCtx::size_minus_one_prime_factors() const {
    std::call_once(lazy_->fact_once, [this] {
        uint64_t n = size() - 1;
        for (uint64_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                lazy_->qm1_factors.push_back(d);
                while (n % d == 0) n /= d;
            }
        }
        if (n > 1) lazy_->qm1_factors.push_back(n);
    });
    return lazy_->qm1_factors;
}

void FieldCtx::ensure_generator() const {
    std::call_once(lazy_->gen_once, [this] {
        uint64_t q1 = size() - 1;
        auto primes = size_minus_one_prime_factors();
        for (uint64_t idx = 1; idx < size(); ++idx) {
            FieldElem cand = elem_at(idx);
            bool ok = true;
            for (uint64_t ell : primes) {
                if (is_one(pow_u64(cand, q1 / ell))) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                lazy_->gen = cand;
                return;
            }
        }
        throw ConsistencyError("no generator found");
    });
}

const FieldElem& FieldCtx::generator() const {
    ensure_generator();
    return lazy_->gen;
}

Int FieldCtx::multiplicative_order(const FieldElem& x) const {
    check(x);
    if (is_zero(x)) throw ValidationError("order of zero");
    uint64_t ord = size() - 1;
    for (uint64_t ell : size_minus_one_prime_factors())
        while (ord % ell == 0 && is_one(pow_u64(x, ord / ell))) ord /= ell;
    return Int(ord);
}

bool FieldCtx::is_dth_power(const FieldElem& x, long long d) const {
    check(x);
    if (is_zero(x)) throw ValidationError("is_dth_power: x = 0");
    if (d < 1 || (card_ - 1) % d != 0)
        throw ValidationError("is_dth_power: d does not divide p^k - 1");
    if (d == 1) return true;
    if (has_tables_) return log_[index_of(x)] % (uint64_t)d == 0;
    return is_one(pow(x, (card_ - 1) / d));
}

void FieldCtx::ensure_baby_table() const {
    std::call_once(lazy_->baby_once, [this] {
        uint64_t q1 = size() - 1;
        lazy_->baby_m = (uint64_t)std::ceil(std::sqrt((double)q1)) + 1;
        const FieldElem& g = generator();
        FieldElem x = one();
        for (uint64_t j = 0; j < lazy_->baby_m; ++j) {
            lazy_->baby.emplace(index_of(x), (uint32_t)j);
            x = mul(x, g);
        }
        lazy_->giant_step = inv(x);  // g^{-m}
    });
}

uint64_t FieldCtx::dlog(const FieldElem& x) const {
    check(x);
    if (is_zero(x)) throw ValidationError("dlog of zero");
    if (has_tables_) return log_[index_of(x)];
    ensure_baby_table();
    uint64_t q1 = size() - 1;
    FieldElem y = x;
    for (uint64_t i = 0; i * lazy_->baby_m <= q1; ++i) {
        auto it = lazy_->baby.find(index_of(y));
        if (it != lazy_->baby.end()) return (i * lazy_->baby_m + it->second) % q1;
        y = mul(y, lazy_->giant_step);
    }
    throw ConsistencyError("dlog: BSGS exhausted");
}

std::vector<FieldElem> FieldCtx::dth_roots(const FieldElem& x, long long d) const {
    check(x);
    if (d < 1 || (card_ - 1) % d != 0)
        throw ValidationError("dth_roots: d does not divide p^k - 1");
    if (is_zero(x)) return {zero()};
    uint64_t q1 = size() - 1;
    uint64_t t = dlog(x);
    if (t % (uint64_t)d != 0) return {};
    uint64_t step = q1 / (uint64_t)d;
    std::vector<FieldElem> roots;
    roots.reserve((size_t)d);
    if (has_tables_) {
        uint64_t l0 = t / (uint64_t)d;
        for (long long j = 0; j < d; ++j)
            roots.push_back(elem_at(expo_[(l0 + (uint64_t)j * step) % q1]));
    } else {
        FieldElem r = pow_u64(generator(), t / (uint64_t)d);
        FieldElem zeta = pow_u64(generator(), step);
        for (long long j = 0; j < d; ++j) {
            roots.push_back(r);
            r = mul(r, zeta);
        }
    }
    return roots;
}

FieldElem FieldCtx::primitive_root_of_unity(long long T) const {
    if (T < 1 || (card_ - 1) % T != 0)
        throw ValidationError("root_of_unity: T does not divide p^k - 1");
    return pow_u64(generator(), (uint64_t)((card_ - 1) / T));
}

std::vector<FieldElem> FieldCtx::roots_of_unity(long long T) const {
    FieldElem zeta = primitive_root_of_unity(T);
    std::vector<FieldElem> out;
    out.reserve((size_t)T);
    FieldElem x = one();
    for (long long j = 0; j < T; ++j) {
        out.push_back(x);
        x = mul(x, zeta);
    }
    return out;
}

Embedding::Embedding(const FieldCtx& sub, const FieldCtx& big) : sub_(&sub), big_(&big) {
    if (sub.p() != big.p() || big.k() % sub.k() != 0)
        throw ValidationError("embed: subfield degree does not divide");
    // first root of the small modulus in canonical order of the big field
    const auto& f = sub.modulus();
    for (uint64_t idx = 0; idx < big.size(); ++idx) {
        FieldElem cand = big.elem_at(idx);
        FieldElem acc = big.zero();
        for (uint32_t i = (uint32_t)f.size(); i-- > 0;)
            acc = big.add(big.mul(acc, cand), big.scalar(f[i]));
        if (big.is_zero(acc)) {
            root_ = cand;
            return;
        }
    }
    throw ConsistencyError("embed: modulus has no root in the big field");
}

FieldElem Embedding::apply(const FieldElem& x) const {
    if (x.field_id != sub_->id() || x.c.size() != sub_->k())
        throw ValidationError("embed: element not in the source field");
    FieldElem acc = big_->zero();
    for (uint32_t i = sub_->k(); i-- > 0;)
        acc = big_->add(big_->mul(acc, root_), big_->scalar(x.c[i]));
    return acc;
}

FieldElem solve_rho(const FieldCtx& ctx, long long n) {
    if (ctx.cardinality() != Int(n) * n)
        throw ValidationError("solve_rho: field is not F_{n^2}");
    for (uint64_t idx = 0; idx < ctx.size(); ++idx) {
        FieldElem e = ctx.elem_at(idx);
        if (ctx.is_one(ctx.add(e, ctx.pow(e, Int(n))))) return e;
    }
    throw ConsistencyError("solve_rho: no solution found");
}

}  // namespace gklab
