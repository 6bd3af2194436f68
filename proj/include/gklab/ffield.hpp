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

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "gklab/ints.hpp"

namespace gklab {

/// Element of F_{p^k}: residue-polynomial coefficients, little-endian,
/// length exactly k, each entry reduced mod p. `field_id` tags the owning
/// context so cross-field operand mixups fail loudly instead of silently.
struct FieldElem {
    uint32_t field_id = 0;
    std::vector<uint32_t> c;

    bool operator==(const FieldElem&) const = default;
};

/// Explicit finite field F_{p^k} with a deterministically chosen modulus:
/// the lexicographically smallest monic irreducible of degree k over F_p,
/// coefficients compared low-degree first. Construction is reproducible
/// bit-for-bit across runs.
///
/// Immutable after construction; all operations are pure and safe to call
/// from parallel workers. Fields with at most 2^16 elements carry discrete
/// log/exp tables; larger fields use exponentiation and (for root
/// extraction) lazy baby-step/giant-step logs.
class FieldCtx {
public:
    static FieldCtx build_field(uint32_t p, uint32_t k);

    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    const Int& cardinality() const { return card_; }
    uint32_t id() const { return id_; }

    /// True when the field is small enough to enumerate (fits in 64 bits).
    bool enumerable() const { return size_ != 0; }
    uint64_t size() const;

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_coeffs(std::vector<uint32_t> c) const;
    /// Image of the integer v under Z -> F_p -> F_{p^k}.
    FieldElem scalar(long long v) const;

    /// Canonical enumeration: element with index j has coefficients equal
    /// to the base-p digits of j, least significant digit first.
    FieldElem elem_at(uint64_t index) const;
    uint64_t index_of(const FieldElem& x) const;

    bool is_zero(const FieldElem& x) const;
    bool is_one(const FieldElem& x) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem div(const FieldElem& a, const FieldElem& b) const;
    /// Square-and-multiply; negative exponents go through inv. For nonzero
    /// bases the exponent is reduced mod p^k - 1 first.
    FieldElem pow(const FieldElem& a, Int e) const;
    FieldElem frobenius(const FieldElem& a) const;

    /// First element in canonical enumeration order of multiplicative
    /// order p^k - 1.
    const FieldElem& generator() const;
    Int multiplicative_order(const FieldElem& x) const;

    /// True iff x = c^d has a solution, i.e. x^{(p^k-1)/d} = 1.
    /// Requires x != 0 and d | p^k - 1.
    bool is_dth_power(const FieldElem& x, long long d) const;

    /// All c with c^d = x. Size d when x is a d-th power, 0 when it is not,
    /// and {0} for x = 0. Requires d | p^k - 1.
    std::vector<FieldElem> dth_roots(const FieldElem& x, long long d) const;

    /// generator^{(p^k-1)/T}; requires T | p^k - 1.
    FieldElem primitive_root_of_unity(long long T) const;
    std::vector<FieldElem> roots_of_unity(long long T) const;

    /// Discrete log base generator() of a nonzero element.
    uint64_t dlog(const FieldElem& x) const;

    FieldCtx(FieldCtx&&) = default;
    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

private:
    FieldCtx() = default;
    void check(const FieldElem& x) const;
    void reduce_(std::vector<uint64_t>& wide, std::vector<uint32_t>& out) const;
    FieldElem pow_u64(const FieldElem& a, uint64_t e) const;
    void ensure_generator() const;
    void ensure_baby_table() const;
    std::vector<uint64_t> size_minus_one_prime_factors() const;

    uint32_t p_ = 0, k_ = 0;
    std::vector<uint32_t> modulus_;
    Int card_;
    uint64_t size_ = 0;  // cardinality if it fits in 64 bits, else 0
    uint32_t id_ = 0;

    // log/exp tables for fields with size_ <= kLogTableLimit
    static constexpr uint64_t kLogTableLimit = 1ULL << 16;
    bool has_tables_ = false;
    std::vector<uint32_t> log_;   // element index -> dlog (kNoLog for 0)
    std::vector<uint32_t> expo_;  // dlog -> element index
    static constexpr uint32_t kNoLog = 0xffffffffu;

    // lazily computed multiplicative structure, behind a pointer so the
    // context stays movable
    struct Lazy {
        std::once_flag gen_once;
        FieldElem gen;
        std::once_flag baby_once;
        std::unordered_map<uint64_t, uint32_t> baby;  // index -> j for gen^j
        FieldElem giant_step;                         // gen^{-m}
        uint64_t baby_m = 0;
        std::once_flag fact_once;
        std::vector<uint64_t> qm1_factors;
    };
    std::unique_ptr<Lazy> lazy_;
};

/// Deterministic embedding F_{p^a} -> F_{p^b} for a | b: the residue class
/// of x maps to the root of the small modulus that comes first in the big
/// field's canonical enumeration order. Ring homomorphism.
class Embedding {
public:
    Embedding(const FieldCtx& sub, const FieldCtx& big);
    FieldElem apply(const FieldElem& x) const;
    const FieldElem& root() const { return root_; }

private:
    const FieldCtx* sub_;
    const FieldCtx* big_;
    FieldElem root_;
};

/// First rho in canonical enumeration order with rho + rho^n = 1.
/// `ctx` must be the field with n^2 elements.
FieldElem solve_rho(const FieldCtx& ctx, long long n);

}  // namespace gklab
