#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace tamelab::arith {

struct ArithError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_prime(uint64_t n);

// largest k with p^k | n; n must be nonzero
int vp(uint64_t p, int64_t n);

uint64_t gcd_u64(uint64_t a, uint64_t b);
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m);
uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t m);

// least k >= 1 with q^k = 1 mod m; requires gcd(q, m) = 1
uint64_t ord_mod(uint64_t q, uint64_t m);

// v_p(q^n - 1), computed mod a large power of p.  When q = 1 mod p (and mod 4
// if p = 2) the result is cross-checked against v_p(q-1) + v_p(n).
int vp_qn_minus_1(uint64_t p, uint64_t q, uint64_t n);

// A prime power q = p0^b.  For very large b the integer value may not fit in
// 64 bits; downstream arithmetic then works modularly from (p0, b).
struct PrimePower {
    uint64_t p0 = 0;
    uint32_t b = 0;
    bool fits = false;
    uint64_t q = 0;  // valid only when fits

    PrimePower() = default;
    PrimePower(uint64_t p0_, uint32_t b_);
    static PrimePower from_value(uint64_t q);  // factors q, throws if not a prime power

    uint64_t value() const {
        if (!fits) throw ArithError("prime power exceeds 64 bits");
        return q;
    }
    uint64_t mod(uint64_t m) const;  // p0^b mod m
};

// Invariant of the closed subgroup of Z_p^x generated by q.
// For odd p: (d, ell) with d = ord_p(q) and ell = v_p(q^d - 1).
// For p = 2: (v_2(q-1), v_2(q+1)).
struct ClosedSubgroupInvariant {
    uint64_t p;
    uint64_t d = 0;
    int ell = 0;
    int a = 0, c = 0;
    bool operator==(const ClosedSubgroupInvariant&) const = default;
};

ClosedSubgroupInvariant closed_subgroup_invariant(uint64_t p, const PrimePower& q);
ClosedSubgroupInvariant closed_subgroup_invariant(uint64_t p, uint64_t q);

// <q> = <q2> as closed subgroups of Z_p^x, decided by the invariant and
// cross-checked against subgroup comparison mod p^N for N <= depth.
bool same_closed_subgroup(uint64_t p, uint64_t q, uint64_t q2, int depth = 12);
bool same_closed_subgroup(uint64_t p, const PrimePower& q, const PrimePower& q2, int depth = 12);

// <q2bar> = <-q> as closed subgroups (the relation used when untwisting).
bool closed_subgroup_of_minus(uint64_t p, const PrimePower& q, const PrimePower& q2, int depth = 12);

// <-1, q> = <-1, q2> as closed subgroups of Z_2^x.
bool same_closed_subgroup_with_minus_one(const PrimePower& q, const PrimePower& q2, int depth = 12);

// Smallest b with <r0^b> = <q> closed in Z_p^x and b | (p-1)p^l for some l.
// r0 must be a prime whose class generates (Z/p^2)^x.  If negate is set the
// target subgroup is <-q> instead.
PrimePower replacement_prime_power(uint64_t p, const PrimePower& q, uint64_t r0,
                                   bool negate = false, uint32_t* b_out = nullptr);

// F_q^x-module structure on F_q with action x -> lambda^a x.
// irreducible: (q-1)/gcd(a,q-1) divides no p^t-1 with t | e, t < e.
// iso: a = b p^i (mod q-1) for some i.
// Both verified against brute-force module searches for q <= 1024.
struct FieldModuleResult {
    bool irreducible_a;
    bool iso_ab;
};
FieldModuleResult field_module_test(uint64_t p, unsigned e, uint64_t a,
                                    std::optional<uint64_t> b = std::nullopt);

}  // namespace tamelab::arith
