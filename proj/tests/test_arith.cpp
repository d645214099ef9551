#include <doctest.h>

#include "tamelab/arith.hpp"
#include "tamelab/bigint.hpp"

using namespace tamelab;
using namespace tamelab::arith;

TEST_CASE("valuations") {
    CHECK(vp(2, 24) == 3);
    CHECK(vp(3, 1) == 0);
    CHECK(vp(5, 15) == 1);
    CHECK(vp(2, -8) == 3);
    CHECK_THROWS_AS(vp(2, 0), ArithError);
}

TEST_CASE("vp_qn_minus_1 examples and formula agreement") {
    CHECK(vp_qn_minus_1(3, 4, 3) == 2);   // 63 = 9*7
    CHECK(vp_qn_minus_1(2, 5, 2) == 3);   // 24
    CHECK(vp_qn_minus_1(5, 6, 1) == 1);   // 5
    CHECK_THROWS_AS(vp_qn_minus_1(3, 6, 2), ArithError);
    // formula hypothesis range: the check is internal, so just exercise it
    for (uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        for (uint64_t q = 2; q <= 30; ++q) {
            if (q % p == 0) continue;
            for (uint64_t n = 1; n <= 60; ++n) CHECK(vp_qn_minus_1(p, q, n) >= 0);
        }
    }
    for (uint64_t q = 3; q <= 30; q += 2)
        for (uint64_t n = 1; n <= 60; ++n) CHECK(vp_qn_minus_1(2, q, n) >= 0);
}

TEST_CASE("ord_mod") {
    CHECK(ord_mod(2, 5) == 4);
    CHECK(ord_mod(4, 5) == 2);
    CHECK(ord_mod(1, 7) == 1);
    CHECK_THROWS_AS(ord_mod(10, 5), ArithError);
}

TEST_CASE("closed subgroup comparison") {
    CHECK_FALSE(same_closed_subgroup(2, 3, 5));
    CHECK(same_closed_subgroup(5, 2, 3));
    CHECK_FALSE(same_closed_subgroup(5, 2, 7));
    // equivalence relation on a small sample, checked against the depth oracle
    for (uint64_t p : {3ull, 5ull, 7ull, 13ull}) {
        std::vector<uint64_t> qs;
        for (uint64_t q = 2; q <= 30; ++q)
            if (q % p) qs.push_back(q);
        for (uint64_t a : qs)
            for (uint64_t b : qs) {
                bool ab = same_closed_subgroup(p, a, b);
                CHECK(ab == same_closed_subgroup(p, b, a));
                if (ab)
                    for (uint64_t c : qs)
                        if (same_closed_subgroup(p, b, c)) CHECK(same_closed_subgroup(p, a, c));
            }
    }
}

TEST_CASE("closed subgroup full depth-12 oracle grid") {
    // p <= 13, q, q2 <= 100 (acceptance criterion scope)
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        for (uint64_t q = 2; q <= 100; ++q) {
            if (q % p == 0) continue;
            for (uint64_t q2 = q; q2 <= 100; ++q2) {
                if (q2 % p == 0) continue;
                CHECK_NOTHROW(same_closed_subgroup(p, q, q2, 12));
            }
        }
    }
}

TEST_CASE("replacement prime power") {
    uint32_t b = 0;
    auto r1 = replacement_prime_power(3, PrimePower(2, 2), 2, false, &b);
    CHECK(b == 2);
    CHECK(r1.value() == 4);
    auto r2 = replacement_prime_power(5, PrimePower(7, 1), 2, false, &b);
    CHECK(b == 5);
    CHECK(r2.value() == 32);
    // identity case: q already a power of r0 with admissible exponent
    auto r3 = replacement_prime_power(5, PrimePower(2, 4), 2, false, &b);
    CHECK(b == 4);
    CHECK(r3.value() == 16);
    // closed form b = ((p-1)/d) p^(l-1) agreement across a grid
    for (uint64_t p : {3ull, 5ull, 7ull}) {
        uint64_t r0 = 2;
        if (ord_mod(r0, p * p) != p * (p - 1)) continue;
        for (uint64_t q : {2ull, 3ull, 4ull, 7ull, 9ull}) {
            if (q % p == 0) continue;
            auto inv = closed_subgroup_invariant(p, q);
            uint64_t expect = ((p - 1) / inv.d);
            for (int i = 1; i < inv.ell; ++i) expect *= p;
            PrimePower qq = PrimePower::from_value(q);
            replacement_prime_power(p, qq, r0, false, &b);
            CHECK(b == expect);
        }
    }
}

TEST_CASE("field module tests") {
    auto r1 = field_module_test(2, 3, 3);
    CHECK(r1.irreducible_a);
    auto r2 = field_module_test(2, 2, 3);
    CHECK_FALSE(r2.irreducible_a);
    auto r3 = field_module_test(2, 2, 1, 2);
    CHECK(r3.iso_ab);
    auto r4 = field_module_test(2, 2, 1);
    CHECK(r4.irreducible_a);  // natural F_4 module over F_2 is irreducible
    // closed form vs brute force across all small fields (oracle is internal)
    for (auto [p, emax] : std::vector<std::pair<uint64_t, unsigned>>{{2, 6}, {3, 4}, {5, 3}}) {
        for (unsigned e = 1; e <= emax; ++e) {
            uint64_t q = 1;
            for (unsigned i = 0; i < e; ++i) q *= p;
            for (uint64_t a = 1; a < q && a < 30; ++a)
                CHECK_NOTHROW(field_module_test(p, e, a, (a + 1) % (q - 1) + 1));
        }
    }
}

TEST_CASE("biguint basics") {
    BigUint x = BigUint::pow(2, 100);
    CHECK(x.vp(2) == 100);
    CHECK(x.str() == "1267650600228229401496703205376");
    BigUint y(696729600);
    CHECK(y.to_u64() == 696729600u);
    CHECK(y.vp(2) == 14);
    CHECK(y.vp(3) == 5);
    CHECK(y.vp(5) == 2);
    CHECK(y.vp(7) == 1);
}
