#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tamelab {

// Unsigned arbitrary-precision integer, base 2^32.  Only the handful of
// operations needed for group-order bookkeeping (products of cyclotomic
// factors, p-adic valuations, printing) are provided.
class BigUint {
public:
    BigUint() = default;
    BigUint(uint64_t v);

    static BigUint pow(uint64_t base, unsigned exp);

    BigUint& operator*=(const BigUint& rhs);
    BigUint operator*(const BigUint& rhs) const;
    BigUint& operator*=(uint64_t s);

    bool operator==(const BigUint& rhs) const { return limbs_ == rhs.limbs_; }
    bool operator!=(const BigUint& rhs) const { return !(*this == rhs); }
    bool operator<(const BigUint& rhs) const;

    bool is_zero() const { return limbs_.empty(); }
    // quotient in place, returns remainder; d must be nonzero
    uint32_t div_small(uint32_t d);
    bool divisible(uint32_t d) const;

    // largest k with p^k dividing *this (valuation of 0 is an error)
    int vp(uint32_t p) const;

    uint64_t to_u64() const;  // throws if it does not fit
    std::string str() const;

private:
    void trim();
    std::vector<uint32_t> limbs_;  // little endian, no trailing zeros
};

}  // namespace tamelab
