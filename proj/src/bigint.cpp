#include "tamelab/bigint.hpp"

#include <stdexcept>
#include <algorithm>

namespace tamelab {

BigUint::BigUint(uint64_t v) {
    while (v) {
        limbs_.push_back(static_cast<uint32_t>(v & 0xffffffffu));
        v >>= 32;
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::pow(uint64_t base, unsigned exp) {
    BigUint r(1);
    BigUint b(base);
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

BigUint& BigUint::operator*=(const BigUint& rhs) {
    *this = *this * rhs;
    return *this;
}

BigUint BigUint::operator*(const BigUint& rhs) const {
    if (is_zero() || rhs.is_zero()) return BigUint();
    BigUint out;
    out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < rhs.limbs_.size(); ++j) {
            uint64_t cur = out.limbs_[i + j] +
                           static_cast<uint64_t>(limbs_[i]) * rhs.limbs_[j] + carry;
            out.limbs_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + rhs.limbs_.size();
        while (carry) {
            uint64_t cur = out.limbs_[k] + carry;
            out.limbs_[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    out.trim();
    return out;
}

BigUint& BigUint::operator*=(uint64_t s) {
    *this = *this * BigUint(s);
    return *this;
}

bool BigUint::operator<(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size()) return limbs_.size() < rhs.limbs_.size();
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i];
    }
    return false;
}

uint32_t BigUint::div_small(uint32_t d) {
    if (d == 0) throw std::invalid_argument("BigUint: division by zero");
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<uint32_t>(rem);
}

bool BigUint::divisible(uint32_t d) const {
    BigUint copy = *this;
    return copy.div_small(d) == 0;
}

int BigUint::vp(uint32_t p) const {
    if (is_zero()) throw std::invalid_argument("BigUint: valuation of zero");
    BigUint copy = *this;
    int k = 0;
    for (;;) {
        BigUint next = copy;
        if (next.div_small(p) != 0) break;
        copy = next;
        ++k;
    }
    return k;
}

uint64_t BigUint::to_u64() const {
    if (limbs_.size() > 2) throw std::overflow_error("BigUint: value exceeds 64 bits");
    uint64_t v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
    return v;
}

std::string BigUint::str() const {
    if (is_zero()) return "0";
    BigUint copy = *this;
    std::string out;
    while (!copy.is_zero()) {
        uint32_t r = copy.div_small(1000000000u);
        std::string chunk = std::to_string(r);
        if (!copy.is_zero()) chunk = std::string(9 - chunk.size(), '0') + chunk;
        out = chunk + out;
    }
    return out;
}

}  // namespace tamelab
