#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tamelab::grp {

// A permutation of {0..n-1} stored by its image list.
using Perm = std::vector<int>;

Perm perm_identity(int n);
bool perm_is_identity(const Perm& p);
// (a*b)(x) = a(b(x)): apply b first
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inv(const Perm& p);
Perm perm_conj(const Perm& g, const Perm& x);  // g x g^-1
uint64_t perm_order(const Perm& p);
int perm_smallest_moved(const Perm& p);  // -1 if identity
std::vector<int> perm_cycle_type(const Perm& p);
std::string perm_cycles_str(const Perm& p);

struct PermHash {
    size_t operator()(const Perm& p) const {
        size_t h = 1469598103934665603ull;
        for (int x : p) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace tamelab::grp
