#include "tamelab/perm.hpp"

#include <algorithm>
#include <numeric>

namespace tamelab::grp {

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool perm_is_identity(const Perm& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

Perm perm_mul(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

Perm perm_inv(const Perm& p) {
    Perm q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
}

Perm perm_conj(const Perm& g, const Perm& x) {
    Perm r(g.size());
    for (size_t i = 0; i < g.size(); ++i) r[g[i]] = g[x[i]];
    return r;
}

uint64_t perm_order(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    uint64_t ord = 1;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        uint64_t len = 0;
        size_t j = i;
        do {
            seen[j] = 1;
            j = static_cast<size_t>(p[j]);
            ++len;
        } while (j != i);
        ord = std::lcm(ord, len);
    }
    return ord;
}

int perm_smallest_moved(const Perm& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return static_cast<int>(i);
    return -1;
}

std::vector<int> perm_cycle_type(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    std::vector<int> type;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        do {
            seen[j] = 1;
            j = static_cast<size_t>(p[j]);
            ++len;
        } while (j != i);
        type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
}

std::string perm_cycles_str(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    std::string out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) {
            seen[i] = 1;
            continue;
        }
        out += '(';
        size_t j = i;
        bool first = true;
        do {
            if (!first) out += ' ';
            out += std::to_string(j);
            first = false;
            seen[j] = 1;
            j = static_cast<size_t>(p[j]);
        } while (j != i);
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

}  // namespace tamelab::grp
