#include <doctest.h>

#include "tamelab/perm.hpp"
#include "tamelab/permgroup.hpp"

using namespace tamelab::grp;

namespace {
Perm cycle(int n, std::vector<std::vector<int>> cycles) {
    Perm p = perm_identity(n);
    for (auto& c : cycles)
        for (size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
    return p;
}
}  // namespace

TEST_CASE("schreier-sims on symmetric and alternating groups") {
    // S_6
    PermGroup s6(6, {cycle(6, {{0, 1}}), cycle(6, {{0, 1, 2, 3, 4, 5}})});
    CHECK(s6.order() == 720);
    // A_6
    PermGroup a6(6, {cycle(6, {{0, 1, 2}}), cycle(6, {{1, 2, 3, 4, 5}})});
    CHECK(a6.order() == 360);
    CHECK(a6.contains(cycle(6, {{0, 1}, {2, 3}})));
    CHECK_FALSE(a6.contains(cycle(6, {{0, 1}})));
    // membership via sift round trip
    auto els = a6.elements();
    CHECK(els.size() == 360);
}

TEST_CASE("dihedral and quaternion-like groups") {
    // D_8 acting on the square
    PermGroup d8(4, {cycle(4, {{0, 1, 2, 3}}), cycle(4, {{1, 3}})});
    CHECK(d8.order() == 8);
    // Mathieu-free check: PSL(2,7) on 8 points, order 168
    Perm a = cycle(8, {{0, 1, 2, 3, 4, 5, 6}});
    Perm b = cycle(8, {{1, 2, 4}, {3, 6, 5}});
    Perm c = cycle(8, {{0, 7}, {1, 6}, {2, 3}, {4, 5}});
    PermGroup psl27(8, {a, b, c});
    CHECK(psl27.order() == 168);
}

TEST_CASE("centralizer via conjugation orbit") {
    PermGroup s6(6, {cycle(6, {{0, 1}}), cycle(6, {{0, 1, 2, 3, 4, 5}})});
    Perm x = cycle(6, {{0, 1}, {2, 3}});
    PermGroup c = centralizer_element(s6, x);
    CHECK(c.order() == 16);  // C_{S6}((01)(23)) = D8 x C2
    Perm y = cycle(6, {{0, 1, 2}});
    CHECK(centralizer_element(s6, y).order() == 18);
}

TEST_CASE("large weyl-type group order") {
    // W(B_6) as signed permutations on 12 points: order 2^6 * 6! = 46080
    int n = 6;
    std::vector<Perm> gens;
    for (int i = 0; i + 1 < n; ++i) {
        Perm p = perm_identity(2 * n);
        std::swap(p[2 * i], p[2 * (i + 1)]);
        std::swap(p[2 * i + 1], p[2 * (i + 1) + 1]);
        gens.push_back(p);
    }
    Perm s = perm_identity(2 * n);
    std::swap(s[0], s[1]);
    gens.push_back(s);
    PermGroup w(2 * n, gens);
    CHECK(w.order() == 46080);
}
