#include <doctest.h>

#include "tamelab/backtrack.hpp"
#include "tamelab/named_groups.hpp"
#include "tamelab/smallgroup.hpp"
#include "tamelab/subgroups.hpp"

using namespace tamelab::grp;

TEST_CASE("named group orders") {
    CHECK(named_group("GL3_2").order() == 168);
    CHECK(named_group("A6").order() == 360);
    CHECK(named_group("Sz2").order() == 20);
    CHECK(named_group("PSU3_2").order() == 72);
    CHECK(named_group("SU3_2").order() == 216);
    CHECK(named_group("SO4p_2").order() == 72);
    CHECK(named_group("SO4m_2").order() == 120);
    CHECK(named_group("Sp4_3").order() == 51840);
    CHECK(named_group("SL2_9").order() == 720);
}

TEST_CASE("sylow subgroups and recognition") {
    // Sz(2), p = 2: C4
    {
        auto S = sylow_subgroup(named_group("Sz2"), 2);
        CHECK(S.order() == 4);
        auto sg = SmallGroup::from_perms(S.degree(), S.generators());
        CHECK(sg.abelian_invariants() == std::vector<int>{4});
    }
    // GL3(2), p = 2: D8
    {
        auto S = sylow_subgroup(named_group("GL3_2"), 2);
        CHECK(S.order() == 8);
        auto sg = SmallGroup::from_perms(S.degree(), S.generators());
        CHECK(sg.isomorphic_to(model_dihedral(8)));
    }
    // SL2(9), p = 2: Q16
    {
        auto S = sylow_subgroup(named_group("SL2_9"), 2);
        CHECK(S.order() == 16);
        auto sg = SmallGroup::from_perms(S.degree(), S.generators());
        CHECK(sg.isomorphic_to(model_quaternion(16)));
        CHECK_FALSE(sg.isomorphic_to(model_dihedral(16)));
    }
}

TEST_CASE("centralizer, normalizer, conjugacy") {
    // C_{Q8}(center) = Q8
    auto q8 = model_quaternion(8);
    auto z = q8.center();
    CHECK(z.size() == 2);
    CHECK(small_centralizer(q8, z).size() == 8);

    // N_{A6}(Syl_2) = Syl_2 (self-normalizing)
    const auto& a6 = named_group("A6");
    auto s = sylow_subgroup(a6, 2);
    auto elems = s.elements();
    uint64_t conjugates = 0;
    auto n = normalizer_subgroup(a6, elems, &conjugates);
    CHECK(n.order() == 8);
    CHECK(conjugates == 45);

    // the two Klein fours of D8 <= GL3(2) are not conjugate in GL3(2)
    const auto& g = named_group("GL3_2");
    auto syl = sylow_subgroup(g, 2);
    auto sg = SmallGroup::from_perms(syl.degree(), syl.generators());
    auto classes = subgroup_classes(sg);
    std::vector<std::vector<int>> kleins;
    for (const auto& rep : classes.reps)
        if (rep.size() == 4 && sub_is_abelian(sg, rep) && sg.order_of(rep[1]) == 2 &&
            sg.order_of(rep[2]) == 2)
            kleins.push_back(rep);
    REQUIRE(kleins.size() == 2);
    // transporter search between the two subgroups' generator tuples must fail
    // for every generator correspondence
    auto perm_of = [&](int idx) { return sg.element_perms()[idx]; };
    std::vector<Perm> v1, v2;
    for (int x : kleins[0])
        if (x) v1.push_back(perm_of(x));
    for (int x : kleins[1])
        if (x) v2.push_back(perm_of(x));
    bool conj = false;
    // try all bijections between the three involutions
    int order[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& o : order) {
        std::vector<std::pair<Perm, Perm>> pairs;
        for (int i = 0; i < 3; ++i) pairs.emplace_back(v1[i], v2[o[i]]);
        if (transporter_tuple(g, pairs)) conj = true;
    }
    CHECK_FALSE(conj);
}

TEST_CASE("subgroup enumeration small") {
    auto s4 = model_symmetric(4);
    auto c = subgroup_classes(s4);
    CHECK(c.reps.size() == 11);
    auto q8 = model_quaternion(8);
    CHECK(subgroup_classes(q8).reps.size() == 6);
    // A5: 9 classes
    PermGroup a5(5, {Perm{1, 2, 0, 3, 4}, Perm{0, 1, 3, 4, 2}, Perm{1, 0, 3, 2, 4}});
    CHECK(a5.order() == 60);
    auto ca5 = subgroups_up_to_conjugacy(a5);
    CHECK(ca5.reps.size() == 9);
    // cyclic-extension route agrees with brute force
    auto big = subgroup_classes_cyclic_extension(a5);
    CHECK(big.reps.size() == 9);
    uint64_t total_brute = ca5.total, total_ce = 0;
    for (auto s : big.class_sizes) total_ce += s;
    CHECK(total_ce == total_brute);
}

TEST_CASE("automorphism groups") {
    auto q8 = model_quaternion(8);
    CHECK(q8.automorphisms().size() == 24);
    // Out(Q32) = C4 x C2
    auto q32 = model_quaternion(32);
    auto auts = q32.automorphisms();
    auto inns = q32.inner_automorphisms();
    CHECK(auts.size() / inns.size() == 8);
    {
        PermGroup A = q32.automorphism_permgroup();
        auto small = SmallGroup::from_perms(A.degree(), A.generators());
        std::vector<int> inn_idx;
        for (const auto& m : inns) {
            Perm p(m.begin(), m.end());
            auto ix = small.index_of_perm(p);
            REQUIRE(ix.has_value());
            inn_idx.push_back(*ix);
        }
        std::sort(inn_idx.begin(), inn_idx.end());
        auto out = quotient_group(small, inn_idx);
        CHECK(out.abelian_invariants() == std::vector<int>{4, 2});
    }
    // Out(D16) = C2 x C2
    auto d16 = model_dihedral(16);
    auto autsd = d16.automorphisms();
    auto innsd = d16.inner_automorphisms();
    CHECK(autsd.size() / innsd.size() == 4);
}

TEST_CASE("transporter tuple basics") {
    const auto& a6 = named_group("A6");
    // conjugate 3-cycles
    Perm x = perm_identity(6);
    x[0] = 1; x[1] = 2; x[2] = 0;
    Perm y = perm_identity(6);
    y[3] = 4; y[4] = 5; y[5] = 3;
    auto g = conjugating_element(a6, x, y);
    REQUIRE(g.has_value());
    CHECK(perm_conj(*g, x) == y);
    // double transpositions vs 3-cycles: no solution
    Perm z = perm_identity(6);
    z[0] = 1; z[1] = 0; z[2] = 3; z[3] = 2;
    CHECK_FALSE(conjugating_element(a6, x, z).has_value());
}
