#include "tamelab/named_groups.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "tamelab/matgroup.hpp"

namespace tamelab::grp {

namespace {

Perm cyc(int n, std::vector<std::vector<int>> cycles) {
    Perm p = perm_identity(n);
    for (auto& c : cycles)
        for (size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
    return p;
}

PermGroup check_order(PermGroup g, uint64_t expect, const std::string& name) {
    if (g.order() != expect)
        throw std::logic_error("named group " + name + ": order " + std::to_string(g.order()) +
                               " != expected " + std::to_string(expect));
    return g;
}

PermGroup build(const std::string& name) {
    if (name == "GL3_2")
        return check_order(
            mat_perm_image(make_SL(3, 2), MatAction::ProjectivePoints).group, 168, name);
    if (name == "GL4_2")
        return check_order(
            mat_perm_image(make_SL(4, 2), MatAction::ProjectivePoints).group, 20160, name);
    if (name == "A6")
        return check_order(PermGroup(6, {cyc(6, {{0, 1, 2}}), cyc(6, {{1, 2, 3, 4, 5}})}), 360,
                           name);
    if (name == "SL2_3")
        return check_order(mat_perm_image(make_SL(2, 3), MatAction::NonzeroVectors).group, 24,
                           name);
    if (name == "SL2_9")
        return check_order(mat_perm_image(make_SL(2, 9), MatAction::NonzeroVectors).group, 720,
                           name);
    if (name == "PSL2_9")
        return check_order(mat_perm_image(make_SL(2, 9), MatAction::ProjectivePoints).group, 360,
                           name);
    if (name == "PSL2_17")
        return check_order(mat_perm_image(make_SL(2, 17), MatAction::ProjectivePoints).group,
                           2448, name);
    if (name == "PSL2_81")
        return check_order(mat_perm_image(make_SL(2, 81), MatAction::ProjectivePoints).group,
                           265680, name);
    if (name == "SL2_81") {
        // projective points (82) plus cosets of { upper triangular, a^5 = 1 }
        // (order 405, index 1312); the combined action is faithful
        const GF& F = gf(81);
        auto member = [&F](const Mat& m) {
            if (m.at(1, 0) != 0) return false;
            int a = m.at(0, 0);
            return F.pow(a, 5) == 1;
        };
        return check_order(mat_proj_plus_coset_action(make_SL(2, 81), member, 1312), 531360,
                           name);
    }
    if (name == "Sz2")
        return check_order(PermGroup(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 2, 4, 3}})}), 20,
                           name);
    if (name == "SU3_2")
        return check_order(mat_perm_image(make_SU(3, 2), MatAction::NonzeroVectors).group, 216,
                           name);
    if (name == "PSU3_2")
        return check_order(mat_perm_image(make_SU(3, 2), MatAction::ProjectivePoints).group, 72,
                           name);
    if (name == "Sp4_3")
        return check_order(mat_perm_image(make_Sp(4, 3), MatAction::NonzeroVectors).group, 51840,
                           name);
    if (name == "SL3_5")
        return check_order(mat_perm_image(make_SL(3, 5), MatAction::ProjectivePoints).group,
                           372000, name);
    if (name == "SO4p_2")
        return check_order(
            mat_perm_image(make_O_quadratic(4, +1, 2), MatAction::NonzeroVectors).group, 72,
            name);
    if (name == "SO4m_2")
        return check_order(
            mat_perm_image(make_O_quadratic(4, -1, 2), MatAction::NonzeroVectors).group, 120,
            name);
    throw std::invalid_argument("unknown group name: " + name);
}

}  // namespace

const PermGroup& named_group(const std::string& name) {
    static std::map<std::string, PermGroup> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, build(name)).first;
    return it->second;
}

std::vector<std::string> named_group_list() {
    return {"GL3_2",  "A6",     "SL2_9",  "PSL2_9", "SL2_81", "PSL2_81", "PSL2_17", "Sz2",
            "PSU3_2", "SU3_2",  "Sp4_3",  "SL3_5",  "SO4p_2", "SO4m_2",  "GL4_2",   "SL2_3"};
}

bool is_named_group(const std::string& name) {
    for (const auto& n : named_group_list())
        if (n == name) return true;
    return false;
}

PermGroup construct_group(const std::string& kind, int n, int q, int eps, int max_degree) {
    if (kind == "SL") {
        auto M = make_SL(n, q);
        auto img = mat_perm_image(M, MatAction::ProjectivePoints, max_degree);
        return img.group;
    }
    if (kind == "GL") {
        auto M = make_GL(n, q);
        return mat_perm_image(M, MatAction::NonzeroVectors, max_degree).group;
    }
    if (kind == "Sp") {
        auto M = make_Sp(n, q);
        return check_order(mat_perm_image(M, MatAction::NonzeroVectors, max_degree).group,
                           order_Sp(n, q), M.name);
    }
    if (kind == "SU") {
        auto M = make_SU(n, q);
        return check_order(mat_perm_image(M, MatAction::NonzeroVectors, max_degree).group,
                           order_SU(n, q), M.name);
    }
    if (kind == "O") {
        auto M = make_O_quadratic(n, eps, q);
        return check_order(mat_perm_image(M, MatAction::NonzeroVectors, max_degree).group,
                           order_O_eps(n, eps, q), M.name);
    }
    throw std::invalid_argument("construct_group: unknown kind " + kind);
}

}  // namespace tamelab::grp
