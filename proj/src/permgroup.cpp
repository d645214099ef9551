#include "tamelab/permgroup.hpp"

#include <algorithm>
#include <unordered_map>

namespace tamelab::grp {

PermGroup::PermGroup(int degree, std::vector<Perm> gens, int max_degree) : degree_(degree) {
    if (max_degree > 0 && degree > max_degree)
        throw ResourceError("degree bound exceeded: " + std::to_string(degree) + " > " +
                            std::to_string(max_degree));
    for (auto& g : gens) {
        if (static_cast<int>(g.size()) != degree)
            throw std::invalid_argument("generator degree mismatch");
        if (!perm_is_identity(g)) gens_.push_back(g);
    }
    if (!gens_.empty()) {
        Level lv;
        lv.base = degree_;
        for (const auto& g : gens_) {
            int m = perm_smallest_moved(g);
            if (m >= 0 && m < lv.base) lv.base = m;
        }
        lv.pos.assign(degree_, -1);
        lv.via_gen.assign(degree_, -1);
        lv.via_from.assign(degree_, -1);
        lv.gens = gens_;
        levels_.push_back(std::move(lv));
        complete_level(0);
    }
    order_ = 1;
    for (const auto& lv : levels_) order_ *= lv.orbit.size();
}

Perm PermGroup::transversal_internal(const Level& lv, int pt) const {
    std::vector<int> path;
    int p = pt;
    while (p != lv.base) {
        path.push_back(p);
        p = lv.via_from[p];
    }
    Perm u = perm_identity(degree_);
    for (size_t k = path.size(); k-- > 0;) {
        const Perm& g = lv.gens[lv.via_gen[path[k]]];
        u = perm_mul(g, u);
    }
    return u;
}

Perm PermGroup::transversal(size_t i, int pt) const { return transversal_internal(levels_[i], pt); }

Perm PermGroup::sift_from(const Perm& g, size_t from) const {
    Perm h = g;
    for (size_t j = from; j < levels_.size(); ++j) {
        const Level& lv = levels_[j];
        int delta = h[lv.base];
        if (delta == lv.base) continue;
        if (lv.pos[delta] < 0) return h;
        h = perm_mul(perm_inv(transversal_internal(lv, delta)), h);
    }
    return h;
}

Perm PermGroup::sift(const Perm& g) const { return sift_from(g, 0); }

bool PermGroup::contains(const Perm& g) const {
    if (static_cast<int>(g.size()) != degree_) return false;
    return perm_is_identity(sift(g));
}

void PermGroup::rebuild_orbit(size_t level) {
    Level& lv = levels_[level];
    std::fill(lv.pos.begin(), lv.pos.end(), -1);
    lv.orbit.clear();
    lv.orbit.push_back(lv.base);
    lv.pos[lv.base] = 0;
    for (size_t h = 0; h < lv.orbit.size(); ++h) {
        int p = lv.orbit[h];
        for (size_t gi = 0; gi < lv.gens.size(); ++gi) {
            int q = lv.gens[gi][p];
            if (lv.pos[q] < 0) {
                lv.pos[q] = static_cast<int>(lv.orbit.size());
                lv.orbit.push_back(q);
                lv.via_gen[q] = static_cast<int>(gi);
                lv.via_from[q] = p;
            }
        }
    }
}

// Establish the chain condition at this level, assuming it holds below.
void PermGroup::complete_level(size_t level) {
    rebuild_orbit(level);
    size_t norb = levels_[level].orbit.size();
    size_t ngen = levels_[level].gens.size();
    for (size_t oi = 0; oi < norb; ++oi) {
        for (size_t gi = 0; gi < ngen; ++gi) {
            Perm h;
            {
                const Level& lv = levels_[level];
                int p = lv.orbit[oi];
                const Perm& s = lv.gens[gi];
                Perm up = transversal_internal(lv, p);
                Perm usp = transversal_internal(lv, s[p]);
                h = perm_mul(perm_inv(usp), perm_mul(s, up));
            }
            if (perm_is_identity(h)) continue;
            Perm r = sift_from(h, level + 1);
            if (perm_is_identity(r)) continue;
            // new strong generator; r fixes bases 0..level
            size_t m = levels_.size();
            for (size_t j = level + 1; j < levels_.size(); ++j) {
                if (r[levels_[j].base] != levels_[j].base) {
                    m = j;
                    break;
                }
            }
            if (m == levels_.size()) {
                Level nl;
                nl.base = perm_smallest_moved(r);
                nl.pos.assign(degree_, -1);
                nl.via_gen.assign(degree_, -1);
                nl.via_from.assign(degree_, -1);
                levels_.push_back(std::move(nl));
            }
            for (size_t j = level + 1; j <= m; ++j) levels_[j].gens.push_back(r);
            for (size_t j = m; j > level; --j) complete_level(j);
            // the orbit and generators at this level are unchanged; continue
        }
    }
}

std::vector<Perm> PermGroup::elements(uint64_t cap) const {
    if (order_ > cap) throw ResourceError("element enumeration above cap");
    std::vector<Perm> out;
    out.reserve(order_);
    for_each_element([&](const Perm& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

void PermGroup::for_each_element(const std::function<bool(const Perm&)>& fn) const {
    std::vector<size_t> idx(levels_.size(), 0);
    std::vector<Perm> partial(levels_.size() + 1);
    partial[0] = perm_identity(degree_);
    if (levels_.empty()) {
        fn(partial[0]);
        return;
    }
    size_t L = 0;
    for (;;) {
        if (idx[L] < levels_[L].orbit.size()) {
            Perm u = transversal_internal(levels_[L], levels_[L].orbit[idx[L]]);
            partial[L + 1] = perm_mul(partial[L], u);
            if (L + 1 == levels_.size()) {
                if (!fn(partial[L + 1])) return;
                ++idx[L];
            } else {
                ++L;
                idx[L] = 0;
            }
        } else {
            if (L == 0) return;
            --L;
            ++idx[L];
        }
    }
}

std::vector<int> PermGroup::orbit_of(int pt) const {
    std::vector<int> orbit{pt};
    std::vector<char> seen(degree_, 0);
    seen[pt] = 1;
    for (size_t h = 0; h < orbit.size(); ++h) {
        for (const auto& g : gens_) {
            int q = g[orbit[h]];
            if (!seen[q]) {
                seen[q] = 1;
                orbit.push_back(q);
            }
        }
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

ConjOrbit conjugation_orbit(const PermGroup& G, const Perm& x, uint64_t cap, CancelToken* tok) {
    ConjOrbit out;
    std::unordered_map<Perm, size_t, PermHash> pos;
    std::vector<Perm> reps;  // reps[i] conjugates x to orbit[i]
    out.orbit.push_back(x);
    pos[x] = 0;
    reps.push_back(perm_identity(G.degree()));
    for (size_t h = 0; h < out.orbit.size(); ++h) {
        if (tok) tok->check();
        if (out.orbit.size() > cap) throw ResourceError("conjugation orbit above cap");
        for (const auto& g : G.generators()) {
            Perm y = perm_conj(g, out.orbit[h]);
            auto it = pos.find(y);
            if (it == pos.end()) {
                pos[y] = out.orbit.size();
                out.orbit.push_back(y);
                reps.push_back(perm_mul(g, reps[h]));
            } else {
                Perm s = perm_mul(perm_inv(reps[it->second]), perm_mul(g, reps[h]));
                if (!perm_is_identity(s)) out.stab_gens.push_back(s);
            }
        }
    }
    return out;
}

PermGroup centralizer_element(const PermGroup& G, const Perm& x, CancelToken* tok) {
    ConjOrbit co = conjugation_orbit(G, x, 8000000, tok);
    std::vector<Perm> keep;
    PermGroup C(G.degree(), keep);
    uint64_t target = G.order() / co.orbit.size();
    for (const auto& s : co.stab_gens) {
        if (C.order() == target) break;
        if (!C.contains(s)) {
            keep.push_back(s);
            C = PermGroup(G.degree(), keep);
        }
    }
    if (C.order() != target) throw std::logic_error("centralizer_element: order mismatch");
    return C;
}

}  // namespace tamelab::grp
