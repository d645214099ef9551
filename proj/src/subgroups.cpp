#include "tamelab/subgroups.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace tamelab::grp {

namespace {

struct SubHash {
    size_t operator()(const Sub& s) const {
        uint64_t h = 14695981039346656037ull;
        for (int x : s) {
            h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

}  // namespace

std::vector<Sub> all_subgroups(const SmallGroup& G, size_t cap) {
    std::unordered_set<Sub, SubHash> seen;
    std::vector<Sub> out;
    std::vector<std::vector<int>> genlists;

    Sub triv{0};
    out.push_back(triv);
    genlists.push_back({});
    seen.insert(triv);

    for (size_t h = 0; h < out.size(); ++h) {
        Sub cur = out[h];
        std::vector<int> gens = genlists[h];
        for (int x = 1; x < G.size(); ++x) {
            if (std::binary_search(cur.begin(), cur.end(), x)) continue;
            auto g2 = gens;
            g2.push_back(x);
            Sub cl = G.closure(g2);
            if (seen.insert(cl).second) {
                if (out.size() >= cap) throw ResourceError("all_subgroups above cap");
                out.push_back(cl);
                genlists.push_back(g2);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Sub& a, const Sub& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

SubgroupClasses subgroup_classes(const SmallGroup& G, size_t cap) {
    auto subs = all_subgroups(G, cap);
    std::unordered_map<Sub, int, SubHash> index;
    for (size_t i = 0; i < subs.size(); ++i) index[subs[i]] = static_cast<int>(i);
    std::vector<int> cls(subs.size(), -1);
    SubgroupClasses out;
    out.total = subs.size();
    for (size_t i = 0; i < subs.size(); ++i) {
        if (cls[i] >= 0) continue;
        // orbit under conjugation by all elements
        std::vector<int> stack{static_cast<int>(i)};
        cls[i] = static_cast<int>(out.reps.size());
        uint64_t size = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int g = 1; g < G.size(); ++g) {
                Sub img;
                img.reserve(subs[u].size());
                for (int x : subs[u]) img.push_back(G.conj(g, x));
                std::sort(img.begin(), img.end());
                int v = index.at(img);
                if (cls[v] < 0) {
                    cls[v] = cls[i];
                    stack.push_back(v);
                    ++size;
                }
            }
        }
        out.reps.push_back(subs[i]);
        out.class_sizes.push_back(size);
    }
    return out;
}

SubgroupClasses subgroups_up_to_conjugacy(const PermGroup& G, uint64_t order_cap) {
    if (G.order() > order_cap)
        throw ResourceError("subgroups_up_to_conjugacy: order bound " + std::to_string(order_cap) +
                            " exceeded");
    if (G.order() <= 2000) {
        SmallGroup S = SmallGroup::from_perms(G.degree(), G.generators(), 2048);
        auto out = subgroup_classes(S);
        // completeness identity: sum of class sizes equals the total count,
        // and each class size equals [G : N_G(H)]
        uint64_t sum = 0;
        for (size_t i = 0; i < out.reps.size(); ++i) {
            sum += out.class_sizes[i];
            Sub n = small_normalizer(S, out.reps[i]);
            if (out.class_sizes[i] != S.size() / n.size())
                throw std::logic_error("subgroup class size / normalizer index mismatch");
        }
        if (sum != out.total) throw std::logic_error("subgroup enumeration incomplete");
        return out;
    }
    auto big = subgroup_classes_cyclic_extension(G, order_cap);
    SubgroupClasses out;
    out.reps = big.reps;
    out.class_sizes = big.class_sizes;
    out.total = 0;
    for (auto s : big.class_sizes) out.total += s;
    return out;
}

namespace {

struct IndexGroup {
    std::vector<Perm> elems;
    std::unordered_map<Perm, int, PermHash> index;
    std::vector<std::vector<int>> gen_conj;  // conjugation index maps per generator
    std::vector<int> gen_idx;

    explicit IndexGroup(const PermGroup& G, uint64_t cap) {
        if (G.order() > cap) throw ResourceError("IndexGroup: order above cap");
        elems = G.elements(cap);
        std::sort(elems.begin(), elems.end());
        for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
        for (const auto& g : G.generators()) {
            std::vector<int> cm(elems.size());
            for (size_t i = 0; i < elems.size(); ++i) cm[i] = index.at(perm_conj(g, elems[i]));
            gen_conj.push_back(std::move(cm));
            gen_idx.push_back(index.at(g));
        }
    }
    int mul(int a, int b) const { return index.at(perm_mul(elems[a], elems[b])); }
    int inv(int a) const { return index.at(perm_inv(elems[a])); }
    int id() const { return index.at(perm_identity(static_cast<int>(elems[0].size()))); }

    std::vector<int> closure(std::vector<int> gens) const {
        std::vector<char> in(elems.size(), 0);
        std::vector<int> out{id()};
        in[out[0]] = 1;
        for (size_t h = 0; h < out.size(); ++h)
            for (int g : gens) {
                int x = mul(out[h], g);
                if (!in[x]) {
                    in[x] = 1;
                    out.push_back(x);
                }
            }
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<int> conj_sub(const std::vector<int>& s, size_t gi) const {
        std::vector<int> t;
        t.reserve(s.size());
        for (int x : s) t.push_back(gen_conj[gi][x]);
        std::sort(t.begin(), t.end());
        return t;
    }
};

struct VecIntHash {
    size_t operator()(const std::vector<int>& v) const {
        uint64_t h = 14695981039346656037ull;
        for (int x : v) {
            h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

}  // namespace

PermSubgroupClasses subgroup_classes_cyclic_extension(const PermGroup& G, uint64_t order_cap,
                                                      CancelToken* tok) {
    IndexGroup IG(G, order_cap);
    const size_t n = IG.elems.size();
    PermSubgroupClasses out;
    out.element_of = IG.elems;

    // class bookkeeping: map every subgroup seen to its class id via orbits
    std::unordered_map<std::vector<int>, int, VecIntHash> cls_of;
    std::vector<std::vector<int>>& reps = out.reps;
    std::vector<uint64_t>& sizes = out.class_sizes;
    // queue of class ids not yet processed for extension
    std::vector<int> queue;

    auto classify = [&](const std::vector<int>& s) -> int {
        auto it = cls_of.find(s);
        if (it != cls_of.end()) return it->second;
        int id = static_cast<int>(reps.size());
        reps.push_back(s);
        // orbit of s under conjugation
        std::vector<std::vector<int>> orb{s};
        cls_of[s] = id;
        uint64_t cnt = 1;
        for (size_t h = 0; h < orb.size(); ++h) {
            if (tok) tok->check();
            for (size_t gi = 0; gi < IG.gen_conj.size(); ++gi) {
                auto t = IG.conj_sub(orb[h], gi);
                if (!cls_of.count(t)) {
                    cls_of[t] = id;
                    orb.push_back(t);
                    ++cnt;
                }
            }
        }
        sizes.push_back(cnt);
        queue.push_back(id);
        return id;
    };

    // trivial subgroup and cyclic subgroups from element classes
    classify({IG.id()});
    {
        std::vector<char> done(n, 0);
        for (size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            // cyclic subgroup generated by element i; mark its elements' cyclic
            // groups as done only for the same subgroup
            std::vector<int> c = IG.closure({static_cast<int>(i)});
            for (int x : c) {
                std::vector<int> cx = IG.closure({x});
                if (cx == c) done[x] = 1;
            }
            classify(c);
        }
    }

    // 2-generated perfect subgroups as extra seeds (simple and affine pieces)
    {
        // scan pairs (class rep, element); restrict to elements of order >= 2
        std::vector<int> reps_elt;
        {
            std::vector<char> seen(n, 0);
            for (size_t i = 0; i < n; ++i) {
                if (seen[i]) continue;
                reps_elt.push_back(static_cast<int>(i));
                std::vector<int> stack{static_cast<int>(i)};
                seen[i] = 1;
                while (!stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    for (const auto& cm : IG.gen_conj) {
                        int v = cm[u];
                        if (!seen[v]) {
                            seen[v] = 1;
                            stack.push_back(v);
                        }
                    }
                }
            }
        }
        // perfect <=> the normal closure of [x,y] is all of <x,y>
        auto is_perfect = [&](const std::vector<int>& P, int x, int y) {
            int c = IG.mul(IG.mul(IG.inv(x), IG.inv(y)), IG.mul(x, y));
            std::vector<int> seed{c};
            std::vector<int> S = IG.closure(seed);
            bool changed = true;
            while (changed) {
                changed = false;
                std::vector<int> cur = seed;
                for (int s : cur)
                    for (int g : {x, y}) {
                        int t = IG.mul(IG.mul(g, s), IG.inv(g));
                        if (!std::binary_search(S.begin(), S.end(), t)) {
                            seed.push_back(t);
                            S = IG.closure(seed);
                            changed = true;
                        }
                    }
            }
            return S == P;
        };
        // the whole group, if perfect, is its own seed
        {
            std::vector<int> whole(n);
            for (size_t i = 0; i < n; ++i) whole[i] = static_cast<int>(i);
            // find a generating pair quickly from generators
            if (!IG.gen_idx.empty()) {
                int x = IG.gen_idx[0];
                for (size_t y = 0; y < n; ++y) {
                    auto P = IG.closure({x, static_cast<int>(y)});
                    if (P.size() == n) {
                        if (is_perfect(P, x, static_cast<int>(y))) classify(P);
                        break;
                    }
                }
            }
        }
        // bounded closure helper: abandon once past half the group
        auto closure_capped = [&](int x, int y) {
            std::vector<char> in(n, 0);
            std::vector<int> bfs{IG.id()};
            in[bfs[0]] = 1;
            size_t cap = n / 2;
            for (size_t h = 0; h < bfs.size(); ++h) {
                for (int g : {x, y}) {
                    int t = IG.mul(bfs[h], g);
                    if (!in[t]) {
                        if (bfs.size() >= cap) return std::vector<int>{};
                        in[t] = 1;
                        bfs.push_back(t);
                    }
                }
            }
            std::sort(bfs.begin(), bfs.end());
            return bfs;
        };
        for (int x : reps_elt) {
            if (tok) tok->check();
            if (x == IG.id()) continue;
            for (size_t y = 1; y < n; ++y) {
                std::vector<int> P = closure_capped(x, static_cast<int>(y));
                if (P.size() < 60) continue;  // no nontrivial perfect group is smaller than A5
                if (cls_of.count(P)) continue;
                if (is_perfect(P, x, static_cast<int>(y))) classify(P);
            }
        }
    }

    // cyclic extension: close the class list under prime-index normal steps
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        if (tok) tok->check();
        int id = queue[qi];
        std::vector<int> H = reps[id];
        if (H.size() == n) continue;
        // normalizer elements
        std::vector<int> N;
        {
            std::vector<char> inH(n, 0);
            for (int x : H) inH[x] = 1;
            for (size_t g = 0; g < n; ++g) {
                bool ok = true;
                int gi = static_cast<int>(g);
                int gin = IG.inv(gi);
                for (int x : H) {
                    if (!inH[IG.mul(IG.mul(gi, x), gin)]) {
                        ok = false;
                        break;
                    }
                }
                if (ok) N.push_back(gi);
            }
        }
        uint64_t idxNH = N.size() / H.size();
        if (idxNH == 1) continue;
        std::vector<char> inH(n, 0);
        for (int x : H) inH[x] = 1;
        // coset reps of H in N, deduped by smallest element of the coset
        std::vector<char> seen_coset(n, 0);
        for (int g : N) {
            if (seen_coset[g] || inH[g]) continue;
            int mn = n;
            for (int h : H) mn = std::min(mn, IG.mul(g, h));
            if (seen_coset[mn]) continue;
            seen_coset[mn] = 1;
            // order of gH in N/H
            int r = 1;
            int x = g;
            while (!inH[x]) {
                x = IG.mul(x, g);
                ++r;
            }
            bool prime = r >= 2;
            for (int d = 2; d * d <= r; ++d)
                if (r % d == 0) prime = false;
            if (!prime) continue;
            // K = union of g^i H
            std::vector<int> K;
            K.reserve(H.size() * r);
            int gp = IG.id();
            for (int i = 0; i < r; ++i) {
                for (int h : H) K.push_back(IG.mul(gp, h));
                gp = IG.mul(gp, g);
            }
            std::sort(K.begin(), K.end());
            classify(K);
        }
    }
    return out;
}

bool sub_is_abelian(const SmallGroup& G, const Sub& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (G.mul(s[i], s[j]) != G.mul(s[j], s[i])) return false;
    return true;
}

Sub small_normalizer(const SmallGroup& G, const Sub& s) {
    Sub out;
    for (int g = 0; g < G.size(); ++g) {
        bool ok = true;
        for (int x : s) {
            if (!std::binary_search(s.begin(), s.end(), G.conj(g, x))) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(g);
    }
    return out;
}

Sub small_centralizer(const SmallGroup& G, const Sub& s) {
    Sub out;
    for (int g = 0; g < G.size(); ++g) {
        bool ok = true;
        for (int x : s)
            if (G.mul(g, x) != G.mul(x, g)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(g);
    }
    return out;
}

}  // namespace tamelab::grp
