#include "tamelab/backtrack.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "tamelab/arith.hpp"

namespace tamelab::grp {

namespace {

struct TupleSearch {
    const PermGroup& G;
    const std::vector<std::pair<Perm, Perm>>& pairs;
    CancelToken* tok;
    int deg;
    std::vector<int> img, pre;
    std::vector<int> trail;
    // cycle length of each point under each pair
    std::vector<std::vector<int>> clen_a, clen_b;

    TupleSearch(const PermGroup& g, const std::vector<std::pair<Perm, Perm>>& pr, CancelToken* t)
        : G(g), pairs(pr), tok(t), deg(g.degree()) {
        img.assign(deg, -1);
        pre.assign(deg, -1);
        for (const auto& [a, b] : pairs) {
            clen_a.push_back(cycle_lengths(a));
            clen_b.push_back(cycle_lengths(b));
        }
    }

    static std::vector<int> cycle_lengths(const Perm& p) {
        std::vector<int> len(p.size(), 0);
        std::vector<char> seen(p.size(), 0);
        for (size_t i = 0; i < p.size(); ++i) {
            if (seen[i]) continue;
            std::vector<int> cyc;
            size_t j = i;
            do {
                cyc.push_back(static_cast<int>(j));
                seen[j] = 1;
                j = static_cast<size_t>(p[j]);
            } while (j != i);
            for (int q : cyc) len[q] = static_cast<int>(cyc.size());
        }
        return len;
    }

    bool assign(int p, int r) {
        std::vector<std::pair<int, int>> queue{{p, r}};
        while (!queue.empty()) {
            auto [u, v] = queue.back();
            queue.pop_back();
            if (img[u] == v) continue;
            if (img[u] != -1 || pre[v] != -1) return false;
            for (size_t i = 0; i < pairs.size(); ++i)
                if (clen_a[i][u] != clen_b[i][v]) return false;
            img[u] = v;
            pre[v] = u;
            trail.push_back(u);
            for (size_t i = 0; i < pairs.size(); ++i)
                queue.emplace_back(pairs[i].first[u], pairs[i].second[v]);
        }
        return true;
    }

    void rollback(size_t mark) {
        while (trail.size() > mark) {
            int u = trail.back();
            trail.pop_back();
            pre[img[u]] = -1;
            img[u] = -1;
        }
    }

    bool verify(const Perm& g) const {
        for (const auto& [a, b] : pairs) {
            for (int i = 0; i < deg; ++i)
                if (g[a[i]] != b[g[i]]) return false;
        }
        return true;
    }

    std::optional<Perm> dfs(size_t level, const Perm& w) {
        if (tok) tok->check();
        if (level == G.base_length()) {
            if (verify(w)) return w;
            return std::nullopt;
        }
        int b = G.base_point(level);
        for (int delta : G.basic_orbit(level)) {
            int r = w[delta];
            if (img[b] != -1 && img[b] != r) continue;
            if (pre[r] != -1 && pre[r] != b) continue;
            size_t mark = trail.size();
            if (assign(b, r)) {
                Perm w2 = perm_mul(w, G.transversal(level, delta));
                auto res = dfs(level + 1, w2);
                if (res) return res;
            }
            rollback(mark);
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<Perm> transporter_tuple(const PermGroup& G,
                                      const std::vector<std::pair<Perm, Perm>>& pairs,
                                      CancelToken* tok) {
    for (const auto& [a, b] : pairs)
        if (perm_cycle_type(a) != perm_cycle_type(b)) return std::nullopt;
    TupleSearch ts(G, pairs, tok);
    // seed propagation from all fixed constraints (none initially)
    return ts.dfs(0, perm_identity(G.degree()));
}

PermGroup centralizer_subgroup(const PermGroup& G, const std::vector<Perm>& gens,
                               CancelToken* tok) {
    PermGroup cur = G;
    for (const auto& x : gens) {
        if (perm_is_identity(x)) continue;
        cur = centralizer_element(cur, x, tok);
    }
    return cur;
}

namespace {

uint64_t perm_hash64(const Perm& p) {
    uint64_t h = 1469598103934665603ull;
    for (int x : p) {
        h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 1099511628211ull;
    }
    return h;
}

struct VecHash {
    size_t operator()(const std::vector<uint64_t>& v) const {
        uint64_t h = 14695981039346656037ull;
        for (uint64_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

std::vector<uint64_t> subgroup_key(const std::vector<Perm>& elements) {
    std::vector<uint64_t> key;
    key.reserve(elements.size());
    for (const auto& e : elements) key.push_back(perm_hash64(e));
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace

PermGroup normalizer_subgroup(const PermGroup& G, const std::vector<Perm>& sub_elements,
                              uint64_t* n_conjugates, CancelToken* tok) {
    // orbit of the subgroup (as an element set) under conjugation
    std::unordered_map<std::vector<uint64_t>, size_t, VecHash> pos;
    std::vector<std::vector<Perm>> orbit;
    std::vector<Perm> reps;  // reps[i] conjugates sub onto orbit[i]

    orbit.push_back(sub_elements);
    pos[subgroup_key(sub_elements)] = 0;
    reps.push_back(perm_identity(G.degree()));
    std::vector<Perm> stab_gens;

    for (size_t h = 0; h < orbit.size(); ++h) {
        if (tok) tok->check();
        for (const auto& g : G.generators()) {
            std::vector<Perm> img;
            img.reserve(orbit[h].size());
            for (const auto& x : orbit[h]) img.push_back(perm_conj(g, x));
            auto key = subgroup_key(img);
            auto it = pos.find(key);
            if (it == pos.end()) {
                pos[key] = orbit.size();
                orbit.push_back(std::move(img));
                reps.push_back(perm_mul(g, reps[h]));
            } else {
                Perm s = perm_mul(perm_inv(reps[it->second]), perm_mul(g, reps[h]));
                if (!perm_is_identity(s)) stab_gens.push_back(s);
            }
        }
    }
    uint64_t target = G.order() / orbit.size();
    // include the subgroup's own elements among candidate generators
    std::vector<Perm> keep;
    PermGroup N(G.degree(), keep);
    auto try_add = [&](const Perm& s) {
        if (N.order() == target) return;
        if (!N.contains(s)) {
            keep.push_back(s);
            N = PermGroup(G.degree(), keep);
        }
    };
    for (const auto& x : sub_elements)
        if (!perm_is_identity(x)) try_add(x);
    for (const auto& s : stab_gens) try_add(s);
    if (N.order() != target) throw std::logic_error("normalizer_subgroup: order mismatch");
    // sanity: generators really normalize
    PermGroup H(G.degree(), sub_elements);
    for (const auto& g : N.generators())
        for (const auto& x : H.generators())
            if (!H.contains(perm_conj(g, x)))
                throw std::logic_error("normalizer_subgroup: hash collision detected");
    if (n_conjugates) *n_conjugates = orbit.size();
    return N;
}

PermGroup sylow_subgroup(const PermGroup& G, uint64_t p, CancelToken* tok) {
    using tamelab::arith::vp;
    int target_v = 0;
    {
        uint64_t n = G.order();
        while (n % p == 0) {
            n /= p;
            ++target_v;
        }
    }
    if (target_v == 0) return PermGroup(G.degree(), {});

    // find an element of maximal p-power order by scanning
    Perm best;
    uint64_t best_ord = 1;
    uint64_t scanned = 0;
    G.for_each_element([&](const Perm& g) {
        ++scanned;
        uint64_t o = perm_order(g);
        // strip the p'-part
        uint64_t op = o;
        while (op % p == 0) op /= p;
        if (o / op > best_ord) {
            uint64_t q = o / op;
            Perm h = g;
            // g^(o/q) has order q
            uint64_t e = op;
            Perm acc = perm_identity(G.degree());
            Perm pw = h;
            while (e) {
                if (e & 1) acc = perm_mul(acc, pw);
                pw = perm_mul(pw, pw);
                e >>= 1;
            }
            best = acc;
            best_ord = q;
        }
        // stop early once we have a decent seed
        return best_ord < p || scanned < 5000;
    });
    if (best_ord == 1) throw std::logic_error("sylow: no p-element found");

    std::vector<Perm> sgens{best};
    PermGroup S(G.degree(), sgens);
    while (vp(p, static_cast<int64_t>(S.order())) < target_v) {
        if (tok) tok->check();
        auto elems = S.elements(4096);
        PermGroup N = normalizer_subgroup(G, elems, nullptr, tok);
        bool extended = false;
        // look for g in N \ S with <S,g> a p-group strictly larger
        uint64_t snapshot = S.order();
        N.for_each_element([&](const Perm& g) {
            if (S.contains(g)) return true;
            // quick filter: g must be a p-element modulo S
            {
                Perm x = g;
                int steps = 0;
                while (!S.contains(x)) {
                    if (++steps > 30) return true;
                    Perm xp = x;
                    for (uint64_t i = 1; i < p; ++i) xp = perm_mul(xp, x);
                    x = xp;
                    if (perm_is_identity(x)) break;
                }
                if (!S.contains(x) && !perm_is_identity(x)) return true;
            }
            auto gens2 = sgens;
            gens2.push_back(g);
            PermGroup T(G.degree(), gens2);
            uint64_t o = T.order();
            uint64_t q = o;
            while (q % p == 0) q /= p;
            if (q == 1 && o > snapshot) {
                sgens = gens2;
                S = T;
                extended = true;
                return false;
            }
            return true;
        });
        if (!extended)
            throw std::logic_error("sylow: normalizer step failed to extend p-subgroup");
    }
    return S;
}

ElementClasses element_classes(const PermGroup& G, uint64_t cap) {
    if (G.order() > cap) throw ResourceError("element_classes above cap");
    ElementClasses out;
    std::unordered_set<Perm, PermHash> seen;
    G.for_each_element([&](const Perm& g) {
        if (seen.count(g)) return true;
        // explore the conjugacy class of g
        std::vector<Perm> stack{g};
        seen.insert(g);
        uint64_t size = 1;
        while (!stack.empty()) {
            Perm x = stack.back();
            stack.pop_back();
            for (const auto& s : G.generators()) {
                Perm y = perm_conj(s, x);
                if (seen.insert(y).second) {
                    ++size;
                    stack.push_back(y);
                }
            }
        }
        out.reps.push_back(g);
        out.sizes.push_back(size);
        return true;
    });
    return out;
}

}  // namespace tamelab::grp
