#include "tamelab/smallgroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace tamelab::grp {

SmallGroup SmallGroup::from_perms(int degree, const std::vector<Perm>& gens, size_t cap) {
    std::vector<Perm> elems{perm_identity(degree)};
    std::unordered_map<Perm, int, PermHash> index;
    index[elems[0]] = 0;
    for (size_t h = 0; h < elems.size(); ++h) {
        for (const auto& g : gens) {
            Perm x = perm_mul(elems[h], g);
            if (!index.count(x)) {
                if (elems.size() >= cap) throw ResourceError("SmallGroup closure above cap");
                index[x] = static_cast<int>(elems.size());
                elems.push_back(std::move(x));
            }
        }
    }
    SmallGroup G;
    G.n_ = static_cast<int>(elems.size());
    G.table_.assign(static_cast<size_t>(G.n_) * G.n_, 0);
    for (int a = 0; a < G.n_; ++a)
        for (int b = 0; b < G.n_; ++b)
            G.table_[static_cast<size_t>(a) * G.n_ + b] =
                static_cast<uint16_t>(index.at(perm_mul(elems[a], elems[b])));
    G.elems_ = std::move(elems);
    G.finish_init();
    return G;
}

SmallGroup SmallGroup::from_table(int n, const std::function<int(int, int)>& mulfn) {
    SmallGroup G;
    G.n_ = n;
    G.table_.assign(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int c = mulfn(a, b);
            if (c < 0 || c >= n) throw std::invalid_argument("from_table: value out of range");
            G.table_[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(c);
        }
    // sanity: identity and associativity spot checks
    for (int a = 0; a < n; ++a)
        if (G.mul(0, a) != a || G.mul(a, 0) != a)
            throw std::invalid_argument("from_table: element 0 is not an identity");
    G.finish_init();
    return G;
}

void SmallGroup::finish_init() {
    inv_.assign(n_, 0);
    for (int a = 0; a < n_; ++a) {
        bool found = false;
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0) {
                inv_[a] = static_cast<uint16_t>(b);
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("SmallGroup: element without inverse");
    }
    elt_order_.assign(n_, 1);
    for (int a = 0; a < n_; ++a) {
        int x = a, o = 1;
        while (x != 0) {
            x = mul(x, a);
            ++o;
        }
        elt_order_[a] = o;
    }
}

int SmallGroup::power(int a, long long k) const {
    int o = elt_order_[a];
    long long e = ((k % o) + o) % o;
    int r = 0;
    int b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::optional<int> SmallGroup::index_of_perm(const Perm& p) const {
    for (size_t i = 0; i < elems_.size(); ++i)
        if (elems_[i] == p) return static_cast<int>(i);
    return std::nullopt;
}

bool SmallGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<int> SmallGroup::abelian_invariants() const {
    if (!is_abelian()) return {};
    // invariant factors by repeatedly splitting off an element of maximal order
    // (works for abelian p-groups and products; standard Smith-style peeling)
    std::vector<int> invs;
    std::vector<int> sub{0};  // current subgroup generated by chosen elements
    std::vector<char> in(n_, 0);
    in[0] = 1;
    int covered = 1;
    while (covered < n_) {
        int best = -1, besto = 0;
        for (int a = 0; a < n_; ++a)
            if (!in[a] && elt_order_[a] > besto) {
                besto = elt_order_[a];
                best = a;
            }
        // quotient order of best modulo current subgroup
        // (for the invariant list we use the order in the quotient)
        int a = best, o = 1;
        int x = a;
        while (!in[x]) {
            x = mul(x, a);
            ++o;
        }
        invs.push_back(o);
        // extend subgroup
        std::vector<int> newsub;
        for (int s : sub) {
            int y = s;
            for (int k = 0; k < elt_order_[a]; ++k) {
                if (!in[y]) {
                    in[y] = 1;
                    ++covered;
                }
                newsub.push_back(y);
                y = mul(y, a);
            }
        }
        std::sort(newsub.begin(), newsub.end());
        newsub.erase(std::unique(newsub.begin(), newsub.end()), newsub.end());
        sub = newsub;
    }
    std::sort(invs.begin(), invs.end(), std::greater<int>());
    return invs;
}

std::vector<int> SmallGroup::center() const {
    std::vector<int> z;
    for (int a = 0; a < n_; ++a) {
        bool central = true;
        for (int b = 0; b < n_ && central; ++b)
            if (mul(a, b) != mul(b, a)) central = false;
        if (central) z.push_back(a);
    }
    return z;
}

std::vector<int> SmallGroup::closure(std::vector<int> seed) const {
    std::vector<char> in(n_, 0);
    std::vector<int> out{0};
    in[0] = 1;
    seed.erase(std::remove(seed.begin(), seed.end(), 0), seed.end());
    for (size_t h = 0; h < out.size(); ++h)
        for (int g : seed) {
            int x = mul(out[h], g);
            if (!in[x]) {
                in[x] = 1;
                out.push_back(x);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> SmallGroup::derived_subgroup() const {
    std::vector<int> comms;
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b) comms.push_back(commutator(a, b));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return closure(comms);
}

std::vector<int> SmallGroup::order_profile() const {
    std::vector<int> p = elt_order_;
    std::sort(p.begin(), p.end());
    return p;
}

uint64_t SmallGroup::element_fingerprint(int x) const {
    if (fp_cache_.empty()) {
        fp_cache_.assign(n_, 0);
        // conjugacy classes
        std::vector<int> cls(n_, -1);
        int nc = 0;
        for (int a = 0; a < n_; ++a) {
            if (cls[a] >= 0) continue;
            std::vector<int> stack{a};
            cls[a] = nc;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int g = 0; g < n_; ++g) {
                    int v = conj(g, u);
                    if (cls[v] < 0) {
                        cls[v] = nc;
                        stack.push_back(v);
                    }
                }
            }
            ++nc;
        }
        std::vector<uint64_t> class_size(nc, 0);
        for (int a = 0; a < n_; ++a) ++class_size[cls[a]];
        // centralizer order and power-map class: combine into a hash that is
        // constant on automorphism orbits
        std::vector<uint64_t> fp(n_, 0);
        for (int a = 0; a < n_; ++a) {
            uint64_t h = 1099511628211ull;
            h = h * 131 + elt_order_[a];
            h = h * 131 + class_size[cls[a]];
            h = h * 131 + static_cast<uint64_t>(n_ / class_size[cls[a]]);  // |centralizer|
            fp[a] = h;
        }
        // refine by the fingerprints of powers
        for (int round = 0; round < 2; ++round) {
            std::vector<uint64_t> fp2(n_);
            for (int a = 0; a < n_; ++a) {
                uint64_t h = fp[a];
                h = h * 1000003 + fp[mul(a, a)];
                h = h * 1000003 + fp[power(a, elt_order_[a] / 2 == 0 ? 1 : elt_order_[a] / 2)];
                fp2[a] = h;
            }
            fp = fp2;
        }
        fp_cache_ = fp;
        // fingerprints must be conjugation-invariant: enforce by taking the
        // minimum over each conjugacy class
        for (int a = 0; a < n_; ++a) {
            uint64_t m = fp_cache_[a];
            for (int g = 0; g < n_; ++g) m = std::min(m, fp_cache_[conj(g, a)]);
            // (small n, quadratic is fine)
            fp_cache_[a] = m;
        }
    }
    return fp_cache_[x];
}

std::vector<int> SmallGroup::small_generating_set() const {
    if (n_ == 1) return {};
    // greedy: highest order first, then extend
    std::vector<int> by_order(n_);
    std::iota(by_order.begin(), by_order.end(), 0);
    std::sort(by_order.begin(), by_order.end(),
              [&](int a, int b) { return elt_order_[a] > elt_order_[b]; });
    std::vector<int> gens{by_order[0]};
    std::vector<int> cur = closure(gens);
    while (static_cast<int>(cur.size()) < n_) {
        // pick the element extending the subgroup the most
        int best = -1;
        size_t best_size = cur.size();
        for (int cand : by_order) {
            if (std::binary_search(cur.begin(), cur.end(), cand)) continue;
            auto ext = gens;
            ext.push_back(cand);
            auto cl = closure(ext);
            if (cl.size() > best_size) {
                best_size = cl.size();
                best = cand;
                if (static_cast<int>(cl.size()) == n_) break;
            }
        }
        if (best < 0) throw std::logic_error("small_generating_set: stuck");
        gens.push_back(best);
        cur = closure(gens);
    }
    return gens;
}

namespace {

// extend a partial map on generators to a homomorphism by closing the
// multiplication table; returns the full image map or empty on conflict
std::vector<uint16_t> try_extend_hom(const SmallGroup& G, const SmallGroup& H,
                                     const std::vector<int>& gens,
                                     const std::vector<int>& images) {
    std::vector<int> img(G.size(), -1);
    img[0] = 0;
    // BFS over words in the generators
    std::vector<int> reached{0};
    for (size_t i = 0; i < gens.size(); ++i) {
        if (img[gens[i]] != -1 && img[gens[i]] != images[i]) return {};
        if (img[gens[i]] == -1) {
            img[gens[i]] = images[i];
            reached.push_back(gens[i]);
        }
    }
    for (size_t h = 0; h < reached.size(); ++h) {
        int x = reached[h];
        for (size_t i = 0; i < gens.size(); ++i) {
            int y = G.mul(x, gens[i]);
            int iy = H.mul(img[x], images[i]);
            if (img[y] == -1) {
                img[y] = iy;
                reached.push_back(y);
            } else if (img[y] != iy) {
                return {};
            }
        }
    }
    if (reached.size() != static_cast<size_t>(G.size())) return {};  // gens must generate
    // verify homomorphism fully (cheap: products against generators suffice by
    // construction; do a random-ish spot row for safety)
    for (int a = 0; a < G.size(); a += std::max(1, G.size() / 16))
        for (int b = 0; b < G.size(); b += std::max(1, G.size() / 16))
            if (img[G.mul(a, b)] != H.mul(img[a], img[b])) return {};
    std::vector<uint16_t> out(G.size());
    for (int i = 0; i < G.size(); ++i) {
        if (img[i] < 0) return {};
        out[i] = static_cast<uint16_t>(img[i]);
    }
    return out;
}

void search_isos(const SmallGroup& G, const SmallGroup& H, bool all, size_t cap,
                 std::vector<std::vector<uint16_t>>& out) {
    if (G.size() != H.size()) return;
    if (G.size() == 1) {
        out.push_back({0});
        return;
    }
    if (G.order_profile() != H.order_profile()) return;
    auto gens = G.small_generating_set();
    // candidate images per generator, filtered by fingerprint
    std::vector<std::vector<int>> cands(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        uint64_t f = G.element_fingerprint(gens[i]);
        for (int y = 1; y < H.size(); ++y)
            if (H.element_fingerprint(y) == f && H.order_of(y) == G.order_of(gens[i]))
                cands[i].push_back(y);
        if (cands[i].empty()) return;
    }
    std::vector<int> images(gens.size());
    size_t tried = 0;
    std::function<bool(size_t)> rec = [&](size_t i) -> bool {
        if (i == gens.size()) {
            auto full = try_extend_hom(G, H, gens, images);
            if (!full.empty()) {
                // injectivity
                std::vector<char> hit(H.size(), 0);
                bool inj = true;
                for (auto v : full) {
                    if (hit[v]) {
                        inj = false;
                        break;
                    }
                    hit[v] = 1;
                }
                if (inj) {
                    out.push_back(full);
                    if (!all) return true;
                }
            }
            return false;
        }
        for (int y : cands[i]) {
            images[i] = y;
            if (++tried > cap) throw ResourceError("isomorphism search above cap");
            // prefix pruning: partial subgroup map must be consistent
            // (full closure on the subgroup generated so far)
            {
                std::vector<int> pre_gens(gens.begin(), gens.begin() + i + 1);
                std::vector<int> pre_imgs(images.begin(), images.begin() + i + 1);
                // close over the partial generating set
                std::vector<int> img(G.size(), -1);
                img[0] = 0;
                bool ok = true;
                std::vector<int> reached{0};
                for (size_t k = 0; k <= i && ok; ++k) {
                    if (img[pre_gens[k]] == -1) {
                        img[pre_gens[k]] = pre_imgs[k];
                        reached.push_back(pre_gens[k]);
                    } else if (img[pre_gens[k]] != pre_imgs[k])
                        ok = false;
                }
                for (size_t h = 0; h < reached.size() && ok; ++h) {
                    for (size_t k = 0; k <= i && ok; ++k) {
                        int y2 = G.mul(reached[h], pre_gens[k]);
                        int iy = H.mul(img[reached[h]], pre_imgs[k]);
                        if (img[y2] == -1) {
                            img[y2] = iy;
                            reached.push_back(y2);
                        } else if (img[y2] != iy)
                            ok = false;
                    }
                }
                if (ok) {
                    // partial map must be injective
                    std::vector<char> hit(H.size(), 0);
                    for (int v : reached)
                        if (img[v] >= 0) {
                            if (hit[img[v]]) {
                                ok = false;
                                break;
                            }
                            hit[img[v]] = 1;
                        }
                }
                if (!ok) continue;
            }
            if (rec(i + 1)) return true;
        }
        return false;
    };
    rec(0);
}

}  // namespace

std::vector<std::vector<uint16_t>> SmallGroup::automorphisms(size_t cap) const {
    std::vector<std::vector<uint16_t>> out;
    search_isos(*this, *this, true, cap, out);
    return out;
}

std::vector<std::vector<uint16_t>> SmallGroup::inner_automorphisms() const {
    std::vector<std::vector<uint16_t>> out;
    std::vector<std::vector<uint16_t>> seen;
    for (int g = 0; g < n_; ++g) {
        std::vector<uint16_t> m(n_);
        for (int x = 0; x < n_; ++x) m[x] = static_cast<uint16_t>(conj(g, x));
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
    return out;
}

std::vector<std::vector<uint16_t>> SmallGroup::isomorphisms_to(const SmallGroup& other, bool all,
                                                               size_t cap) const {
    std::vector<std::vector<uint16_t>> out;
    search_isos(*this, other, all, cap, out);
    return out;
}

PermGroup SmallGroup::automorphism_permgroup() const {
    auto auts = automorphisms();
    std::vector<Perm> gens;
    for (const auto& a : auts) {
        Perm p(n_);
        for (int i = 0; i < n_; ++i) p[i] = a[i];
        gens.push_back(p);
    }
    return PermGroup(n_, gens);
}

SmallGroup quotient_group(const SmallGroup& G, const std::vector<int>& N) {
    // cosets labelled by their smallest member; identity coset must be first
    std::vector<int> coset_of(G.size(), -1);
    std::vector<int> reps;
    for (int g = 0; g < G.size(); ++g) {
        if (coset_of[g] >= 0) continue;
        int id = static_cast<int>(reps.size());
        for (int x : N) coset_of[G.mul(g, x)] = id;
        reps.push_back(g);
    }
    if (coset_of[0] != 0) throw std::invalid_argument("quotient_group: identity not in first coset");
    int m = static_cast<int>(reps.size());
    SmallGroup Q = SmallGroup::from_table(m, [&](int a, int b) {
        return coset_of[G.mul(reps[a], reps[b])];
    });
    return Q;
}

SmallGroup subgroup_as_group(const SmallGroup& G, const std::vector<int>& elems) {
    std::vector<int> pos(G.size(), -1);
    for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
    if (elems.empty() || elems[0] != 0)
        throw std::invalid_argument("subgroup_as_group: identity must be element 0");
    return SmallGroup::from_table(static_cast<int>(elems.size()), [&](int a, int b) {
        int c = pos[G.mul(elems[a], elems[b])];
        if (c < 0) throw std::invalid_argument("subgroup_as_group: set not closed");
        return c;
    });
}

SmallGroup model_cyclic(int n) {
    return SmallGroup::from_table(n, [n](int a, int b) { return (a + b) % n; });
}

SmallGroup model_dihedral(int order) {
    if (order % 2 || order < 2) throw std::invalid_argument("dihedral order must be even");
    int m = order / 2;
    // elements: r^i (0..m-1), r^i s (m..2m-1)
    return SmallGroup::from_table(order, [m](int a, int b) {
        int ia = a % m, fa = a / m, ib = b % m, fb = b / m;
        // (r^ia s^fa)(r^ib s^fb): s r^ib = r^{-ib} s
        int i = fa ? (ia - ib % m + m) % m : (ia + ib) % m;
        int f = fa ^ fb;
        return f * m + i;
    });
}

SmallGroup model_quaternion(int order) {
    if (order < 8 || (order & (order - 1))) throw std::invalid_argument("Q order must be 2^k>=8");
    int m = order / 2;  // |a| = m, b^2 = a^{m/2}, b a b^-1 = a^-1
    return SmallGroup::from_table(order, [m](int x, int y) {
        int ia = x % m, fa = x / m, ib = y % m, fb = y / m;
        // (a^ia b^fa)(a^ib b^fb)
        int i, f;
        if (!fa && !fb) {
            i = (ia + ib) % m;
            f = 0;
        } else if (!fa && fb) {
            i = (ia + ib) % m;
            f = 1;
        } else if (fa && !fb) {
            i = (ia - ib % m + m) % m;
            f = 1;
        } else {  // b a^ib b = a^{-ib} b^2 = a^{-ib + m/2}
            i = (ia - ib + m / 2 + 2 * m) % m;
            f = 0;
        }
        return f * m + i;
    });
}

SmallGroup model_symmetric(int pts) {
    std::vector<Perm> gens;
    Perm t = perm_identity(pts);
    std::swap(t[0], t[1]);
    Perm c(pts);
    for (int i = 0; i < pts; ++i) c[i] = (i + 1) % pts;
    gens.push_back(t);
    gens.push_back(c);
    return SmallGroup::from_perms(pts, gens, 50000);
}

SmallGroup model_direct_product(const SmallGroup& a, const SmallGroup& b) {
    int na = a.size(), nb = b.size();
    return SmallGroup::from_table(na * nb, [&a, &b, nb](int x, int y) {
        int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
        return a.mul(xa, ya) * nb + b.mul(xb, yb);
    });
}

SmallGroup model_elementary_abelian(int p, int rank) {
    int n = 1;
    for (int i = 0; i < rank; ++i) n *= p;
    return SmallGroup::from_table(n, [p, rank, n](int x, int y) {
        int out = 0, mult = 1;
        (void)n;
        for (int i = 0; i < rank; ++i) {
            int dx = x % p, dy = y % p;
            x /= p;
            y /= p;
            out += ((dx + dy) % p) * mult;
            mult *= p;
        }
        return out;
    });
}

SmallGroup model_gl2_3() {
    // GL(2,3) acting on the 8 nonzero vectors of F_3^2
    auto idx = [](int a, int b) { return a * 3 + b - 1; };  // skip (0,0)
    (void)idx;
    std::vector<int> vecs;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a || b) vecs.push_back(a * 3 + b);
    auto pos = [&](int v) {
        return static_cast<int>(std::find(vecs.begin(), vecs.end(), v) - vecs.begin());
    };
    auto act = [&](int m00, int m01, int m10, int m11) {
        Perm p(8);
        for (int i = 0; i < 8; ++i) {
            int a = vecs[i] / 3, b = vecs[i] % 3;
            int na = (m00 * a + m01 * b) % 3, nb = (m10 * a + m11 * b) % 3;
            p[i] = pos(na * 3 + nb);
        }
        return p;
    };
    return SmallGroup::from_perms(8, {act(1, 1, 0, 1), act(0, 2, 1, 0)}, 100);
}

std::string recognize_small_group(const SmallGroup& g) {
    int n = g.size();
    if (n == 1) return "1";
    if (g.is_abelian()) {
        auto inv = g.abelian_invariants();
        std::string s;
        for (size_t i = 0; i < inv.size(); ++i) {
            if (i) s += "x";
            s += "C" + std::to_string(inv[i]);
        }
        return s;
    }
    struct Candidate {
        const char* name;
        SmallGroup model;
    };
    static std::vector<Candidate> cands = [] {
        std::vector<Candidate> c;
        c.push_back({"S3", model_symmetric(3)});
        c.push_back({"D8", model_dihedral(8)});
        c.push_back({"Q8", model_quaternion(8)});
        c.push_back({"D12", model_dihedral(12)});
        c.push_back({"A4", SmallGroup::from_perms(
                               4, {Perm{1, 0, 3, 2}, Perm{0, 2, 3, 1}})});
        c.push_back({"D16", model_dihedral(16)});
        c.push_back({"Q16", model_quaternion(16)});
        c.push_back({"S4", model_symmetric(4)});
        c.push_back({"Q32", model_quaternion(32)});
        c.push_back({"D32", model_dihedral(32)});
        c.push_back({"C2xS3", model_direct_product(model_cyclic(2), model_symmetric(3))});
        c.push_back({"S3xS3", model_direct_product(model_symmetric(3), model_symmetric(3))});
        c.push_back({"GL(2,3)", model_gl2_3()});
        c.push_back({"C2xC2xS3",
                     model_direct_product(model_elementary_abelian(2, 2), model_symmetric(3))});
        return c;
    }();
    for (auto& c : cands)
        if (c.model.size() == n && g.isomorphic_to(c.model)) return c.name;
    return "order" + std::to_string(n);
}

}  // namespace tamelab::grp
