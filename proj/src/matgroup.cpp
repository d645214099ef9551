#include "tamelab/matgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "tamelab/arith.hpp"

namespace tamelab::grp {

namespace {

// small irreducible polynomials are found by brute force at construction
std::vector<int> find_irreducible(int p, int e) {
    // monic x^e + c_{e-1} x^{e-1} + ... + c_0, coefficients mod p
    std::vector<int> c(e, 0);
    auto has_factor = [&](const std::vector<int>& cf) {
        // trial division by all monic polynomials of degree 1..e/2
        for (int d = 1; d <= e / 2; ++d) {
            long long count = 1;
            for (int i = 0; i < d; ++i) count *= p;
            for (long long t = 0; t < count; ++t) {
                std::vector<int> div(d + 1);
                long long tt = t;
                for (int i = 0; i < d; ++i) {
                    div[i] = static_cast<int>(tt % p);
                    tt /= p;
                }
                div[d] = 1;
                // remainder of x^e + cf by div
                std::vector<int> rem(e + 1, 0);
                for (int i = 0; i < e; ++i) rem[i] = cf[i];
                rem[e] = 1;
                for (int k = e; k >= d; --k) {
                    int coef = rem[k] % p;
                    if (coef) {
                        for (int i = 0; i <= d; ++i) {
                            int& r = rem[k - d + i];
                            r = ((r - coef * div[i]) % p + p) % p;
                        }
                    }
                }
                bool zero = true;
                for (int i = 0; i < d; ++i)
                    if (rem[i] % p) zero = false;
                if (zero) return true;
            }
        }
        return false;
    };
    for (;;) {
        if (!has_factor(c)) return c;
        int i = 0;
        while (i < e && ++c[i] == p) c[i++] = 0;
        if (i == e) throw std::logic_error("no irreducible polynomial found");
    }
}

}  // namespace

GF::GF(int q) : q_(q) {
    // factor q
    p_ = 0;
    for (int d = 2; d <= q; ++d)
        if (q % d == 0) {
            p_ = d;
            break;
        }
    e_ = 0;
    int t = q;
    while (t > 1) {
        if (t % p_) throw std::invalid_argument("GF: q not a prime power");
        t /= p_;
        ++e_;
    }
    auto modpoly = find_irreducible(p_, e_);
    // elements as base-p digit vectors packed into indices
    auto decode = [&](int x) {
        std::vector<int> d(e_);
        for (int i = 0; i < e_; ++i) {
            d[i] = x % p_;
            x /= p_;
        }
        return d;
    };
    auto encode = [&](const std::vector<int>& d) {
        int x = 0;
        for (int i = e_; i-- > 0;) x = x * p_ + d[i];
        return x;
    };
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        auto da = decode(a);
        std::vector<int> nd(e_);
        for (int i = 0; i < e_; ++i) nd[i] = (p_ - da[i]) % p_;
        neg_[a] = encode(nd);
        for (int b = 0; b < q_; ++b) {
            auto db = decode(b);
            std::vector<int> s(e_);
            for (int i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
            add_[a * q_ + b] = encode(s);
            // polynomial product reduced by modpoly
            std::vector<int> prod(2 * e_ - 1, 0);
            for (int i = 0; i < e_; ++i)
                for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            for (int k = 2 * e_ - 2; k >= e_; --k) {
                int coef = prod[k];
                if (coef) {
                    prod[k] = 0;
                    for (int i = 0; i < e_; ++i)
                        prod[k - e_ + i] =
                            ((prod[k - e_ + i] - coef * modpoly[i]) % p_ + p_) % p_;
                }
            }
            prod.resize(e_);
            mul_[a * q_ + b] = encode(prod);
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) inv_[a] = b;
    // multiplicative generator
    gen_ = 0;
    for (int g = 2; g < q_; ++g) {
        int x = g, cnt = 1;
        while (x != 1) {
            x = mul_[x * q_ + g];
            ++cnt;
        }
        if (cnt == q_ - 1) {
            gen_ = g;
            break;
        }
    }
    if (q_ == 2) gen_ = 1;
}

int GF::pow(int a, long long k) const {
    if (a == 0) return k == 0 ? 1 : 0;
    long long o = q_ - 1;
    k %= o;
    if (k < 0) k += o;
    int r = 1, b = a;
    while (k) {
        if (k & 1) r = mul(r, b);
        b = mul(b, b);
        k >>= 1;
    }
    return r;
}

const GF& gf(int q) {
    static std::map<int, GF> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, GF(q)).first;
    return it->second;
}

Mat Mat::identity(int n, int q) {
    Mat m(n, q);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat mat_mul(const Mat& A, const Mat& B) {
    const GF& F = gf(A.q);
    Mat C(A.n, A.q);
    for (int i = 0; i < A.n; ++i)
        for (int k = 0; k < A.n; ++k) {
            int aik = A.at(i, k);
            if (!aik) continue;
            for (int j = 0; j < A.n; ++j)
                if (B.at(k, j)) C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
        }
    return C;
}

Mat mat_pow(const Mat& A, uint64_t k) {
    Mat r = Mat::identity(A.n, A.q);
    Mat b = A;
    while (k) {
        if (k & 1) r = mat_mul(r, b);
        b = mat_mul(b, b);
        k >>= 1;
    }
    return r;
}

int mat_det(const Mat& A) {
    const GF& F = gf(A.q);
    Mat M = A;
    int det = 1;
    for (int col = 0, row = 0; col < M.n && row < M.n; ++col) {
        int sel = -1;
        for (int r = row; r < M.n; ++r)
            if (M.at(r, col)) {
                sel = r;
                break;
            }
        if (sel < 0) return 0;
        if (sel != row) {
            for (int j = 0; j < M.n; ++j) std::swap(M.at(sel, j), M.at(row, j));
            det = F.neg(det);
        }
        det = F.mul(det, M.at(row, col));
        int inv = F.inv(M.at(row, col));
        for (int r = row + 1; r < M.n; ++r) {
            int f = F.mul(M.at(r, col), inv);
            if (f)
                for (int j = 0; j < M.n; ++j)
                    M.at(r, j) = F.sub(M.at(r, j), F.mul(f, M.at(row, j)));
        }
        ++row;
    }
    return det;
}

Mat mat_inv(const Mat& A) {
    const GF& F = gf(A.q);
    Mat M = A;
    Mat I = Mat::identity(A.n, A.q);
    for (int col = 0; col < M.n; ++col) {
        int sel = -1;
        for (int r = col; r < M.n; ++r)
            if (M.at(r, col)) {
                sel = r;
                break;
            }
        if (sel < 0) throw std::invalid_argument("mat_inv: singular");
        if (sel != col)
            for (int j = 0; j < M.n; ++j) {
                std::swap(M.at(sel, j), M.at(col, j));
                std::swap(I.at(sel, j), I.at(col, j));
            }
        int inv = F.inv(M.at(col, col));
        for (int j = 0; j < M.n; ++j) {
            M.at(col, j) = F.mul(M.at(col, j), inv);
            I.at(col, j) = F.mul(I.at(col, j), inv);
        }
        for (int r = 0; r < M.n; ++r) {
            if (r == col) continue;
            int f = M.at(r, col);
            if (f)
                for (int j = 0; j < M.n; ++j) {
                    M.at(r, j) = F.sub(M.at(r, j), F.mul(f, M.at(col, j)));
                    I.at(r, j) = F.sub(I.at(r, j), F.mul(f, I.at(col, j)));
                }
        }
    }
    return I;
}

Mat mat_transpose(const Mat& A) {
    Mat T(A.n, A.q);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

Mat mat_frobenius(const Mat& A) {
    const GF& F = gf(A.q);
    Mat B = A;
    for (auto& x : B.a) x = F.frob(x);
    return B;
}

uint64_t mat_order(const Mat& A, uint64_t cap) {
    Mat I = Mat::identity(A.n, A.q);
    Mat x = A;
    uint64_t o = 1;
    while (!(x == I)) {
        x = mat_mul(x, A);
        if (++o > cap) throw ResourceError("mat_order above cap");
    }
    return o;
}

namespace {

std::vector<int> apply_vec(const Mat& M, const std::vector<int>& v) {
    const GF& F = gf(M.q);
    std::vector<int> out(M.n, 0);
    for (int i = 0; i < M.n; ++i) {
        int s = 0;
        for (int j = 0; j < M.n; ++j)
            if (M.at(i, j) && v[j]) s = F.add(s, F.mul(M.at(i, j), v[j]));
        out[i] = s;
    }
    return out;
}

std::vector<int> normalize_proj(const std::vector<int>& v, const GF& F) {
    for (int x : v)
        if (x) {
            int inv = F.inv(x);
            std::vector<int> out(v.size());
            for (size_t i = 0; i < v.size(); ++i) out[i] = F.mul(v[i], inv);
            return out;
        }
    return v;
}

}  // namespace

MatPermImage mat_perm_image(const MatGroup& M, MatAction mode, int max_degree) {
    const GF& F = gf(M.q);
    std::vector<std::vector<int>> pts;
    std::map<std::vector<int>, int> index;
    // enumerate nonzero vectors or projective representatives
    std::vector<int> v(M.n, 0);
    for (;;) {
        int i = 0;
        while (i < M.n && ++v[i] == M.q) v[i++] = 0;
        if (i == M.n) break;
        bool zero = std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
        if (zero) continue;
        std::vector<int> key = v;
        if (mode == MatAction::ProjectivePoints) {
            key = normalize_proj(v, F);
            for (int j = static_cast<int>(key.size()) - 1; j >= 0; --j) {
                // normalize so the first nonzero coordinate is 1 (already done)
                (void)j;
            }
        }
        if (!index.count(key)) {
            index[key] = static_cast<int>(pts.size());
            pts.push_back(key);
        }
    }
    if (static_cast<int>(pts.size()) > max_degree)
        throw ResourceError("mat_perm_image: degree bound exceeded");
    std::vector<Perm> pgens;
    for (const auto& g : M.gens) {
        Perm p(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) {
            auto w = apply_vec(g, pts[i]);
            if (mode == MatAction::ProjectivePoints) w = normalize_proj(w, F);
            p[i] = index.at(w);
        }
        pgens.push_back(p);
    }
    MatPermImage out{PermGroup(static_cast<int>(pts.size()), pgens, max_degree), pts, false};
    return out;
}

PermGroup mat_coset_action(const MatGroup& M, const std::function<bool(const Mat&)>& member,
                           int expected_index, int max_degree) {
    if (expected_index > max_degree) throw ResourceError("mat_coset_action: degree bound");
    std::vector<Mat> reps{Mat::identity(M.n, M.q)};
    std::vector<Mat> reps_inv{Mat::identity(M.n, M.q)};
    auto find = [&](const Mat& g) -> int {
        for (size_t i = 0; i < reps.size(); ++i)
            if (member(mat_mul(reps_inv[i], g))) return static_cast<int>(i);
        return -1;
    };
    // BFS over cosets g H (left multiplication by generators)
    std::vector<std::vector<int>> images;
    for (size_t h = 0; h < reps.size(); ++h) {
        for (size_t gi = 0; gi < M.gens.size(); ++gi) {
            Mat t = mat_mul(M.gens[gi], reps[h]);
            int ix = find(t);
            if (ix < 0) {
                reps.push_back(t);
                reps_inv.push_back(mat_inv(t));
                if (static_cast<int>(reps.size()) > expected_index)
                    throw std::logic_error("mat_coset_action: index exceeds expected");
            }
        }
    }
    if (static_cast<int>(reps.size()) != expected_index)
        throw std::logic_error("mat_coset_action: index mismatch");
    std::vector<Perm> pgens;
    for (const auto& g : M.gens) {
        Perm p(reps.size());
        for (size_t i = 0; i < reps.size(); ++i) {
            int ix = find(mat_mul(g, reps[i]));
            if (ix < 0) throw std::logic_error("mat_coset_action: lost coset");
            p[i] = ix;
        }
        pgens.push_back(p);
    }
    return PermGroup(static_cast<int>(reps.size()), pgens, max_degree);
}

PermGroup mat_proj_plus_coset_action(const MatGroup& M,
                                     const std::function<bool(const Mat&)>& member,
                                     int expected_index, int max_degree) {
    MatPermImage proj = mat_perm_image(M, MatAction::ProjectivePoints, max_degree);
    PermGroup cos = mat_coset_action(M, member, expected_index, max_degree);
    int d1 = proj.group.degree();
    int d2 = cos.degree();
    if (d1 + d2 > max_degree) throw ResourceError("combined degree bound exceeded");
    std::vector<Perm> gens;
    for (size_t i = 0; i < M.gens.size(); ++i) {
        Perm p(d1 + d2);
        for (int x = 0; x < d1; ++x) p[x] = proj.group.generators()[i][x];
        for (int x = 0; x < d2; ++x) p[d1 + x] = d1 + cos.generators()[i][x];
        gens.push_back(p);
    }
    return PermGroup(d1 + d2, gens, max_degree);
}

MatGroup make_SL(int n, int q) {
    const GF& F = gf(q);
    MatGroup M;
    M.n = n;
    M.q = q;
    M.name = "SL(" + std::to_string(n) + "," + std::to_string(q) + ")";
    // transvections E_{i,i+1}(c) and E_{i+1,i}(c) for c in {1, generator}
    std::vector<int> coeffs{1};
    if (F.generator() != 1) coeffs.push_back(F.generator());
    for (int i = 0; i + 1 < n; ++i) {
        for (int c : coeffs) {
            Mat a = Mat::identity(n, q);
            a.at(i, i + 1) = c;
            M.gens.push_back(a);
            Mat b = Mat::identity(n, q);
            b.at(i + 1, i) = c;
            M.gens.push_back(b);
        }
    }
    return M;
}

MatGroup make_GL(int n, int q) {
    MatGroup M = make_SL(n, q);
    M.name = "GL(" + std::to_string(n) + "," + std::to_string(q) + ")";
    const GF& F = gf(q);
    if (F.generator() != 1) {
        Mat d = Mat::identity(n, q);
        d.at(0, 0) = F.generator();
        M.gens.push_back(d);
    }
    return M;
}

MatGroup make_Sp(int n, int q) {
    if (n % 2) throw std::invalid_argument("Sp: n must be even");
    const GF& F = gf(q);
    MatGroup M;
    M.n = n;
    M.q = q;
    M.name = "Sp(" + std::to_string(n) + "," + std::to_string(q) + ")";
    // standard symplectic form B(e_{2i}, e_{2i+1}) = 1 (pairs of coordinates)
    // symplectic transvections: x -> x + lambda B(x, v) v
    std::vector<std::vector<int>> vs;
    for (int i = 0; i < n; ++i) {
        std::vector<int> v(n, 0);
        v[i] = 1;
        vs.push_back(v);
    }
    // a few mixed vectors for good measure
    for (int i = 0; i + 2 < n; i += 2) {
        std::vector<int> v(n, 0);
        v[i] = 1;
        v[i + 2] = 1;
        vs.push_back(v);
        std::vector<int> w(n, 0);
        w[i + 1] = 1;
        w[i + 3] = 1;
        vs.push_back(w);
        std::vector<int> u(n, 0);
        u[i] = 1;
        u[i + 3] = 1;
        vs.push_back(u);
    }
    auto B = [&](const std::vector<int>& x, const std::vector<int>& y) {
        int s = 0;
        for (int i = 0; i < n; i += 2) {
            s = F.add(s, F.mul(x[i], y[i + 1]));
            s = F.sub(s, F.mul(x[i + 1], y[i]));
        }
        return s;
    };
    std::vector<int> lambdas{1};
    if (F.generator() != 1) lambdas.push_back(F.generator());
    for (const auto& v : vs)
        for (int lam : lambdas) {
            Mat T = Mat::identity(n, q);
            for (int j = 0; j < n; ++j) {
                std::vector<int> ej(n, 0);
                ej[j] = 1;
                int c = F.mul(lam, B(ej, v));
                // column j of T: e_j + c v  (acting on column vectors x -> Tx)
                for (int i = 0; i < n; ++i) T.at(i, j) = F.add(T.at(i, j), F.mul(c, v[i]));
            }
            M.gens.push_back(T);
        }
    return M;
}

namespace {

struct MatHash {
    size_t operator()(const Mat& m) const {
        uint64_t h = 14695981039346656037ull;
        for (int x : m.a) {
            h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

// shrink a generator list that happens to contain the whole group
void reduce_generators(MatGroup& M) {
    size_t total = M.gens.size();
    if (total <= 4) return;
    auto closure_size = [&](const std::vector<Mat>& gens) {
        std::unordered_map<Mat, int, MatHash> seen;
        std::vector<Mat> bfs{Mat::identity(M.n, M.q)};
        seen[bfs[0]] = 0;
        for (size_t h = 0; h < bfs.size(); ++h)
            for (const auto& g : gens) {
                Mat t = mat_mul(bfs[h], g);
                if (!seen.count(t)) {
                    seen[t] = 1;
                    bfs.push_back(t);
                }
            }
        return bfs.size();
    };
    std::vector<Mat> chosen;
    size_t cur = 1;
    for (const auto& g : M.gens) {
        auto cand = chosen;
        cand.push_back(g);
        size_t sz = closure_size(cand);
        if (sz > cur) {
            chosen = cand;
            cur = sz;
            if (cur == total) break;
        }
    }
    if (cur == total) M.gens = chosen;
}

}  // namespace

MatGroup make_SU(int n, int q) {
    // matrices over GF(q^2) with M* J M = J, J the antidiagonal, det = 1
    int q2 = q * q;
    const GF& F = gf(q2);
    MatGroup M;
    M.n = n;
    M.q = q2;
    M.name = "SU(" + std::to_string(n) + "," + std::to_string(q) + ")";
    uint64_t total = 1;
    for (int i = 0; i < n * n; ++i) {
        total *= q2;
        if (total > 80000000ull) throw ResourceError("make_SU: brute enumeration too large");
    }
    auto conj = [&](int x) { return F.pow(x, q); };
    Mat J(n, q2);
    for (int i = 0; i < n; ++i) J.at(i, n - 1 - i) = 1;
    auto preserves = [&](const Mat& A) {
        // A-bar-transpose J A == J
        Mat At(n, q2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) At.at(i, j) = conj(A.at(j, i));
        return mat_mul(At, mat_mul(J, A)) == J;
    };
    // brute-force enumeration of all matrices (tiny cases only)
    Mat A(n, q2);
    std::vector<int>& a = A.a;
    for (;;) {
        if (mat_det(A) == 1 && preserves(A)) M.gens.push_back(A);
        int i = 0;
        while (i < n * n && ++a[i] == q2) a[i++] = 0;
        if (i == n * n) break;
    }
    reduce_generators(M);
    return M;
}

MatGroup make_O_quadratic(int n, int eps, int q) {
    const GF& F = gf(q);
    MatGroup M;
    M.n = n;
    M.q = q;
    M.name = std::string("O(") + std::to_string(n) + "," + (eps > 0 ? "+" : "-") + "," +
             std::to_string(q) + ")";
    uint64_t total = 1;
    for (int i = 0; i < n * n; ++i) {
        total *= q;
        if (total > 400000000ull) throw ResourceError("make_O: brute enumeration too large");
    }
    // plus type: x1 x2 + x3 x4 + ...; minus type: replace the last pair by a
    // norm form x^2 + xy + c y^2 with t^2 + t + c irreducible
    int c_irr = 0;
    if (eps < 0) {
        for (int c = 1; c < q; ++c) {
            bool irred = true;
            for (int t = 0; t < q; ++t)
                if (F.add(F.add(F.mul(t, t), t), c) == 0) {  // t^2 + t + c = 0
                    irred = false;
                    break;
                }
            if (irred) {
                c_irr = c;
                break;
            }
        }
        if (!c_irr) throw std::logic_error("make_O: no irreducible quadratic");
    }
    auto quad = [&](const std::vector<int>& x) {
        int s = 0;
        int pairs = n / 2;
        for (int i = 0; i < pairs; ++i) {
            int u = x[2 * i], v = x[2 * i + 1];
            if (eps < 0 && i == pairs - 1) {
                s = F.add(s, F.add(F.mul(u, u), F.add(F.mul(u, v), F.mul(c_irr, F.mul(v, v)))));
            } else {
                s = F.add(s, F.mul(u, v));
            }
        }
        if (n % 2) s = F.add(s, F.mul(x[n - 1], x[n - 1]));
        return s;
    };
    // enumerate invertible matrices preserving the form
    Mat A(n, q);
    std::vector<int>& a = A.a;
    std::vector<std::vector<int>> basis(n);
    for (int i = 0; i < n; ++i) {
        basis[i].assign(n, 0);
        basis[i][i] = 1;
    }
    // q(v) must be preserved for all v; checking on a spanning set of vectors
    // requires all of them since q is quadratic: check all q^n vectors
    std::vector<std::vector<int>> allv;
    {
        std::vector<int> v(n, 0);
        for (;;) {
            int i = 0;
            while (i < n && ++v[i] == q) v[i++] = 0;
            if (i == n) break;
            allv.push_back(v);
        }
    }
    for (;;) {
        bool ok = mat_det(A) != 0;
        for (size_t vi = 0; ok && vi < allv.size(); ++vi) {
            if (quad(apply_vec(A, allv[vi])) != quad(allv[vi])) ok = false;
        }
        if (ok) M.gens.push_back(A);
        int i = 0;
        while (i < n * n && ++a[i] == q) a[i++] = 0;
        if (i == n * n) break;
    }
    reduce_generators(M);
    return M;
}

uint64_t order_GL(int n, int q) {
    uint64_t o = 1, qn = 1;
    for (int i = 0; i < n; ++i) qn *= q;
    uint64_t qi = 1;
    for (int i = 0; i < n; ++i) {
        o *= qn - qi;
        qi *= q;
    }
    return o;
}

uint64_t order_SL(int n, int q) { return order_GL(n, q) / (q - 1); }

uint64_t order_Sp(int n, int q) {
    int m = n / 2;
    uint64_t o = 1;
    for (int i = 0; i < m * m; ++i) o *= q;  // q^{m^2}
    uint64_t q2i = 1;
    for (int i = 1; i <= m; ++i) {
        q2i = 1;
        for (int j = 0; j < 2 * i; ++j) q2i *= q;
        o *= q2i - 1;
    }
    return o;
}

uint64_t order_SU(int n, int q) {
    // q^{n(n-1)/2} * prod_{i=2}^{n} (q^i - (-1)^i)
    uint64_t o = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) o *= q;
    for (int i = 2; i <= n; ++i) {
        uint64_t qi = 1;
        for (int j = 0; j < i; ++j) qi *= q;
        o *= (i % 2 == 0) ? qi - 1 : qi + 1;
    }
    return o;
}

uint64_t order_O_eps(int n, int eps, int q) {
    // |O_{2m}^eps(q)| = 2 q^{m(m-1)} (q^m - eps) prod_{i=1}^{m-1} (q^{2i} - 1), q even: same
    if (n % 2) throw std::invalid_argument("order_O_eps: odd dimension unsupported here");
    int m = n / 2;
    uint64_t o = 2;
    for (int i = 0; i < m * (m - 1); ++i) o *= q;
    uint64_t qm = 1;
    for (int i = 0; i < m; ++i) qm *= q;
    o *= (eps > 0) ? qm - 1 : qm + 1;
    for (int i = 1; i <= m - 1; ++i) {
        uint64_t q2i = 1;
        for (int j = 0; j < 2 * i; ++j) q2i *= q;
        o *= q2i - 1;
    }
    return o;
}

}  // namespace tamelab::grp
