#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tamelab/permgroup.hpp"

namespace tamelab::grp {

// Arithmetic in GF(q), q = p^e <= 6561, with full lookup tables.
class GF {
public:
    explicit GF(int q);
    int q() const { return q_; }
    int p() const { return p_; }
    int e() const { return e_; }
    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const { return inv_[a]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int pow(int a, long long k) const;
    int frob(int a) const { return pow(a, p_); }     // x -> x^p
    int generator() const { return gen_; }
    // elements are 0..q-1 with 0 = zero, 1 = one

private:
    int q_, p_, e_, gen_;
    std::vector<int> add_, mul_, neg_, inv_;
};

const GF& gf(int q);  // cached fields

// Square matrix over GF(q), row-major entries as field indices.
struct Mat {
    int n = 0;
    int q = 0;
    std::vector<int> a;
    Mat() = default;
    Mat(int n_, int q_) : n(n_), q(q_), a(n_ * n_, 0) {}
    int& at(int i, int j) { return a[i * n + j]; }
    int at(int i, int j) const { return a[i * n + j]; }
    static Mat identity(int n, int q);
    bool operator==(const Mat& o) const = default;
};

Mat mat_mul(const Mat& A, const Mat& B);
Mat mat_pow(const Mat& A, uint64_t k);
int mat_det(const Mat& A);
Mat mat_inv(const Mat& A);
Mat mat_transpose(const Mat& A);
Mat mat_frobenius(const Mat& A);  // entrywise x -> x^p
uint64_t mat_order(const Mat& A, uint64_t cap = 1 << 22);

// Action modes for converting a matrix group to permutations.
enum class MatAction {
    NonzeroVectors,
    ProjectivePoints,
};

struct MatGroup {
    int n = 0;
    int q = 0;
    std::vector<Mat> gens;
    std::string name;
};

// permutation image of the action on nonzero vectors / projective points;
// point labels are returned so callers can interpret orbits
struct MatPermImage {
    PermGroup group;
    std::vector<std::vector<int>> points;  // coordinate vectors
    bool faithful;
};
MatPermImage mat_perm_image(const MatGroup& M, MatAction mode, int max_degree = 2000);

// action on right cosets of the subgroup { g : member(g) }, BFS from identity
PermGroup mat_coset_action(const MatGroup& M, const std::function<bool(const Mat&)>& member,
                           int expected_index, int max_degree = 2000);

// intransitive action: projective points plus cosets (used when the
// projective action alone is unfaithful)
PermGroup mat_proj_plus_coset_action(const MatGroup& M,
                                     const std::function<bool(const Mat&)>& member,
                                     int expected_index, int max_degree = 2000);

// standard constructions (ranks and fields small enough for the degree bound)
MatGroup make_SL(int n, int q);
MatGroup make_GL(int n, int q);
MatGroup make_Sp(int n, int q);               // n even
MatGroup make_SU(int n, int q);               // matrices over GF(q^2)
MatGroup make_O_quadratic(int n, int eps, int q);  // full orthogonal group of the form

// order formulas for cross-checks
uint64_t order_SL(int n, int q);
uint64_t order_GL(int n, int q);
uint64_t order_Sp(int n, int q);
uint64_t order_SU(int n, int q);
uint64_t order_O_eps(int n, int eps, int q);  // |O_n^eps(q)|, q even convention O = SO

}  // namespace tamelab::grp
