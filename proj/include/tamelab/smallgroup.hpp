#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tamelab/perm.hpp"
#include "tamelab/permgroup.hpp"

namespace tamelab::grp {

// Finite group given by its full multiplication table; element 0 is the
// identity.  Used for Sylow subgroups, automorphism computations and all
// structure recognition on groups of a few hundred elements.
class SmallGroup {
public:
    SmallGroup() = default;

    static SmallGroup from_perms(int degree, const std::vector<Perm>& gens, size_t cap = 4096);
    // mul given as a function on 0..n-1
    static SmallGroup from_table(int n, const std::function<int(int, int)>& mulfn);

    int size() const { return n_; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    int inverse(int a) const { return inv_[a]; }
    int order_of(int a) const { return elt_order_[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inverse(g)); }
    int power(int a, long long k) const;
    int commutator(int a, int b) const {  // a^-1 b^-1 a b
        return mul(mul(inverse(a), inverse(b)), mul(a, b));
    }

    // permutation realization when built from perms (empty otherwise)
    const std::vector<Perm>& element_perms() const { return elems_; }
    std::optional<int> index_of_perm(const Perm& p) const;

    bool is_abelian() const;
    std::vector<int> abelian_invariants() const;  // empty if not abelian
    std::vector<int> center() const;
    std::vector<int> derived_subgroup() const;
    std::vector<int> closure(std::vector<int> seed) const;
    // order profile: multiset of element orders
    std::vector<int> order_profile() const;

    // fingerprint of an element invariant under automorphisms
    uint64_t element_fingerprint(int x) const;

    // small generating sequence (greedy, at most 4 elements)
    std::vector<int> small_generating_set() const;

    // all automorphisms as image maps on 0..n-1
    std::vector<std::vector<uint16_t>> automorphisms(size_t cap = 2000000) const;
    // inner automorphisms
    std::vector<std::vector<uint16_t>> inner_automorphisms() const;

    // isomorphisms onto another group; stops after the first if !all
    std::vector<std::vector<uint16_t>> isomorphisms_to(const SmallGroup& other, bool all,
                                                       size_t cap = 2000000) const;
    bool isomorphic_to(const SmallGroup& other) const {
        return size() == other.size() && !isomorphisms_to(other, false).empty();
    }

    // the automorphism group as a permutation group on the elements
    PermGroup automorphism_permgroup() const;

private:
    int n_ = 0;
    std::vector<uint16_t> table_;
    std::vector<uint16_t> inv_;
    std::vector<int> elt_order_;
    std::vector<Perm> elems_;
    mutable std::vector<uint64_t> fp_cache_;

    void finish_init();
};

// quotient of G by a normal subgroup (given as a sorted element list)
SmallGroup quotient_group(const SmallGroup& G, const std::vector<int>& N);

// the subgroup on the given (sorted, closed) element list as its own group
SmallGroup subgroup_as_group(const SmallGroup& G, const std::vector<int>& elems);

// structure models
SmallGroup model_cyclic(int n);
SmallGroup model_dihedral(int order);            // order = 2m
SmallGroup model_quaternion(int order);          // generalized quaternion, order = 2^k >= 8
SmallGroup model_symmetric(int pts);             // small symmetric group
SmallGroup model_direct_product(const SmallGroup& a, const SmallGroup& b);
SmallGroup model_elementary_abelian(int p, int rank);
SmallGroup model_gl2_3();

// readable isomorphism-type name for small groups of interest; falls back to
// "order<N>" with abelian invariants when recognized abelian
std::string recognize_small_group(const SmallGroup& g);

}  // namespace tamelab::grp
