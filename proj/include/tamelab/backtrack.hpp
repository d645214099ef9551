#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tamelab/permgroup.hpp"

namespace tamelab::grp {

// g in G with g a_i g^-1 = b_i for all pairs, or nullopt.
std::optional<Perm> transporter_tuple(const PermGroup& G,
                                      const std::vector<std::pair<Perm, Perm>>& pairs,
                                      CancelToken* tok = nullptr);

inline std::optional<Perm> conjugating_element(const PermGroup& G, const Perm& x, const Perm& y,
                                               CancelToken* tok = nullptr) {
    return transporter_tuple(G, {{x, y}}, tok);
}

// centralizer of the subgroup generated by gens (iterated element centralizers)
PermGroup centralizer_subgroup(const PermGroup& G, const std::vector<Perm>& gens,
                               CancelToken* tok = nullptr);

// normalizer of the subgroup with the given full element list, via the orbit
// of the subgroup under conjugation; also reports the number of conjugates
PermGroup normalizer_subgroup(const PermGroup& G, const std::vector<Perm>& subgroup_elements,
                              uint64_t* n_conjugates = nullptr, CancelToken* tok = nullptr);

// Sylow p-subgroup (full element list of the result is usually wanted too)
PermGroup sylow_subgroup(const PermGroup& G, uint64_t p, CancelToken* tok = nullptr);

// conjugacy class representatives of elements; |G| must be enumerable
struct ElementClasses {
    std::vector<Perm> reps;
    std::vector<uint64_t> sizes;
    // class index of an arbitrary element is found by search
};
ElementClasses element_classes(const PermGroup& G, uint64_t cap = 2000000);

}  // namespace tamelab::grp
