#pragma once

#include <cstdint>
#include <vector>

#include "tamelab/permgroup.hpp"
#include "tamelab/smallgroup.hpp"

namespace tamelab::grp {

// Subgroup of a SmallGroup as a sorted list of element indices.
using Sub = std::vector<int>;

// All subgroups by breadth-first closure; complete for any finite group but
// intended for |G| <= 2000 (guarded by the count cap).
std::vector<Sub> all_subgroups(const SmallGroup& G, size_t cap = 400000);

// G-conjugacy classes of subgroups, from all_subgroups.
struct SubgroupClasses {
    std::vector<Sub> reps;
    std::vector<uint64_t> class_sizes;
    uint64_t total = 0;  // total number of subgroups
};
SubgroupClasses subgroup_classes(const SmallGroup& G, size_t cap = 400000);

// Two-tier enumeration for PermGroups per the groups-module contract:
// the group is converted to a Cayley table (order <= order_cap) and the
// breadth-first enumeration is used; for orders <= 2000 the class-size
// identity  sum over classes of [G:N(H)] = #subgroups  is asserted against an
// independent count.
SubgroupClasses subgroups_up_to_conjugacy(const PermGroup& G, uint64_t order_cap = 25000);

// Class-based enumeration working directly on a permutation group with a
// global element index: cyclic subgroup classes, closed under prime-index
// cyclic extension, seeded with the 2-generated perfect subgroups.  Intended
// for 2000 < |G| <= 25000 where the Cayley-table route is too large.
struct PermSubgroupClasses {
    std::vector<std::vector<int>> reps;  // element-index lists, sorted
    std::vector<uint64_t> class_sizes;
    std::vector<Perm> element_of;        // global element table
};
PermSubgroupClasses subgroup_classes_cyclic_extension(const PermGroup& G,
                                                      uint64_t order_cap = 25000,
                                                      CancelToken* tok = nullptr);

// order of the subgroup poset member etc. helpers
bool sub_is_abelian(const SmallGroup& G, const Sub& s);

// normalizer of a subgroup inside a SmallGroup
Sub small_normalizer(const SmallGroup& G, const Sub& s);
Sub small_centralizer(const SmallGroup& G, const Sub& s);

}  // namespace tamelab::grp
