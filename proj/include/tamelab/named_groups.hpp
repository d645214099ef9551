#pragma once

#include <string>
#include <vector>

#include "tamelab/permgroup.hpp"

namespace tamelab::grp {

// Registry of the concrete groups used throughout: each comes as a faithful
// permutation group of modest degree with its order asserted against the
// classical formula at construction time.
const PermGroup& named_group(const std::string& name);
std::vector<std::string> named_group_list();
bool is_named_group(const std::string& name);

// parametric constructors (degree bounds apply): kind in {SL, GL, Sp, SU, O}
PermGroup construct_group(const std::string& kind, int n, int q, int eps = 0,
                          int max_degree = 2000);

}  // namespace tamelab::grp
