#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tamelab/perm.hpp"

namespace tamelab::grp {

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cooperative cancellation for long searches.
struct CancelToken {
    std::atomic<bool> cancelled{false};
    void check() const {
        if (cancelled.load(std::memory_order_relaxed))
            throw ResourceError("search cancelled");
    }
};

// Permutation group with a deterministic Schreier-Sims stabilizer chain.
// Base points are always the smallest moved points, so identical generator
// lists produce identical chains and transcripts.
class PermGroup {
public:
    PermGroup() = default;
    PermGroup(int degree, std::vector<Perm> gens, int max_degree = 0);

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }
    uint64_t order() const { return order_; }
    bool trivial() const { return order_ == 1; }

    bool contains(const Perm& g) const;
    // residue after sifting through the chain (identity iff member)
    Perm sift(const Perm& g) const;

    size_t base_length() const { return levels_.size(); }
    int base_point(size_t i) const { return levels_[i].base; }
    const std::vector<int>& basic_orbit(size_t i) const { return levels_[i].orbit; }
    // transversal element u with u(base_i) = pt
    Perm transversal(size_t i, int pt) const;

    // enumerate all elements (throws ResourceError above the cap)
    std::vector<Perm> elements(uint64_t cap = 4000000) const;
    // visit all elements without storing them; callback may return false to stop
    void for_each_element(const std::function<bool(const Perm&)>& fn) const;

    // orbit of a point under the group
    std::vector<int> orbit_of(int pt) const;

private:
    struct Level {
        int base = -1;
        std::vector<int> orbit;
        std::vector<int> pos;       // point -> orbit index or -1
        std::vector<int> via_gen;   // edge label into BFS tree (index into gens of level)
        std::vector<int> via_from;  // BFS predecessor
        std::vector<Perm> gens;     // generators fixing all earlier base points
    };

    void complete_level(size_t level);
    void rebuild_orbit(size_t level);
    Perm sift_from(const Perm& g, size_t from) const;
    Perm transversal_internal(const Level& lv, int pt) const;

    int degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<Level> levels_;
    uint64_t order_ = 1;
};

// conjugation orbit of an element with stabilizer generators (orbit-stabilizer)
struct ConjOrbit {
    std::vector<Perm> orbit;
    std::vector<Perm> stab_gens;
};
ConjOrbit conjugation_orbit(const PermGroup& G, const Perm& x, uint64_t cap = 8000000,
                            CancelToken* tok = nullptr);

// centralizer of an element
PermGroup centralizer_element(const PermGroup& G, const Perm& x, CancelToken* tok = nullptr);

}  // namespace tamelab::grp
