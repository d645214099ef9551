#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tamelab/perm.hpp"

namespace tamelab::grp {

// On-disk cache of expensive group data, keyed by a canonical hash of the
// generators.  Files are a line-oriented text format with a schema version
// header; the directory comes from TAMELAB_CACHE (default ./.tamelab).
class DiskCache {
public:
    static DiskCache& instance();

    std::string directory() const { return dir_; }
    void set_directory(const std::string& d) { dir_ = d; }

    static uint64_t key_of(int degree, const std::vector<Perm>& gens);

    // strong generator lists (chains rebuild quickly from them)
    void store_strong_gens(uint64_t key, int degree, const std::vector<Perm>& sgens);
    std::optional<std::vector<Perm>> load_strong_gens(uint64_t key, int degree) const;

    // arbitrary integer-vector payloads (subgroup class tables etc.)
    void store_vectors(uint64_t key, const std::string& tag,
                       const std::vector<std::vector<int>>& data);
    std::optional<std::vector<std::vector<int>>> load_vectors(uint64_t key,
                                                              const std::string& tag) const;

private:
    DiskCache();
    std::string path_for(uint64_t key, const std::string& tag) const;
    std::string dir_;
};

}  // namespace tamelab::grp
