#include "tamelab/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace tamelab::grp {

namespace {
constexpr const char* kSchema = "tamelab-cache v1";
}

DiskCache::DiskCache() {
    const char* env = std::getenv("TAMELAB_CACHE");
    dir_ = env && *env ? env : "./.tamelab";
}

DiskCache& DiskCache::instance() {
    static DiskCache c;
    return c;
}

uint64_t DiskCache::key_of(int degree, const std::vector<Perm>& gens) {
    uint64_t h = 14695981039346656037ull ^ static_cast<uint64_t>(degree);
    auto sorted = gens;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& g : sorted)
        for (int x : g) {
            h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6);
            h *= 1099511628211ull;
        }
    return h;
}

std::string DiskCache::path_for(uint64_t key, const std::string& tag) const {
    std::ostringstream os;
    os << dir_ << "/" << tag << "-" << std::hex << key << ".txt";
    return os.str();
}

void DiskCache::store_strong_gens(uint64_t key, int degree, const std::vector<Perm>& sgens) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return;  // cache is best-effort
    std::ofstream out(path_for(key, "chain"));
    if (!out) return;
    out << kSchema << "\n" << degree << " " << sgens.size() << "\n";
    for (const auto& g : sgens) {
        for (size_t i = 0; i < g.size(); ++i) out << (i ? " " : "") << g[i];
        out << "\n";
    }
}

std::optional<std::vector<Perm>> DiskCache::load_strong_gens(uint64_t key, int degree) const {
    std::ifstream in(path_for(key, "chain"));
    if (!in) return std::nullopt;
    std::string header;
    std::getline(in, header);
    if (header != kSchema) return std::nullopt;
    int deg = 0;
    size_t count = 0;
    in >> deg >> count;
    if (deg != degree) return std::nullopt;
    std::vector<Perm> out(count, Perm(degree));
    for (auto& g : out)
        for (int i = 0; i < degree; ++i)
            if (!(in >> g[i])) return std::nullopt;
    return out;
}

void DiskCache::store_vectors(uint64_t key, const std::string& tag,
                              const std::vector<std::vector<int>>& data) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return;
    std::ofstream out(path_for(key, tag));
    if (!out) return;
    out << kSchema << "\n" << data.size() << "\n";
    for (const auto& v : data) {
        out << v.size();
        for (int x : v) out << " " << x;
        out << "\n";
    }
}

std::optional<std::vector<std::vector<int>>> DiskCache::load_vectors(
    uint64_t key, const std::string& tag) const {
    std::ifstream in(path_for(key, tag));
    if (!in) return std::nullopt;
    std::string header;
    std::getline(in, header);
    if (header != kSchema) return std::nullopt;
    size_t count = 0;
    in >> count;
    std::vector<std::vector<int>> out(count);
    for (auto& v : out) {
        size_t len = 0;
        if (!(in >> len)) return std::nullopt;
        v.resize(len);
        for (auto& x : v)
            if (!(in >> x)) return std::nullopt;
    }
    return out;
}

}  // namespace tamelab::grp
