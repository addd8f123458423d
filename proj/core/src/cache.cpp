#include "mtcomb/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "mtcomb/enumerate.hpp"
#include "mtcomb/serialize.hpp"

namespace mtcomb {

static const char* kVersion = "mtcomb-cache v1";

EnumerationCache EnumerationCache::from_flag(const std::string& flag_value) {
    if (!flag_value.empty()) return EnumerationCache(flag_value);
    const char* env = std::getenv("MTCOMB_CACHE_DIR");
    return EnumerationCache(env ? env : "");
}

std::string EnumerationCache::path_for(int n) const {
    return (std::filesystem::path(dir_) / ("mt_" + std::to_string(n) + ".txt")).string();
}

std::optional<std::vector<MonotoneTriangle>> EnumerationCache::load(int n) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(n));
    if (!in) return std::nullopt;
    std::string header;
    if (!std::getline(in, header) ||
        header != std::string("# ") + kVersion + " n=" + std::to_string(n))
        return std::nullopt;
    std::vector<MonotoneTriangle> out;
    std::string line;
    try {
        while (std::getline(in, line)) {
            if (line.empty() && n > 1) continue;
            MonotoneTriangle t = parse_triangle(line);
            if (t.n != n) return std::nullopt;
            out.push_back(std::move(t));
        }
    } catch (const std::exception&) {
        return std::nullopt;  // corrupt cache counts as a miss
    }
    return out;
}

std::vector<MonotoneTriangle> EnumerationCache::load_or_enumerate(int n, int max_n) {
    if (auto cached = load(n)) return *cached;
    std::vector<MonotoneTriangle> out = all_mt(n, max_n);
    if (enabled()) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        std::ofstream f(path_for(n));
        if (f) {
            f << "# " << kVersion << " n=" << n << "\n";
            for (const auto& t : out) f << format_triangle(t) << "\n";
        }
    }
    return out;
}

}  // namespace mtcomb
