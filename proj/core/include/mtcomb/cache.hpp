#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtcomb/triangle.hpp"

namespace mtcomb {

/// On-disk enumeration cache: one file per n holding MT_n in canonical
/// order, one triangle text per line, under a version header.  Files with a
/// stale header are ignored and rewritten, never migrated.
class EnumerationCache {
public:
    /// Empty directory disables the cache entirely.
    explicit EnumerationCache(std::string directory) : dir_(std::move(directory)) {}

    /// The --cache-dir flag value, else the MTCOMB_CACHE_DIR environment
    /// variable, else disabled.
    static EnumerationCache from_flag(const std::string& flag_value);

    bool enabled() const { return !dir_.empty(); }
    std::string path_for(int n) const;

    /// Cached list when a valid file exists.
    std::optional<std::vector<MonotoneTriangle>> load(int n) const;

    /// Enumerates on miss and writes the file (best effort).
    std::vector<MonotoneTriangle> load_or_enumerate(int n, int max_n = 8);

private:
    std::string dir_;
};

}  // namespace mtcomb
