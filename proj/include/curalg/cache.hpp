#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "curalg/current_module.hpp"

namespace curalg {

inline constexpr const char* kCacheEnv = "CURALG_CACHE_DIR";

/// On-disk store of module JSON keyed by (algebra, spec). Disabled when the
/// directory is empty.
class ModuleCache {
  public:
    explicit ModuleCache(std::filesystem::path dir);
    /// Directory from $CURALG_CACHE_DIR (disabled if unset).
    static ModuleCache from_env();

    bool enabled() const { return !dir_.empty(); }
    std::filesystem::path path_for(const std::string& algebra, const std::string& spec) const;
    /// Missing, unreadable or stale (schema mismatch) entries yield nullopt.
    std::optional<CurrentModule> load(const std::string& algebra, const std::string& spec) const;
    /// Write-then-rename, so readers never see partial files.
    void store(const std::string& algebra, const std::string& spec, const CurrentModule& m) const;

  private:
    std::filesystem::path dir_;
};

}  // namespace curalg
