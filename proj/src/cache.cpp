#include "curalg/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <unistd.h>

#include "curalg/serialize.hpp"

namespace curalg {

ModuleCache::ModuleCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

ModuleCache ModuleCache::from_env() {
    const char* v = std::getenv(kCacheEnv);
    return ModuleCache(v ? std::filesystem::path(v) : std::filesystem::path());
}

std::filesystem::path ModuleCache::path_for(const std::string& algebra, const std::string& spec) const {
    std::string name = algebra + "__" + spec;
    for (char& c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-' && c != '=') c = '_';
    return dir_ / (name + ".json");
}

std::optional<CurrentModule> ModuleCache::load(const std::string& algebra, const std::string& spec) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(algebra, spec));
    if (!in) return std::nullopt;
    try {
        Json j = Json::parse(in);
        if (j.value("algebra", "") != algebra || j.value("spec", "") != spec) return std::nullopt;
        return module_from_json(j);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void ModuleCache::store(const std::string& algebra, const std::string& spec, const CurrentModule& m) const {
    if (!enabled()) return;
    static std::atomic<int> counter{0};
    std::filesystem::create_directories(dir_);
    const auto target = path_for(algebra, spec);
    auto tmp = target;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    Json j = module_json(m);
    j["spec"] = spec;
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << j.dump() << '\n';
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace curalg
