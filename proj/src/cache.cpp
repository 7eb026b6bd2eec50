#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qchar/fm.hpp"
#include "qchar/io.hpp"

namespace qchar {

namespace {

std::string key_for(const CartanData& cd, int node)
{
    return cd.name() + "_node" + std::to_string(node);
}

QCharacter shifted_copy(const QCharacter& base, int r)
{
    if (r == 0)
        return base;
    QCharacter out = base;
    out.highest = base.highest.shifted(r);
    out.poly = base.poly.shifted(r);
    out.meta.generator_exponent = base.meta.generator_exponent + r;
    return out;
}

} // namespace

QCharacterCache::QCharacterCache(std::filesystem::path dir, FmOptions opts)
    : dir_(std::move(dir)), opts_(opts)
{
}

std::filesystem::path QCharacterCache::default_directory()
{
    const char* env = std::getenv("QCHAR_CACHE_DIR");
    return env && *env ? std::filesystem::path(env) : std::filesystem::path{};
}

std::filesystem::path QCharacterCache::file_for(const CartanData& cd, int node) const
{
    return dir_ / (key_for(cd, node) + ".json");
}

QCharacter QCharacterCache::get(const CartanData& cd, int node, int r)
{
    const std::string key = key_for(cd, node);
    {
        std::shared_lock lock(mutex_);
        if (auto it = memory_.find(key); it != memory_.end())
            return shifted_copy(it->second, r);
    }
    std::unique_lock lock(mutex_);
    if (auto it = memory_.find(key); it != memory_.end())
        return shifted_copy(it->second, r);

    const QCharacterMeta expected{std::string(1, cd.type_label), cd.rank, node, 0,
                                  kAlgorithmVersion};
    std::optional<QCharacter> found;
    if (!dir_.empty()) {
        const auto path = file_for(cd, node);
        if (std::filesystem::exists(path)) {
            std::ifstream in(path, std::ios::binary);
            std::stringstream buf;
            buf << in.rdbuf();
            QCharacter qc;
            try {
                qc = qcharacter_from_json(json::parse(buf.str()));
            } catch (const std::exception& e) {
                throw std::runtime_error("corrupt cache file " + path.string() + ": " + e.what());
            }
            const bool stale = qc.meta.algorithm_version != kAlgorithmVersion;
            if (!stale) {
                if (!(qc.meta == expected) || qc.highest != YMonomial::variable(node, 0))
                    throw std::runtime_error("cache file " + path.string() +
                                             " describes a different representation");
                found = std::move(qc);
            }
        }
    }
    if (!found) {
        found = fm_fundamental(cd, node, 0, opts_);
        if (!dir_.empty()) {
            std::filesystem::create_directories(dir_);
            write_file_atomic(file_for(cd, node), to_json(*found).dump());
        }
    }
    const QCharacter& stored = memory_.emplace(key, std::move(*found)).first->second;
    return shifted_copy(stored, r);
}

} // namespace qchar
