#include "slopelab/knots.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "slopelab/sha256.hpp"

namespace slopelab {

namespace fs = std::filesystem;

JonesCache::JonesCache(fs::path root) : root_(std::move(root)) {
    std::error_code ec;
    fs::create_directories(root_, ec);
    if (ec || !fs::is_directory(root_))
        throw CacheError("cannot create cache root " + root_.string() + ": " + ec.message());
}

std::string JonesCache::key(const std::string& canonical, int n, bool normalized) {
    return canonical + " " + std::to_string(n) + " " + (normalized ? "1" : "0");
}

fs::path JonesCache::entry_path(const std::string& canonical, int n, bool normalized) const {
    return root_ / (sha256_hex(key(canonical, n, normalized)) + ".cjp");
}

std::optional<LaurentPoly> JonesCache::get(const std::string& canonical, int n,
                                           bool normalized) const {
    const fs::path path = entry_path(canonical, n, normalized);
    std::error_code ec;
    if (!fs::exists(path, ec)) {
        if (ec) throw CacheError("cannot stat cache entry " + path.string());
        return std::nullopt;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError("cannot open cache entry " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw CacheError("read failure on cache entry " + path.string());

    const std::string text = buf.str();
    const auto nl = text.find('\n');
    if (nl == std::string::npos) return std::nullopt; // corrupt: recompute
    if (text.substr(0, nl) != key(canonical, n, normalized)) return std::nullopt;
    try {
        return LaurentPoly::deserialize(text.substr(nl + 1));
    } catch (const DomainError&) {
        return std::nullopt; // corrupt payload: treated as absent
    }
}

void JonesCache::put(const std::string& canonical, int n, bool normalized,
                     const LaurentPoly& value) const {
    const fs::path path = entry_path(canonical, n, normalized);

    static std::mt19937_64 rng(std::random_device{}());
    const fs::path tmp = root_ / (path.filename().string() + ".tmp" + std::to_string(rng()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CacheError("cannot open temp cache file " + tmp.string());
        out << key(canonical, n, normalized) << "\n" << value.serialize();
        out.flush();
        if (!out) throw CacheError("write failure on " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw CacheError("cannot publish cache entry " + path.string() + ": " + ec.message());
    }
}

std::size_t JonesCache::entry_count() const {
    std::size_t count = 0;
    for (const auto& e : fs::directory_iterator(root_))
        if (e.path().extension() == ".cjp") ++count;
    return count;
}

std::size_t JonesCache::clear() const {
    std::size_t count = 0;
    for (const auto& e : fs::directory_iterator(root_)) {
        if (e.path().extension() == ".cjp") {
            std::error_code ec;
            if (fs::remove(e.path(), ec)) ++count;
        }
    }
    return count;
}

} // namespace slopelab
