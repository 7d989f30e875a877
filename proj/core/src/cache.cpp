#include "padezeta/cache.hpp"

#include "padezeta/errors.hpp"
#include "padezeta/io.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace padezeta {

namespace {

std::uint64_t fnv1a(const std::string& s, std::uint64_t h) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

std::string cache_key(const ProblemParams& pp) {
    std::uint64_t h = 14695981039346656037ULL;
    for (const CycScalar& c : pp.f) {
        h = fnv1a(c.str(), h);
        h = fnv1a("\x1f", h);
    }
    std::ostringstream os;
    os << "a" << pp.a << "_r" << pp.r << "_N" << pp.N << "_n" << pp.n << "_p" << pp.p << "_z"
       << (pp.z0 == Z0Kind::One ? "one" : "half") << "_f" << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

std::string resolve_cache_dir(const std::string& explicit_dir) {
    if (!explicit_dir.empty()) return explicit_dir;
    const char* env = std::getenv("PADEZETA_CACHE");
    return env == nullptr ? std::string() : std::string(env);
}

void cache_store_table(const std::string& dir, const ProblemParams& pp,
                       const LinearFormTable& t) {
    if (dir.empty()) throw CacheError("cache_store_table: empty cache directory");
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw CacheError("cache_store_table: cannot create " + dir + ": " + ec.message());

    const fs::path final_path = fs::path(dir) / (cache_key(pp) + ".json");
    std::ostringstream tmpname;
    tmpname << final_path.filename().string() << ".tmp" << ::getpid();
    const fs::path tmp_path = fs::path(dir) / tmpname.str();

    {
        std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
        if (!out) throw CacheError("cache_store_table: cannot open " + tmp_path.string());
        out << canonical_document(json_of(t));
        out.flush();
        if (!out) throw CacheError("cache_store_table: write failure on " + tmp_path.string());
    }
    fs::rename(tmp_path, final_path, ec);
    if (ec) {
        fs::remove(tmp_path, ec);
        throw CacheError("cache_store_table: rename failed for " + final_path.string());
    }
}

std::optional<LinearFormTable> cache_load_table(const std::string& dir,
                                                const ProblemParams& pp) {
    if (dir.empty()) return std::nullopt;
    namespace fs = std::filesystem;
    const fs::path path = fs::path(dir) / (cache_key(pp) + ".json");
    std::error_code ec;
    if (!fs::exists(path, ec) || ec) return std::nullopt;

    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError("cache_load_table: cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) {
        throw CacheError("cache_load_table: read failure on " + path.string());
    }

    LinearFormTable t = table_from_json(buf.str()); // CacheError on parse trouble
    if (t.a != pp.a || t.N != pp.N || t.d0 != pp.d0() || t.i0 != pp.i0()) {
        throw CacheError("cache_load_table: entry at " + path.string() +
                         " does not match the requested instance");
    }
    return t;
}

} // namespace padezeta
