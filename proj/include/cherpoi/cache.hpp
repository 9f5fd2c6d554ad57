#pragma once

// On-disk cache of expensive objects, keyed by (kind, n, engine version).
//
// Each entry is one JSON file holding the payload and an FNV-1a checksum of
// its serialization. Entries whose checksum, key or version do not match are
// treated as absent and recomputed. Writes go to a temporary file in the same
// directory and are renamed into place.

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <unistd.h>
#include <vector>

#include "cherpoi/serialize.hpp"

namespace cherpoi {

inline std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

enum class EntryStatus { ok, missing, corrupt, stale };

inline std::string to_string(EntryStatus s) {
  switch (s) {
    case EntryStatus::ok: return "ok";
    case EntryStatus::missing: return "missing";
    case EntryStatus::corrupt: return "corrupt";
    case EntryStatus::stale: return "stale";
  }
  return "?";
}

struct CacheEntryInfo {
  std::string file;
  std::string kind;
  int n = 0;
  std::string engine;
  EntryStatus status = EntryStatus::missing;
  std::uintmax_t bytes = 0;
};

class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  // --cache-dir, then CHERPOI_CACHE, then $XDG_CACHE_HOME/cherpoi or ~/.cache/cherpoi.
  static std::filesystem::path resolve(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("CHERPOI_CACHE"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "cherpoi";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "cherpoi";
    return ".cherpoi-cache";
  }

  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path file_for(const std::string& kind, int n) const {
    return dir_ / (kind + "-n" + std::to_string(n) + "-" + kEngineVersion + ".json");
  }

  EntryStatus status(const std::string& kind, int n) const {
    EntryStatus s;
    read(file_for(kind, n), kind, n, &s);
    return s;
  }

  std::optional<Json> load(const std::string& kind, int n) const {
    EntryStatus s;
    auto payload = read(file_for(kind, n), kind, n, &s);
    if (s != EntryStatus::ok) return std::nullopt;
    return payload;
  }

  void store(const std::string& kind, int n, const Json& payload) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw InvalidInput("cache directory " + dir_.string() + " cannot be created: " + ec.message());
    Json doc{{"kind", kind}, {"n", n}, {"engine", kEngineVersion}, {"checksum", hex64(fnv1a(payload.dump()))}, {"payload", payload}};
    const auto target = file_for(kind, n);
    static std::atomic<unsigned> counter{0};
    std::ostringstream tmpname;
    tmpname << target.filename().string() << ".tmp." << ::getpid() << "." << std::this_thread::get_id() << "." << counter++;
    const auto tmp = dir_ / tmpname.str();
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw InvalidInput("cache directory " + dir_.string() + " is not writable");
      out << doc.dump() << '\n';
      out.flush();
      if (!out) {
        std::filesystem::remove(tmp, ec);
        throw InvalidInput("write to cache directory " + dir_.string() + " failed");
      }
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
      std::filesystem::remove(tmp, ec);
      throw InvalidInput("cannot move cache entry into place in " + dir_.string());
    }
  }

  std::vector<CacheEntryInfo> inspect() const {
    std::vector<CacheEntryInfo> out;
    std::error_code ec;
    if (!std::filesystem::is_directory(dir_, ec)) return out;
    for (const auto& f : std::filesystem::directory_iterator(dir_, ec)) {
      if (!f.is_regular_file() || f.path().extension() != ".json") continue;
      CacheEntryInfo info;
      info.file = f.path().filename().string();
      info.bytes = f.file_size(ec);
      try {
        std::ifstream in(f.path(), std::ios::binary);
        Json doc = Json::parse(in);
        info.kind = doc.value("kind", "");
        info.n = doc.value("n", 0);
        info.engine = doc.value("engine", "");
        read(f.path(), info.kind, info.n, &info.status);
      } catch (const std::exception&) {
        info.status = EntryStatus::corrupt;
      }
      out.push_back(info);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.file < b.file; });
    return out;
  }

  // Removes entries and leftover temporaries; returns the number of files removed.
  std::size_t purge() const {
    std::size_t removed = 0;
    std::error_code ec;
    if (!std::filesystem::is_directory(dir_, ec)) return 0;
    std::vector<std::filesystem::path> doomed;
    for (const auto& f : std::filesystem::directory_iterator(dir_, ec)) {
      const std::string name = f.path().filename().string();
      if (f.is_regular_file() && (f.path().extension() == ".json" || name.find(".json.tmp.") != std::string::npos))
        doomed.push_back(f.path());
    }
    for (const auto& p : doomed)
      if (std::filesystem::remove(p, ec)) ++removed;
    return removed;
  }

 private:
  static std::optional<Json> read(const std::filesystem::path& file, const std::string& kind, int n, EntryStatus* status) {
    std::error_code ec;
    if (!std::filesystem::exists(file, ec)) {
      *status = EntryStatus::missing;
      return std::nullopt;
    }
    try {
      std::ifstream in(file, std::ios::binary);
      Json doc = Json::parse(in);
      if (doc.at("engine").get<std::string>() != kEngineVersion) {
        *status = EntryStatus::stale;
        return std::nullopt;
      }
      if (doc.at("kind").get<std::string>() != kind || doc.at("n").get<int>() != n ||
          doc.at("checksum").get<std::string>() != hex64(fnv1a(doc.at("payload").dump()))) {
        *status = EntryStatus::corrupt;
        return std::nullopt;
      }
      *status = EntryStatus::ok;
      return doc.at("payload");
    } catch (const std::exception&) {
      *status = EntryStatus::corrupt;
      return std::nullopt;
    }
  }

  std::filesystem::path dir_;
};

inline constexpr const char* kKostkaKind = "kostka-macdonald";

// Routes kostka_macdonald(n) through the cache. A payload that parses but
// fails certification is discarded and recomputed.
inline void install_kostka_cache(std::shared_ptr<const DiskCache> cache) {
  KostkaStore store;
  store.load = [cache](int n) -> std::optional<KostkaMacdonaldMatrix> {
    auto payload = cache->load(kKostkaKind, n);
    if (!payload) return std::nullopt;
    try {
      auto km = kostka_from_json(*payload);
      if (km.n != n || !certify_kostka_macdonald(km).empty()) return std::nullopt;
      return km;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  store.save = [cache](const KostkaMacdonaldMatrix& km) { cache->store(kKostkaKind, km.n, to_json(km)); };
  set_kostka_store(std::move(store));
}

}  // namespace cherpoi
