#ifndef IHPAIR_CACHE_HPP
#define IHPAIR_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "ihpair/io.hpp"

namespace ihpair {

// File-backed result cache: one JSON file per entry, named by a stable hash
// of (engine version, canonical request).  Writes go through a temp file and
// an atomic rename so concurrent writers are safe; entries are immutable.
class ResultCache {
 public:
  // empty dir -> IHPAIR_CACHE_DIR environment variable -> ./.ihpair-cache
  explicit ResultCache(std::string dir = "");

  const std::filesystem::path& dir() const { return dir_; }
  std::string key_for(const PairingRequest& req) const;

  std::optional<RequestOutcome> lookup(const PairingRequest& req) const;
  void store(const RequestOutcome& out) const;

  struct Stats {
    size_t entries = 0;
    uintmax_t bytes = 0;
  };
  Stats stats() const;
  size_t clear() const;

 private:
  std::filesystem::path dir_;
};

}  // namespace ihpair

#endif
