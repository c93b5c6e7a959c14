#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "siegel/qexp.hpp"

namespace siegel {

// Directory of serialized expansions, one file per (name, bound, version):
//   <dir>/<name>_N<bound>_<version>.qexp
class ExpansionCache {
 public:
  ExpansionCache(std::filesystem::path dir, std::string version);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const std::string& name, std::int64_t bound) const;

  // nullopt when absent. A present but malformed file throws ParseError.
  std::optional<QExpansion> load(const std::string& name, std::int64_t bound) const;
  // Writes atomically (temp file + rename).
  void store(const std::string& name, const QExpansion& f) const;

 private:
  std::filesystem::path dir_;
  std::string version_;
};

}  // namespace siegel
