#include "siegel/cache.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace siegel {

ExpansionCache::ExpansionCache(std::filesystem::path dir, std::string version)
    : dir_(std::move(dir)), version_(std::move(version)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path ExpansionCache::path_for(const std::string& name, std::int64_t bound) const {
  return dir_ / (name + "_N" + std::to_string(bound) + "_" + version_ + ".qexp");
}

std::optional<QExpansion> ExpansionCache::load(const std::string& name, std::int64_t bound) const {
  const auto path = path_for(name, bound);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  QExpansion f = parse_q_expansion(buf.str());
  if (f.trace_bound() != bound) {
    throw ParseError("cache file " + path.string() + " has bound " +
                         std::to_string(f.trace_bound()),
                     0);
  }
  return f;
}

void ExpansionCache::store(const std::string& name, const QExpansion& f) const {
  const auto path = path_for(name, f.trace_bound());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << serialize(f);
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace siegel
