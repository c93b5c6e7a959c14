#include "siegel/tindex.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace siegel {

std::int64_t TIndex::content() const {
  return std::gcd(std::gcd(m, n), r < 0 ? -r : r);
}

int TIndex::rank() const {
  if (m == 0 && n == 0 && r == 0) return 0;
  return fourdet() == 0 ? 1 : 2;
}

std::string TIndex::to_string() const {
  return "(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(r) + ")";
}

std::strong_ordering order_cmp(const TIndex& a, const TIndex& b) {
  if (auto c = a.trace() <=> b.trace(); c != 0) return c;
  if (auto c = a.m <=> b.m; c != 0) return c;
  return a.r <=> b.r;
}

std::int64_t max_r(std::int64_t m, std::int64_t n) {
  const std::int64_t v = 4 * m * n;
  if (v <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

IndexLayout::IndexLayout(std::int64_t bound) : bound_(bound) {
  if (bound < 0) throw std::invalid_argument("negative trace bound");
  row_offset_.resize(static_cast<std::size_t>(bound + 1));
  for (std::int64_t t = 0; t <= bound; ++t) {
    auto& row = row_offset_[static_cast<std::size_t>(t)];
    row.resize(static_cast<std::size_t>(t + 1));
    for (std::int64_t m = 0; m <= t; ++m) {
      row[static_cast<std::size_t>(m)] = static_cast<std::int64_t>(indices_.size());
      const std::int64_t n = t - m;
      const std::int64_t rr = max_r(m, n);
      for (std::int64_t r = -rr; r <= rr; ++r) indices_.push_back({m, n, r});
    }
  }
}

std::shared_ptr<const IndexLayout> IndexLayout::get(std::int64_t bound) {
  static std::mutex mu;
  static std::map<std::int64_t, std::shared_ptr<const IndexLayout>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[bound];
  if (!slot) slot = std::shared_ptr<const IndexLayout>(new IndexLayout(bound));
  return slot;
}

}  // namespace siegel
