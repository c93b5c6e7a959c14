#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace siegel {

// Half-integral symmetric matrix [[m, r/2], [r/2, n]] written (m, n, r).
struct TIndex {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t r = 0;

  std::int64_t trace() const { return m + n; }
  // 4 det(T) = 4mn - r^2
  std::int64_t fourdet() const { return 4 * m * n - r * r; }
  // gcd(m, n, r); 0 for the zero matrix
  std::int64_t content() const;
  int rank() const;
  // semi-positive definite with m, n >= 0, i.e. T in L_2
  bool is_semipositive() const { return m >= 0 && n >= 0 && fourdet() >= 0; }

  friend TIndex operator+(TIndex a, TIndex b) { return {a.m + b.m, a.n + b.n, a.r + b.r}; }
  friend TIndex operator-(TIndex a, TIndex b) { return {a.m - b.m, a.n - b.n, a.r - b.r}; }
  friend bool operator==(const TIndex&, const TIndex&) = default;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const TIndex& t) { return os << t.to_string(); }
};

// Lexicographic order on (trace, m, r). Equal iff component-wise equal.
std::strong_ordering order_cmp(const TIndex& a, const TIndex& b);

inline bool order_less(const TIndex& a, const TIndex& b) { return order_cmp(a, b) < 0; }

// Largest r >= 0 with r^2 <= 4mn.
std::int64_t max_r(std::int64_t m, std::int64_t n);

// Every T in L_2 with trace(T) <= bound, laid out in increasing order so
// that a position is also an order rank. Shared between expansions.
class IndexLayout {
 public:
  static std::shared_ptr<const IndexLayout> get(std::int64_t bound);

  std::int64_t bound() const { return bound_; }
  std::size_t size() const { return indices_.size(); }
  const std::vector<TIndex>& indices() const { return indices_; }
  const TIndex& at(std::size_t pos) const { return indices_[pos]; }

  bool contains(const TIndex& t) const { return t.is_semipositive() && t.trace() <= bound_; }
  // Requires contains(t).
  std::size_t position(const TIndex& t) const {
    return static_cast<std::size_t>(row_offset_[t.trace()][t.m] + t.r + max_r(t.m, t.n));
  }
  // Half-open position range of the indices with the given trace.
  std::size_t slice_begin(std::int64_t trace) const { return row_offset_[trace][0]; }
  std::size_t slice_end(std::int64_t trace) const {
    return trace == bound_ ? indices_.size() : row_offset_[trace + 1][0];
  }

 private:
  explicit IndexLayout(std::int64_t bound);

  std::int64_t bound_;
  std::vector<TIndex> indices_;
  std::vector<std::vector<std::int64_t>> row_offset_;  // [trace][m]
};

}  // namespace siegel
