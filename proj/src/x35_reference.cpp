// Published Fourier coefficients of X35 for trace(T) <= 9. Every index not
// listed here (in L_2, trace <= 9) carries coefficient 0.

#include <algorithm>

#include "siegel/igusa.hpp"

namespace siegel::igusa {

namespace {

struct Row {
  std::int64_t m, n;
  std::vector<std::pair<std::int64_t, std::int64_t>> terms;  // (r, a((m,n,r)))
};

const std::vector<Row>& rows() {
  static const std::vector<Row> kRows = {
      {2, 3, {{-1, 1}, {1, -1}}},
      {3, 2, {{-1, -1}, {1, 1}}},
      {2, 4, {{-3, -1}, {-1, -69}, {1, 69}, {3, 1}}},
      {4, 2, {{-3, 1}, {-1, 69}, {1, -69}, {3, -1}}},
      {2, 5, {{-3, 69}, {-1, 2277}, {1, -2277}, {3, -69}}},
      {3, 4, {{-5, 1}, {-2, -32384}, {-1, -129421}, {1, 129421}, {2, 32384}, {5, -1}}},
      {4, 3, {{-5, -1}, {-2, 32384}, {-1, 129421}, {1, -129421}, {2, -32384}, {5, 1}}},
      {5, 2, {{-3, -69}, {-1, -2277}, {1, 2277}, {3, 69}}},
      {2, 6, {{-5, 1}, {-3, -2277}, {-1, -47702}, {1, 47702}, {3, 2277}, {5, -1}}},
      {3, 5,
       {{-4, 32384}, {-2, -2184448}, {-1, -3203072}, {1, 3203072}, {2, 2184448}, {4, -32384}}},
      {5, 3,
       {{-4, -32384}, {-2, 2184448}, {-1, 3203072}, {1, -3203072}, {2, -2184448}, {4, 32384}}},
      {6, 2, {{-5, -1}, {-3, 2277}, {-1, 47702}, {1, -47702}, {3, -2277}, {5, 1}}},
      {2, 7, {{-5, -69}, {-3, 47702}, {-1, 709665}, {1, -709665}, {3, -47702}, {5, 69}}},
      {3, 6,
       {{-7, -1},
        {-5, 129421},
        {-4, 2184448},
        {-2, 41321984},
        {-1, 105235626},
        {1, -105235626},
        {2, -41321984},
        {4, -2184448},
        {5, -129421},
        {7, 1}}},
      {4, 5,
       {{-7, -69},
        {-6, -32384},
        {-3, 107121810},
        {-2, -31380096},
        {-1, 759797709},
        {1, -759797709},
        {2, 31380096},
        {3, -107121810},
        {6, 32384},
        {7, 69}}},
      {5, 4,
       {{-7, 69},
        {-6, 32384},
        {-3, -107121810},
        {-2, 31380096},
        {-1, -759797709},
        {1, 759797709},
        {2, -31380096},
        {3, 107121810},
        {6, -32384},
        {7, -69}}},
      {6, 3,
       {{-7, 1},
        {-5, -129421},
        {-4, -2184448},
        {-2, -41321984},
        {-1, -105235626},
        {1, 105235626},
        {2, 41321984},
        {4, 2184448},
        {5, 129421},
        {7, -1}}},
      {7, 2, {{-5, 69}, {-3, -47702}, {-1, -709665}, {1, 709665}, {3, 47702}, {5, -69}}},
  };
  return kRows;
}

}  // namespace

const std::vector<std::pair<TIndex, std::int64_t>>& x35_reference_coefficients() {
  static const std::vector<std::pair<TIndex, std::int64_t>> kTable = [] {
    std::vector<std::pair<TIndex, std::int64_t>> out;
    for (const Row& row : rows()) {
      for (const auto& [r, c] : row.terms) out.push_back({TIndex{row.m, row.n, r}, c});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return order_less(a.first, b.first); });
    return out;
  }();
  return kTable;
}

}  // namespace siegel::igusa
