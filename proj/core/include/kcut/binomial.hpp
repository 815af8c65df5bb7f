#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace kcut {

// Exact binomial coefficients. Out-of-range indices (negative, or b > a)
// count zero subsets and return 0 rather than throwing; that convention is
// relied on throughout the closed-form identities. The row cap of 66 keeps
// every entry inside int64 (C(66,33) < 2^63).

inline constexpr int kBinomialMaxN = 66;

namespace detail {
inline const std::array<std::array<long long, kBinomialMaxN + 1>, kBinomialMaxN + 1>&
binomial_table() {
  static const auto table = [] {
    std::array<std::array<long long, kBinomialMaxN + 1>, kBinomialMaxN + 1> t{};
    for (int a = 0; a <= kBinomialMaxN; ++a) {
      t[a][0] = 1;
      for (int b = 1; b <= a; ++b)
        t[a][b] = t[a - 1][b - 1] + (b <= a - 1 ? t[a - 1][b] : 0);
    }
    return t;
  }();
  return table;
}
}  // namespace detail

inline long long binom(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (a > kBinomialMaxN) throw std::overflow_error("binom: n beyond exact table");
  return detail::binomial_table()[a][b];
}

}  // namespace kcut
