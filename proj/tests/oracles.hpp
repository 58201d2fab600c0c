#pragma once

// Brute-force reference computations used only by the tests. None of these
// go through the library's inversion tables, ranks or triangle code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <vector>

namespace oracle {

/// Every window of B_n: all permutations of [n] times all sign patterns.
inline std::vector<std::vector<int>> all_signed_windows(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> beta(n);
  std::iota(beta.begin(), beta.end(), 1);
  do {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> w(beta);
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) w[i] = -w[i];
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(beta.begin(), beta.end()));
  return out;
}

/// Coxeter length of a signed permutation from pair counts:
/// inv(w) + #{i<j : w_i + w_j < 0} + #{i : w_i < 0}.
inline int pair_length(std::span<const int> w) {
  int n = static_cast<int>(w.size());
  int length = 0;
  for (int i = 0; i < n; ++i) {
    length += w[i] < 0;
    for (int j = i + 1; j < n; ++j) length += (w[i] > w[j]) + (w[i] + w[j] < 0);
  }
  return length;
}

/// Histogram of inversions over S_n by enumeration.
inline std::vector<std::uint64_t> type_a_histogram(int n) {
  std::vector<std::uint64_t> h(n * (n - 1) / 2 + 1, 0);
  std::vector<int> beta(n);
  std::iota(beta.begin(), beta.end(), 1);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inv += beta[i] > beta[j];
    ++h[inv];
  } while (std::next_permutation(beta.begin(), beta.end()));
  return h;
}

/// Histogram of pair_length over B_n.
inline std::vector<std::uint64_t> type_b_histogram(int n) {
  std::vector<std::uint64_t> h(n * n + 1, 0);
  for (const auto& w : all_signed_windows(n)) ++h[pair_length(w)];
  return h;
}

/// Direct count of placements of k balls into boxes with the given capacities.
inline std::uint64_t count_placements(const std::vector<int>& capacities, int k, std::size_t box = 0) {
  if (box == capacities.size()) return k == 0 ? 1 : 0;
  std::uint64_t total = 0;
  for (int c = 0; c <= std::min(capacities[box], k); ++c) total += count_placements(capacities, k - c, box + 1);
  return total;
}

}  // namespace oracle
