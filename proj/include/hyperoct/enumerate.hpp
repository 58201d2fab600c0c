#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hyperoct/bigint.hpp"
#include "hyperoct/mahonian.hpp"
#include "hyperoct/report.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

inline constexpr int kDefaultCeiling = 9;
inline constexpr int kMaxCeiling = 10;

struct EnumerationOptions {
  unsigned jobs = 1;
  int ceiling = kDefaultCeiling;
  // Rank space is cut into jobs * chunks_per_job contiguous intervals.
  unsigned chunks_per_job = 8;
  // Called with (ranks_done, total) roughly every progress_stride ranks.
  std::function<void(std::uint64_t, std::uint64_t)> progress;
  std::uint64_t progress_stride = std::uint64_t{1} << 24;
};

/// Walks unrank(r, n) for r in [lo, hi) in rank order. Each step bumps the
/// mixed-radix digits like an odometer and re-decodes only the window
/// positions governed by the digits that changed.
class RankStream {
 public:
  RankStream(int n, std::uint64_t lo, std::uint64_t hi);

  bool done() const noexcept { return rank_ >= hi_; }
  std::uint64_t rank() const noexcept { return rank_; }
  std::span<const int> window() const noexcept { return window_; }
  SignedPermutation current() const;
  void advance();

 private:
  void decode_prefix(int count);

  int n_;
  std::uint64_t rank_;
  std::uint64_t hi_;
  // digit_[p-1] governs window position p and has radix 2p.
  std::vector<int> digit_;
  std::vector<int> window_;
  std::vector<int> scratch_;
};

std::vector<SignedPermutation> stream(int n, std::uint64_t lo, std::uint64_t hi);

using WindowStatistic = std::function<int(std::span<const int>)>;

/// Histogram of `stat` over ranks [lo, hi), with `bins` cells. Workers keep
/// private 64-bit counters; the merge is exact and order independent.
std::vector<BigInt> histogram_over_ranks(int n, std::uint64_t lo, std::uint64_t hi, std::size_t bins,
                                         const WindowStatistic& stat, const EnumerationOptions& options = {});

/// Distribution of inv_b over all of B_n. Throws CeilingExceeded.
TriangleRow histogram_brute(int n, const EnumerationOptions& options = {});
BigInt total_brute(int n, const EnumerationOptions& options = {});
TriangleRow fmaj_histogram(int n, const EnumerationOptions& options = {});

/// inv_b histogram over C_j (length n^2 + 1). Throws BadClassIndex.
std::vector<BigInt> class_histogram(int n, int j, const EnumerationOptions& options = {});

/// Word length with respect to {t_1, s_1, ..., s_{n-1}} by breadth-first
/// search; n <= 4 only (RankTooLargeForOracle).
int cayley_length(const SignedPermutation& w);
/// Distances of every element, indexed by rank64.
std::vector<int> cayley_distances(int n);

/// Checks the Coxeter presentation of B_n by window arithmetic, 2 <= n <= 8.
VerificationReport verify_relations(int n);

}  // namespace hyperoct
