#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "hyperoct/codes.hpp"
#include "hyperoct/enumerate.hpp"
#include "hyperoct/statistics.hpp"
#include "oracles.hpp"

using namespace hyperoct;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> values) {
  std::vector<BigInt> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

Errc error_code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected hyperoct::Error");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("stream covers B_2 without duplicates") {
  // |B_2| = 2^2 * 2! = 8, so the rank interval ends at 8.
  auto all = stream(2, 0, 8);
  CHECK(all.size() == 8);
  std::set<std::vector<int>> seen;
  for (const auto& w : all) seen.insert({w.window().begin(), w.window().end()});
  auto expected = oracle::all_signed_windows(2);
  CHECK(seen == std::set<std::vector<int>>(expected.begin(), expected.end()));
}

TEST_CASE("stream endpoints and errors") {
  for (int n = 1; n <= 6; ++n) {
    auto first = stream(n, 0, 1);
    REQUIRE(first.size() == 1);
    CHECK(first[0] == SignedPermutation::identity(n));
  }
  auto last = stream(3, 47, 48);
  REQUIRE(last.size() == 1);
  CHECK(last[0] == SignedPermutation::longest_element(3));
  CHECK(stream(3, 5, 5).empty());
  CHECK(error_code_of([] { stream(3, 0, 49); }) == Errc::RankOutOfRange);
  CHECK(error_code_of([] { stream(2, 0, 16); }) == Errc::RankOutOfRange);
  CHECK(error_code_of([] { stream(3, 10, 9); }) == Errc::RankOutOfRange);
}

TEST_CASE("stream agrees with unrank from any starting rank") {
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t order = group_order64(n);
    for (std::uint64_t lo : {std::uint64_t{0}, order / 3, order - 1}) {
      std::uint64_t r = lo;
      for (RankStream s(n, lo, order); !s.done(); s.advance(), ++r) {
        REQUIRE(s.rank() == r);
        REQUIRE(s.current() == unrank64(r, n));
      }
      CHECK(r == order);
    }
  }
}

TEST_CASE("histogram_brute") {
  CHECK(histogram_brute(3).coeffs == big({1, 3, 5, 7, 8, 8, 7, 5, 3, 1}));
  CHECK(histogram_brute(1).coeffs == big({1, 1}));
  CHECK(histogram_brute(5).coeffs == big({1,   5,   14,  30,  54,  86,  125, 169, 215, 259, 297, 325, 340,
                                          340, 325, 297, 259, 215, 169, 125, 86,  54,  30,  14,  5,   1}));
  for (int n = 1; n <= 5; ++n) {
    auto h = oracle::type_b_histogram(n);
    CHECK(histogram_brute(n).coeffs == std::vector<BigInt>(h.begin(), h.end()));
  }
  CHECK(histogram_brute(6) == row_product(Kind::TypeB, 6));
}

TEST_CASE("enumeration ceiling") {
  CHECK(error_code_of([] { histogram_brute(10); }) == Errc::CeilingExceeded);
  EnumerationOptions options;
  options.ceiling = 20;
  CHECK(error_code_of([&] { histogram_brute(11, options); }) == Errc::CeilingExceeded);
  options.ceiling = 3;
  CHECK(error_code_of([&] { total_brute(4, options); }) == Errc::CeilingExceeded);
  CHECK(error_code_of([&] { fmaj_histogram(4, options); }) == Errc::CeilingExceeded);
}

TEST_CASE("total_brute") {
  CHECK(total_brute(3) == 216);
  CHECK(total_brute(1) == 1);
  CHECK(total_brute(4) == 3072);
  for (int n = 1; n <= 6; ++n) {
    auto h = histogram_brute(n);
    BigInt moment = 0;
    for (std::size_t k = 0; k < h.coeffs.size(); ++k) moment += h.coeffs[k] * k;
    CHECK(total_brute(n) == moment);
    CHECK(total_brute(n) == total_inversions(Kind::TypeB, n, TotalMethod::ClosedForm));
  }
}

TEST_CASE("fmaj_histogram") {
  CHECK(fmaj_histogram(2).coeffs == big({1, 2, 2, 2, 1}));
  CHECK(fmaj_histogram(1).coeffs == big({1, 1}));
  CHECK(fmaj_histogram(4).coeffs == big({1, 4, 9, 16, 24, 32, 39, 44, 46, 44, 39, 32, 24, 16, 9, 4, 1}));
}

TEST_CASE("class histograms") {
  CHECK(class_histogram(2, 2) == big({1, 1, 0, 0, 0}));
  CHECK(class_histogram(2, -2) == big({0, 0, 0, 1, 1}));
  CHECK(error_code_of([] { class_histogram(2, 0); }) == Errc::BadClassIndex);
  CHECK(error_code_of([] { class_histogram(2, 3); }) == Errc::BadClassIndex);
  CHECK(error_code_of([] { class_histogram(2, -3); }) == Errc::BadClassIndex);
  for (int n = 2; n <= 5; ++n) {
    BigInt expected_size = group_order(n) / (2 * n);
    for (int j = -n; j <= n; ++j) {
      if (j == 0) continue;
      BigInt size = 0;
      for (const auto& c : class_histogram(n, j)) size += c;
      CHECK(size == expected_size);
    }
  }
}

TEST_CASE("partition soundness and determinism") {
  const int n = 5;
  const std::uint64_t order = group_order64(n);
  const std::size_t bins = n * n + 1;
  auto stat = [](std::span<const int> w) { return inv_b(w); };
  auto single = histogram_over_ranks(n, 0, order, bins, stat);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::uint64_t> cuts{0, order};
    for (int c = 0; c < 5; ++c) cuts.push_back(std::uniform_int_distribution<std::uint64_t>(0, order)(rng));
    std::sort(cuts.begin(), cuts.end());
    std::vector<BigInt> merged(bins);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      auto part = histogram_over_ranks(n, cuts[i], cuts[i + 1], bins, stat);
      for (std::size_t k = 0; k < bins; ++k) merged[k] += part[k];
    }
    CHECK(merged == single);
  }
  for (unsigned jobs : {1u, 2u, 3u, 7u}) {
    for (unsigned chunks : {1u, 8u, 100u}) {
      EnumerationOptions options;
      options.jobs = jobs;
      options.chunks_per_job = chunks;
      CHECK(histogram_over_ranks(n, 0, order, bins, stat, options) == single);
    }
  }
}

TEST_CASE("statistic outside the histogram is reported") {
  CHECK_THROWS_AS(histogram_over_ranks(2, 0, 16, 2, [](std::span<const int> w) { return inv_b(w); }),
                  std::logic_error);
}

TEST_CASE("progress hook") {
  EnumerationOptions options;
  options.jobs = 2;
  options.progress_stride = 1000;
  std::vector<std::uint64_t> seen;
  std::uint64_t reported_total = 0;
  options.progress = [&](std::uint64_t done, std::uint64_t total) {
    seen.push_back(done);
    reported_total = total;
  };
  histogram_brute(6, options);
  REQUIRE_FALSE(seen.empty());
  CHECK(reported_total == 46080);
  CHECK(seen.back() == 46080);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
}

TEST_CASE("Cayley-graph length oracle") {
  CHECK(cayley_length(SignedPermutation::identity(3)) == 0);
  CHECK(cayley_length(generator_t(3, 1)) == 1);
  CHECK(cayley_length(SignedPermutation::longest_element(2)) == 4);
  CHECK(error_code_of([] { cayley_length(SignedPermutation::identity(5)); }) == Errc::RankTooLargeForOracle);
  for (int n = 1; n <= 3; ++n) {
    auto distances = cayley_distances(n);
    for (std::uint64_t r = 0; r < distances.size(); ++r) CHECK(distances[r] == inv_b(unrank64(r, n)));
  }
}

TEST_CASE("presentation relations") {
  for (int n = 2; n <= 8; ++n) {
    auto report = verify_relations(n);
    CHECK(report.passed());
    CHECK(report.params.at("n") == std::to_string(n));
  }
  CHECK_THROWS_AS(verify_relations(1), Error);
  CHECK_THROWS_AS(verify_relations(9), Error);
}
