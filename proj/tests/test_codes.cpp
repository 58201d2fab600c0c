#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "hyperoct/codes.hpp"
#include "oracles.hpp"

using namespace hyperoct;

namespace {

Errc error_code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected hyperoct::Error");
  return Errc::ParseError;
}

InversionTable random_table(int n, std::mt19937_64& rng) {
  InversionTable t;
  for (int i = 1; i <= n; ++i) t.digits.push_back(std::uniform_int_distribution<int>(0, max_digit(n, i))(rng));
  return t;
}

}  // namespace

TEST_CASE("radix bounds") {
  RadixBounds b(4);
  CHECK(b.bounds == std::vector<int>{7, 5, 3, 1});
  CHECK(b.cardinality() == 384);
  for (int n = 1; n <= 25; ++n) CHECK(RadixBounds(n).cardinality() == group_order(n));
  CHECK(group_order64(16) == static_cast<std::uint64_t>(group_order(16)));
  CHECK(error_code_of([] { group_order64(17); }) == Errc::RangeViolation);
}

TEST_CASE("encode and decode the worked example") {
  auto w = from_window(8, {7, 3, -2, 8, -6, -4, -1, 5});
  CHECK(format_table(encode(w)) == "(3:7:8:7:0:3:1:0)");
  CHECK(decode(parse_table("(3:7:8:7:0:3:1:0)")) == w);
  CHECK(encode(SignedPermutation::longest_element(2)).digits == std::vector<int>{3, 1});
  CHECK(decode(InversionTable{{0, 0, 0, 0}}) == SignedPermutation::identity(4));
  CHECK(decode(InversionTable{{5, 3, 1}}) == SignedPermutation::longest_element(3));
}

TEST_CASE("decode rejects digits outside their radix") {
  CHECK(error_code_of([] { decode(InversionTable{{6, 0, 0}}); }) == Errc::DigitOutOfRange);
  CHECK(error_code_of([] { decode(InversionTable{{0, 0, 2}}); }) == Errc::DigitOutOfRange);
  CHECK(error_code_of([] { decode(InversionTable{{-1}}); }) == Errc::DigitOutOfRange);
  CHECK(error_code_of([] { decode(InversionTable{}); }) == Errc::LengthMismatch);
}

TEST_CASE("encode/decode are mutually inverse on all of B_n, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::set<InversionTable> tables;
    for (const auto& window : oracle::all_signed_windows(n)) {
      auto w = from_window(n, window);
      auto t = encode(w);
      REQUIRE(decode(t) == w);
      tables.insert(t);
    }
    CHECK(tables.size() == static_cast<std::size_t>(group_order(n)));
  }
}

TEST_CASE("random tables round-trip through decode then encode") {
  std::mt19937_64 rng(20240501);
  for (int n = 1; n <= 64; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      auto t = random_table(n, rng);
      REQUIRE(encode(decode(t)) == t);
    }
  }
}

TEST_CASE("rank and unrank") {
  CHECK(rank(SignedPermutation::identity(5)) == 0);
  CHECK(rank_from_table(InversionTable{{1, 0}}) == 2);
  for (int n = 1; n <= 24; ++n) {
    CHECK(rank(SignedPermutation::longest_element(n)) == group_order(n) - 1);
    CHECK(unrank(group_order(n) - 1, n) == SignedPermutation::longest_element(n));
    CHECK(unrank(0, n) == SignedPermutation::identity(n));
    CHECK(error_code_of([n] { unrank(group_order(n), n); }) == Errc::RankOutOfRange);
  }
  CHECK(error_code_of([] { unrank(-1, 3); }) == Errc::RankOutOfRange);
  CHECK(error_code_of([] { unrank64(48, 3); }) == Errc::RankOutOfRange);
  CHECK(error_code_of([] { rank64(SignedPermutation::identity(17)); }) == Errc::RangeViolation);

  for (std::uint64_t r = 0; r < 48; ++r) {
    auto w = unrank64(r, 3);
    CHECK(rank64(w) == r);
    CHECK(rank(w) == r);
    CHECK(unrank(BigInt(r), 3) == w);
  }
}

TEST_CASE("rank is injective with image [0, 2^n n!) for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::uint64_t> image;
    for (const auto& window : oracle::all_signed_windows(n)) image.insert(rank64(from_window(n, window)));
    CHECK(image.size() == group_order64(n));
    CHECK(*image.rbegin() == group_order64(n) - 1);
  }
}

TEST_CASE("rank is strictly monotone in the lexicographic order of tables") {
  std::vector<InversionTable> tables;
  for (const auto& window : oracle::all_signed_windows(4)) tables.push_back(encode(from_window(4, window)));
  std::sort(tables.begin(), tables.end());
  for (std::size_t i = 0; i < tables.size(); ++i) REQUIRE(rank_from_table(tables[i]) == i);
}

TEST_CASE("big ranks round-trip") {
  std::mt19937_64 rng(7);
  for (int n : {17, 20, 30, 64}) {
    for (int trial = 0; trial < 50; ++trial) {
      auto w = decode(random_table(n, rng));
      REQUIRE(unrank(rank(w), n) == w);
    }
  }
}
