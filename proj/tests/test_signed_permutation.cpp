#include <doctest.h>

#include <vector>

#include "hyperoct/signed_permutation.hpp"
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

}  // namespace

TEST_CASE("from_window accepts valid windows") {
  auto w = from_window(8, {7, 3, -2, 8, -6, -4, -1, 5});
  CHECK(w.n() == 8);
  CHECK(w(3) == -2);
  CHECK(w(-3) == 2);
  CHECK(from_window(3, {1, 2, 3}) == SignedPermutation::identity(3));
}

TEST_CASE("from_window rejects malformed windows") {
  CHECK(error_code_of([] { from_window(3, {1, 1, -3}); }) == Errc::NotAPermutation);
  CHECK(error_code_of([] { from_window(3, {1, 0, 3}); }) == Errc::ZeroEntry);
  CHECK(error_code_of([] { from_window(3, {1, 2}); }) == Errc::LengthMismatch);
  CHECK(error_code_of([] { from_window(2, {1, 4}); }) == Errc::NotAPermutation);
}

TEST_CASE("compose and inverse") {
  auto w = from_window(8, {7, 3, -2, 8, -6, -4, -1, 5});
  auto e = SignedPermutation::identity(8);
  CHECK(compose(e, w) == w);
  CHECK(compose(w, e) == w);
  CHECK(compose(w, inverse(w)) == e);
  CHECK(compose(inverse(w), w) == e);

  CHECK(inverse(SignedPermutation::identity(4)) == SignedPermutation::identity(4));
  CHECK(inverse(from_window(1, {-1})) == from_window(1, {-1}));
  CHECK(inverse(from_window(3, {2, -3, 1})) == from_window(3, {3, 1, -2}));

  // B_2: s_1 t_1 = [-2, 1] and t_1 s_1 = [2, -1] by evaluating u(v(i)).
  auto s1 = generator_s(2, 1), t1 = generator_t(2, 1);
  CHECK(compose(s1, t1) == from_window(2, {-2, 1}));
  CHECK(compose(t1, s1) == from_window(2, {2, -1}));
  CHECK(compose(compose(s1, t1), s1) == generator_t(2, 2));

  CHECK(error_code_of([&] { compose(w, e.identity(3)); }) == Errc::RankMismatch);
}

TEST_CASE("compose is associative and inverse is an anti-automorphism on B_3") {
  auto all = oracle::all_signed_windows(3);
  std::vector<SignedPermutation> group;
  for (const auto& w : all) group.push_back(from_window(3, w));
  for (std::size_t a = 0; a < group.size(); a += 5) {
    for (std::size_t b = 0; b < group.size(); b += 3) {
      for (std::size_t c = 0; c < group.size(); c += 7) {
        CHECK(compose(compose(group[a], group[b]), group[c]) == compose(group[a], compose(group[b], group[c])));
      }
      CHECK(inverse(compose(group[a], group[b])) == compose(inverse(group[b]), inverse(group[a])));
    }
  }
}

TEST_CASE("decompose and recompose") {
  auto w = from_window(8, {7, 3, -2, 8, -6, -4, -1, 5});
  auto d = decompose(w);
  CHECK(d.beta == std::vector<int>{7, 3, 2, 8, 6, 4, 1, 5});
  CHECK(d.signs == std::vector<std::uint8_t>{0, 0, 1, 0, 1, 1, 1, 0});
  CHECK(recompose(d) == w);

  auto id = decompose(SignedPermutation::identity(4));
  CHECK(id.beta == std::vector<int>{1, 2, 3, 4});
  CHECK(id.signs == std::vector<std::uint8_t>{0, 0, 0, 0});

  auto longest = decompose(SignedPermutation::longest_element(3));
  CHECK(longest.beta == std::vector<int>{1, 2, 3});
  CHECK(longest.signs == std::vector<std::uint8_t>{1, 1, 1});

  for (const auto& window : oracle::all_signed_windows(4)) {
    auto v = from_window(4, window);
    REQUIRE(recompose(decompose(v)) == v);
  }
}

TEST_CASE("window text format") {
  auto w = parse_window("7 3 -2 8 -6 -4 -1 5");
  CHECK(w == from_window(8, {7, 3, -2, 8, -6, -4, -1, 5}));
  CHECK(format_window(w) == "7 3 -2 8 -6 -4 -1 5");
  CHECK(parse_window("1") == SignedPermutation::identity(1));

  CHECK(error_code_of([] { parse_window("0 1"); }) == Errc::ZeroEntry);
  CHECK(error_code_of([] { parse_window("-0 1"); }) == Errc::ParseError);
  CHECK(error_code_of([] { parse_window("1  2"); }) == Errc::ParseError);
  CHECK(error_code_of([] { parse_window("1 2 "); }) == Errc::ParseError);
  CHECK(error_code_of([] { parse_window("+1 2"); }) == Errc::ParseError);
  CHECK(error_code_of([] { parse_window("1 x"); }) == Errc::ParseError);
  CHECK(error_code_of([] { parse_window(""); }) == Errc::ParseError);
  CHECK(error_code_of([] { parse_window("1 3"); }) == Errc::NotAPermutation);
}
