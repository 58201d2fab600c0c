#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperoct/error.hpp"

namespace hyperoct {

/// An element of the hyperoctahedral group B_n in window notation:
/// window()[i-1] = w(i) for i = 1..n. Values on negatives are derived from
/// w(-i) = -w(i) and never stored.
class SignedPermutation {
 public:
  static SignedPermutation identity(int n);
  /// The unique element of maximal length, i -> -i.
  static SignedPermutation longest_element(int n);

  int n() const noexcept { return static_cast<int>(window_.size()); }
  std::span<const int> window() const noexcept { return window_; }

  /// w(i) for i in {-n..-1, 1..n}.
  int operator()(int i) const { return i > 0 ? window_[i - 1] : -window_[-i - 1]; }

  bool operator==(const SignedPermutation&) const = default;
  auto operator<=>(const SignedPermutation&) const = default;

 private:
  friend SignedPermutation from_window(int n, std::span<const int> entries);
  friend SignedPermutation from_trusted_window(std::vector<int> entries);
  explicit SignedPermutation(std::vector<int> window) : window_(std::move(window)) {}

  std::vector<int> window_;
};

/// Validating constructor. Throws Error with LengthMismatch, ZeroEntry or
/// NotAPermutation.
SignedPermutation from_window(int n, std::span<const int> entries);
inline SignedPermutation from_window(int n, std::initializer_list<int> entries) {
  return from_window(n, std::span<const int>(entries.begin(), entries.size()));
}

// Skips validation; only for windows produced by library code that already
// guarantees the invariants (decoders, odometers).
SignedPermutation from_trusted_window(std::vector<int> entries);

/// (u o v)(i) = u(v(i)).
SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v);
SignedPermutation inverse(const SignedPermutation& w);

/// Coxeter generators of B_n: t_i negates i, s_i swaps i and i+1.
SignedPermutation generator_t(int n, int i);
SignedPermutation generator_s(int n, int i);

/// w = beta * prod t_k^{r_k}: beta[k] = |w(k)|, signs[k] = [w(k) < 0].
struct Decomposition {
  std::vector<int> beta;
  std::vector<std::uint8_t> signs;

  bool operator==(const Decomposition&) const = default;
};

Decomposition decompose(const SignedPermutation& w);
SignedPermutation recompose(const Decomposition& d);

/// Window text: base-10 entries separated by single spaces, e.g. "7 3 -2 8".
SignedPermutation parse_window(std::string_view text);
std::string format_window(std::span<const int> window);
inline std::string format_window(const SignedPermutation& w) { return format_window(w.window()); }

}  // namespace hyperoct
