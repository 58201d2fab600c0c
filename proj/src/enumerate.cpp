#include "hyperoct/enumerate.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <queue>
#include <thread>

#include "hyperoct/codes.hpp"
#include "hyperoct/statistics.hpp"

namespace hyperoct {

RankStream::RankStream(int n, std::uint64_t lo, std::uint64_t hi) : n_(n), rank_(lo), hi_(hi) {
  std::uint64_t order = group_order64(n);
  if (lo > hi || hi > order) {
    throw Error(Errc::RankOutOfRange, "rank interval [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                          ") not inside [0, " + std::to_string(order) + "]");
  }
  digit_.assign(n, 0);
  window_.resize(n);
  scratch_.reserve(n);
  for (int p = 1; p <= n; ++p) window_[p - 1] = p;
  if (lo == hi) return;
  std::uint64_t rest = lo;
  for (int p = 1; p <= n; ++p) {
    digit_[p - 1] = static_cast<int>(rest % (2 * static_cast<std::uint64_t>(p)));
    rest /= 2 * static_cast<std::uint64_t>(p);
  }
  decode_prefix(n);
}

// Positions 1..count hold the same set of absolute values before and after
// the digits below `count` change, so that set is recovered from the window.
void RankStream::decode_prefix(int count) {
  scratch_.clear();
  for (int p = 0; p < count; ++p) {
    int a = std::abs(window_[p]);
    auto it = scratch_.begin();
    while (it != scratch_.end() && *it < a) ++it;
    scratch_.insert(it, a);
  }
  for (int p = count; p >= 1; --p) {
    int d = digit_[p - 1];
    int index = d < p ? p - 1 - d : d - p;
    int value = scratch_[index];
    scratch_.erase(scratch_.begin() + index);
    window_[p - 1] = d < p ? value : -value;
  }
}

void RankStream::advance() {
  if (done()) return;
  ++rank_;
  if (done()) return;
  int p = 0;
  while (++digit_[p] == 2 * (p + 1)) {
    digit_[p] = 0;
    ++p;
  }
  decode_prefix(p + 1);
}

SignedPermutation RankStream::current() const { return from_trusted_window(window_); }

std::vector<SignedPermutation> stream(int n, std::uint64_t lo, std::uint64_t hi) {
  std::vector<SignedPermutation> out;
  for (RankStream s(n, lo, hi); !s.done(); s.advance()) out.push_back(s.current());
  return out;
}

namespace {

void check_ceiling(int n, const EnumerationOptions& options) {
  if (n < 1) throw Error(Errc::RangeViolation, "rank must be positive");
  int ceiling = std::min(options.ceiling, kMaxCeiling);
  if (n > ceiling) {
    throw Error(Errc::CeilingExceeded,
                "n = " + std::to_string(n) + " exceeds the enumeration ceiling " + std::to_string(ceiling));
  }
}

// Splits [lo, hi) into contiguous chunks handed out from a shared counter.
// Each worker folds its chunks into a private accumulator; accumulators are
// returned in worker order for an exact merge by the caller.
template <typename Acc, typename Body>
std::vector<Acc> run_partitioned(int n, std::uint64_t lo, std::uint64_t hi, const EnumerationOptions& options,
                                 const Acc& init, Body body) {
  // Validates the interval before any thread starts.
  RankStream probe(n, lo, lo);
  (void)probe;
  unsigned jobs = std::max(1u, options.jobs);
  std::uint64_t length = hi - lo;
  std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(
                                                        length, std::uint64_t{jobs} * std::max(1u, options.chunks_per_job)));
  auto boundary = [&](std::uint64_t c) {
    return lo + static_cast<std::uint64_t>((static_cast<unsigned __int128>(length) * c) / chunks);
  };

  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> done{0};
  std::mutex progress_mutex;
  std::uint64_t last_reported = 0;
  std::vector<Acc> results(jobs, init);
  std::vector<std::exception_ptr> errors(jobs);

  auto worker = [&](unsigned id) {
    try {
      Acc& acc = results[id];
      for (std::uint64_t c; (c = next_chunk.fetch_add(1)) < chunks;) {
        std::uint64_t a = boundary(c), b = boundary(c + 1);
        for (RankStream s(n, a, b); !s.done(); s.advance()) body(acc, s.window());
        std::uint64_t now = done.fetch_add(b - a) + (b - a);
        if (options.progress) {
          std::lock_guard lock(progress_mutex);
          if (now - last_reported >= options.progress_stride || (now == length && last_reported > 0)) {
            last_reported = now;
            options.progress(now, length);
          }
        }
      }
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace

std::vector<BigInt> histogram_over_ranks(int n, std::uint64_t lo, std::uint64_t hi, std::size_t bins,
                                         const WindowStatistic& stat, const EnumerationOptions& options) {
  auto partials = run_partitioned(n, lo, hi, options, std::vector<std::uint64_t>(bins, 0),
                                  [&](std::vector<std::uint64_t>& cells, std::span<const int> window) {
                                    int k = stat(window);
                                    if (k < 0 || static_cast<std::size_t>(k) >= bins) {
                                      throw std::logic_error("statistic value " + std::to_string(k) +
                                                             " outside histogram of " + std::to_string(bins) +
                                                             " bins at " + format_window(window));
                                    }
                                    ++cells[k];
                                  });
  std::vector<BigInt> merged(bins);
  for (const auto& cells : partials)
    for (std::size_t k = 0; k < bins; ++k) merged[k] += cells[k];
  return merged;
}

TriangleRow histogram_brute(int n, const EnumerationOptions& options) {
  check_ceiling(n, options);
  auto bins = static_cast<std::size_t>(row_degree(Kind::TypeB, n)) + 1;
  auto coeffs = histogram_over_ranks(n, 0, group_order64(n), bins,
                                     [](std::span<const int> w) { return inv_b(w); }, options);
  return {Kind::TypeB, n, std::move(coeffs)};
}

BigInt total_brute(int n, const EnumerationOptions& options) {
  check_ceiling(n, options);
  auto partials = run_partitioned(n, 0, group_order64(n), options, std::uint64_t{0},
                                  [](std::uint64_t& sum, std::span<const int> w) { sum += inv_b(w); });
  BigInt total = 0;
  for (auto s : partials) total += s;
  return total;
}

TriangleRow fmaj_histogram(int n, const EnumerationOptions& options) {
  check_ceiling(n, options);
  auto bins = static_cast<std::size_t>(row_degree(Kind::TypeB, n)) + 1;
  auto coeffs = histogram_over_ranks(n, 0, group_order64(n), bins,
                                     [](std::span<const int> w) { return fmaj(w); }, options);
  return {Kind::TypeB, n, std::move(coeffs)};
}

std::vector<BigInt> class_histogram(int n, int j, const EnumerationOptions& options) {
  check_ceiling(n, options);
  if (j == 0 || std::abs(j) > n) {
    throw Error(Errc::BadClassIndex, "class index " + std::to_string(j) + " not in +-[1, " + std::to_string(n) + "]");
  }
  // The leading table digit alone fixes w(n), so C_j is one contiguous block
  // of rank space.
  std::uint64_t block = group_order64(n) / (2 * static_cast<std::uint64_t>(n));
  std::uint64_t top = j > 0 ? n - j : n + (-j) - 1;
  auto bins = static_cast<std::size_t>(row_degree(Kind::TypeB, n)) + 1;
  return histogram_over_ranks(n, top * block, (top + 1) * block, bins,
                              [n, j](std::span<const int> w) {
                                if (w[n - 1] != j) {
                                  throw std::logic_error("rank block for C_" + std::to_string(j) + " contains " +
                                                         format_window(w));
                                }
                                return inv_b(w);
                              },
                              options);
}

namespace {

std::map<SignedPermutation, int> cayley_bfs(int n) {
  if (n < 1 || n > 4) throw Error(Errc::RankTooLargeForOracle, "Cayley-graph oracle is limited to n <= 4");
  std::vector<SignedPermutation> generators{generator_t(n, 1)};
  for (int i = 1; i < n; ++i) generators.push_back(generator_s(n, i));

  std::map<SignedPermutation, int> distance;
  std::queue<SignedPermutation> frontier;
  auto e = SignedPermutation::identity(n);
  distance.emplace(e, 0);
  frontier.push(e);
  while (!frontier.empty()) {
    auto u = frontier.front();
    frontier.pop();
    int du = distance.at(u);
    for (const auto& g : generators) {
      auto v = compose(u, g);
      if (distance.emplace(v, du + 1).second) frontier.push(v);
    }
  }
  return distance;
}

}  // namespace

int cayley_length(const SignedPermutation& w) { return cayley_bfs(w.n()).at(w); }

std::vector<int> cayley_distances(int n) {
  auto distance = cayley_bfs(n);
  std::vector<int> by_rank(group_order64(n), -1);
  for (const auto& [v, d] : distance) by_rank[rank64(v)] = d;
  return by_rank;
}

VerificationReport verify_relations(int n) {
  if (n < 2 || n > 8) throw Error(Errc::RangeViolation, "relations are checked for 2 <= n <= 8");
  return timed_check("relations", {{"n", std::to_string(n)}}, [n](VerificationReport& r) {
    const auto e = SignedPermutation::identity(n);
    auto s = [n](int i) { return generator_s(n, i); };
    auto t = [n](int i) { return generator_t(n, i); };
    auto power = [&](const SignedPermutation& w, int k) {
      auto out = e;
      for (int i = 0; i < k; ++i) out = compose(out, w);
      return out;
    };
    int checked = 0;
    auto expect = [&](bool holds, const std::string& relation) {
      ++checked;
      if (!holds) r.fail(relation + " fails in B_" + std::to_string(n));
    };
    for (int i = 1; i < n; ++i) {
      expect(power(s(i), 2) == e, "s_" + std::to_string(i) + "^2 = e");
      if (i + 1 < n) expect(power(compose(s(i), s(i + 1)), 3) == e, "(s_" + std::to_string(i) + " s_" + std::to_string(i + 1) + ")^3 = e");
      for (int j = i + 2; j < n; ++j) {
        expect(power(compose(s(i), s(j)), 2) == e, "(s_" + std::to_string(i) + " s_" + std::to_string(j) + ")^2 = e");
      }
    }
    for (int i = 1; i <= n; ++i) {
      expect(power(t(i), 2) == e, "t_" + std::to_string(i) + "^2 = e");
      for (int j = i + 1; j <= n; ++j) {
        expect(compose(t(i), t(j)) == compose(t(j), t(i)), "t_" + std::to_string(i) + " t_" + std::to_string(j) + " = t_" + std::to_string(j) + " t_" + std::to_string(i));
      }
    }
    expect(power(compose(t(1), s(1)), 4) == e, "(t_1 s_1)^4 = e");
    for (int i = 1; i < n; ++i) {
      expect(compose(compose(s(i), t(i)), s(i)) == t(i + 1), "s_" + std::to_string(i) + " t_" + std::to_string(i) + " s_" + std::to_string(i) + " = t_" + std::to_string(i + 1));
      for (int j = 1; j <= n; ++j) {
        if (j == i || j == i + 1) continue;
        expect(compose(s(i), t(j)) == compose(t(j), s(i)), "s_" + std::to_string(i) + " t_" + std::to_string(j) + " = t_" + std::to_string(j) + " s_" + std::to_string(i));
      }
    }
    r.details["relations_checked"] = std::to_string(checked);
  });
}

}  // namespace hyperoct
