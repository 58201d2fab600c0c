#include "hyperoct/checks.hpp"

#include <algorithm>
#include <sstream>

#include "hyperoct/codes.hpp"
#include "hyperoct/mahonian.hpp"
#include "hyperoct/statistics.hpp"

namespace hyperoct {

namespace {

struct CheckRange {
  int lo;
  int hi;  // -1: bounded by the enumeration ceiling
};

CheckRange range_of(std::string_view name) {
  if (name == "symmetry" || name == "recurrence" || name == "sliding") return {1, 200};
  if (name == "totals") return {1, 500};
  if (name == "equidist") return {1, -1};
  if (name == "bijection") return {1, 8};
  if (name == "relations") return {2, 8};
  if (name == "classes") return {2, -1};
  if (name == "knuth-netto") return {1, 60};
  if (name == "gf") return {0, 40};
  throw Error(Errc::ParseError, "unknown check '" + std::string(name) + "'");
}

std::string join(const std::vector<BigInt>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  return out.str();
}

std::string where(Kind kind, int n, std::size_t k, const BigInt& expected, const BigInt& actual) {
  return std::string("type ") + to_string(kind) + " (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
         "): expected " + expected.str() + ", got " + actual.str();
}

void compare_rows(VerificationReport& r, const TriangleRow& expected, const TriangleRow& actual) {
  if (expected.coeffs.size() != actual.coeffs.size()) {
    r.fail(std::string("type ") + to_string(expected.kind) + " row " + std::to_string(expected.n) + ": length " +
           std::to_string(expected.coeffs.size()) + " vs " + std::to_string(actual.coeffs.size()));
    return;
  }
  for (std::size_t k = 0; k < expected.coeffs.size(); ++k) {
    if (expected.coeffs[k] != actual.coeffs[k]) {
      r.fail(where(expected.kind, expected.n, k, expected.coeffs[k], actual.coeffs[k]));
      return;
    }
  }
}

VerificationReport symmetry(int n) {
  return timed_check("symmetry", {{"n", std::to_string(n)}}, [n](VerificationReport& r) {
    for (Kind kind : {Kind::TypeA, Kind::TypeB}) {
      for (int m = 1; m <= n && r.passed(); ++m) {
        auto row = row_product(kind, m);
        if (!row.palindromic()) r.fail(std::string("type ") + to_string(kind) + " row " + std::to_string(m) + " is not palindromic");
      }
    }
    // w -> w_0 w maps k inversions to n^2 - k.
    for (int m = 1; m <= std::min(n, 6) && r.passed(); ++m) {
      auto w0 = SignedPermutation::longest_element(m);
      for (std::uint64_t x = 0; x < group_order64(m); ++x) {
        auto w = unrank64(x, m);
        if (inv_b(compose(w0, w)) != m * m - inv_b(w)) {
          r.fail("inv_b(w_0 w) != n^2 - inv_b(w) at w = " + format_window(w));
          break;
        }
      }
    }
  });
}

VerificationReport recurrence(int n) {
  return timed_check("recurrence", {{"n", std::to_string(n)}}, [n](VerificationReport& r) {
    for (Kind kind : {Kind::TypeA, Kind::TypeB}) {
      auto cache = RecurrenceCache(kind).extended(n);
      for (int m = 1; m <= n && r.passed(); ++m) compare_rows(r, row_product(kind, m), cache.row(m));
    }
  });
}

VerificationReport sliding(int n) {
  return timed_check("sliding", {{"n", std::to_string(n)}}, [n](VerificationReport& r) {
    for (int m = 1; m <= n && r.passed(); ++m) compare_rows(r, row_product(Kind::TypeB, m), row_sliding(m));
  });
}

VerificationReport totals(int n, const EnumerationOptions& options) {
  return timed_check("totals", {{"n", std::to_string(n)}}, [&](VerificationReport& r) {
    for (Kind kind : {Kind::TypeA, Kind::TypeB}) {
      for (int m = 1; m <= n && r.passed(); ++m) {
        auto closed = total_inversions(kind, m, TotalMethod::ClosedForm);
        auto rec = total_inversions(kind, m, TotalMethod::Recurrence);
        auto moment = total_inversions(kind, m, TotalMethod::Moment);
        if (closed != rec || closed != moment) {
          r.fail(std::string("type ") + to_string(kind) + " n=" + std::to_string(m) + ": closed form " + closed.str() +
                 ", recurrence " + rec.str() + ", moment " + moment.str());
        }
      }
      std::string key = kind == Kind::TypeA ? "A_" : "B_";
      key += std::to_string(n);
      r.details[key + ".closed_form"] = total_inversions(kind, n, TotalMethod::ClosedForm).str();
      r.details[key + ".recurrence"] = total_inversions(kind, n, TotalMethod::Recurrence).str();
      r.details[key + ".moment"] = total_inversions(kind, n, TotalMethod::Moment).str();
    }
    if (n <= std::min(options.ceiling, kMaxCeiling)) {
      auto brute = total_brute(n, options);
      r.details["B_" + std::to_string(n) + ".brute_force"] = brute.str();
      auto closed = total_inversions(Kind::TypeB, n, TotalMethod::ClosedForm);
      if (brute != closed) r.fail("brute-force total " + brute.str() + " != closed form " + closed.str());
    }
  });
}

VerificationReport equidist(int n, const EnumerationOptions& options) {
  return timed_check("equidist", {{"n", std::to_string(n)}}, [&](VerificationReport& r) {
    auto inv = histogram_brute(n, options);
    auto fm = fmaj_histogram(n, options);
    r.details["inv_b"] = join(inv.coeffs);
    r.details["fmaj"] = join(fm.coeffs);
    compare_rows(r, inv, fm);
  });
}

VerificationReport bijection(int n) {
  return timed_check("bijection", {{"n", std::to_string(n)}}, [n](VerificationReport& r) {
    std::uint64_t order = group_order64(n);
    for (std::uint64_t x = 0; x < order; ++x) {
      auto t = table_from_rank(x, n);
      auto w = decode(t);
      if (encode(w) != t) {
        r.fail("encode(decode" + format_table(t) + ") != " + format_table(t));
        break;
      }
      if (decode(encode(w)) != w || rank64(w) != x || unrank64(x, n) != w) {
        r.fail("round trip fails at rank " + std::to_string(x) + " (" + format_window(w) + ")");
        break;
      }
    }
    r.details["elements"] = std::to_string(order);
  });
}

VerificationReport classes(int n, const EnumerationOptions& options) {
  return timed_check("classes", {{"n", std::to_string(n)}}, [&](VerificationReport& r) {
    auto full = histogram_brute(n, options).coeffs;
    auto base = histogram_brute(n - 1, options).coeffs;
    BigInt class_size = group_order(n) / (2 * n);
    std::vector<BigInt> sum(full.size());
    for (int j = -n; j <= n && r.passed(); ++j) {
      if (j == 0) continue;
      auto h = class_histogram(n, j, options);
      int offset = j > 0 ? n - j : n - j - 1;
      BigInt size = 0;
      for (std::size_t k = 0; k < h.size(); ++k) {
        long long source = static_cast<long long>(k) - offset;
        BigInt expected = source >= 0 && source < static_cast<long long>(base.size()) ? base[source] : BigInt(0);
        if (h[k] != expected) {
          r.fail("C_" + std::to_string(j) + " at k=" + std::to_string(k) + ": expected " + expected.str() + ", got " + h[k].str());
          break;
        }
        size += h[k];
        sum[k] += h[k];
      }
      if (r.passed() && size != class_size) {
        r.fail("|C_" + std::to_string(j) + "| = " + size.str() + ", expected " + class_size.str());
      }
    }
    if (r.passed() && sum != full) r.fail("class histograms do not sum to the full histogram");
    r.details["class_size"] = class_size.str();
  });
}

VerificationReport knuth_netto_check(int n) {
  return timed_check("knuth-netto", {{"n", std::to_string(n)}}, [n](VerificationReport& r) {
    for (int m = 1; m <= n && r.passed(); ++m) {
      auto row = row_product(Kind::TypeA, m);
      for (int k = 0; k <= m; ++k) {
        BigInt expected = k < static_cast<int>(row.coeffs.size()) ? row.coeffs[k] : BigInt(0);
        auto got = knuth_netto(m, k);
        if (got != expected) {
          r.fail(where(Kind::TypeA, m, k, expected, got));
          break;
        }
      }
    }
  });
}

VerificationReport gf(int order) {
  return timed_check("gf", {{"n", std::to_string(order)}}, [order](VerificationReport& r) {
    for (int j = 0; j <= 4; ++j) {
      auto sub = verify_gf_identity(j, order);
      r.details["S_" + std::to_string(j)] = sub.details["S_j"];
      if (!sub.passed()) r.fail("j=" + std::to_string(j) + ": " + *sub.first_failure);
    }
    r.details["checked_order"] = std::to_string(order);
  });
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"symmetry", "recurrence", "sliding",   "totals",      "equidist",
                                              "bijection", "relations", "classes", "knuth-netto", "gf"};
  return names;
}

void validate_check(std::string_view name, int n, const EnumerationOptions& options) {
  auto range = range_of(name);
  int hi = range.hi < 0 ? std::min(options.ceiling, kMaxCeiling) : range.hi;
  if (n < range.lo || n > hi) {
    throw Error(Errc::RangeViolation, "check '" + std::string(name) + "' needs " + std::to_string(range.lo) +
                                          " <= n <= " + std::to_string(hi) + ", got " + std::to_string(n));
  }
}

VerificationReport run_check(std::string_view name, int n, const EnumerationOptions& options) {
  validate_check(name, n, options);
  if (name == "symmetry") return symmetry(n);
  if (name == "recurrence") return recurrence(n);
  if (name == "sliding") return sliding(n);
  if (name == "totals") return totals(n, options);
  if (name == "equidist") return equidist(n, options);
  if (name == "bijection") return bijection(n);
  if (name == "relations") return verify_relations(n);
  if (name == "classes") return classes(n, options);
  if (name == "knuth-netto") return knuth_netto_check(n);
  return gf(n);
}

}  // namespace hyperoct
