#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <sstream>

#include "hyperoct/checks.hpp"
#include "hyperoct/codes.hpp"
#include "hyperoct/enumerate.hpp"
#include "hyperoct/mahonian.hpp"
#include "hyperoct/statistics.hpp"

namespace hyperoct::cli {

namespace {

// Signals an exit status to run() without a library error.
struct Exit {
  int status;
};

Kind parse_kind(const std::string& type) { return type == "a" ? Kind::TypeA : Kind::TypeB; }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, sep);) parts.push_back(part);
  return parts;
}

void print_triangle(std::ostream& out, Kind kind, int n_max, const std::string& format, bool with_totals) {
  if (format == "json") {
    // Integers are written as plain JSON numbers at full precision.
    out << "[";
    for (int n = 1; n <= n_max; ++n) {
      auto row = row_product(kind, n);
      out << (n > 1 ? ",\n " : "\n ") << "{\"n\":" << n;
      if (with_totals) out << ",\"total\":" << total_inversions(kind, n, TotalMethod::ClosedForm);
      out << ",\"coeffs\":[";
      for (std::size_t k = 0; k < row.coeffs.size(); ++k) out << (k ? "," : "") << row.coeffs[k];
      out << "]}";
    }
    out << "\n]\n";
    return;
  }
  if (format == "long") {
    out << (with_totals ? "n,total,k,value\n" : "n,k,value\n");
    for (int n = 1; n <= n_max; ++n) {
      auto row = row_product(kind, n);
      auto total = total_inversions(kind, n, TotalMethod::ClosedForm);
      for (std::size_t k = 0; k < row.coeffs.size(); ++k) {
        out << n << ',';
        if (with_totals) out << total << ',';
        out << k << ',' << row.coeffs[k] << '\n';
      }
    }
    return;
  }
  // Wide rows laid out like the printed tables: n, [total,] i(n,0), i(n,1), ...
  for (int n = 1; n <= n_max; ++n) {
    auto row = row_product(kind, n);
    out << n;
    if (with_totals) out << ',' << total_inversions(kind, n, TotalMethod::ClosedForm);
    for (const auto& c : row.coeffs) out << ',' << c;
    out << '\n';
  }
}

void print_stat(std::ostream& out, const SignedPermutation& w, const std::vector<std::string>& show) {
  for (const auto& key : show) {
    out << key << '=';
    if (key == "invtable") out << format_table(inversion_table(w));
    else if (key == "inv") out << inv_b(w);
    else if (key == "fmaj") out << fmaj(w);
    else if (key == "rank") out << rank(w);
    else if (key == "class") out << class_index(w);
    else if (key == "backward") out << format_window(backward(w));
    else if (key == "negsum") out << neg_sum(w);
    out << '\n';
  }
}

struct FixtureRow {
  int n;
  BigInt total;
  std::vector<BigInt> coeffs;
};

std::vector<FixtureRow> read_fixture(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open fixture " << path << '\n';
    throw Exit{kExitUsage};
  }
  std::vector<FixtureRow> rows;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.empty() || line[0] == '#' || line[0] == 'n') continue;
    auto fields = split(line, ',');
    try {
      if (fields.size() < 3) throw std::invalid_argument("too few fields");
      FixtureRow row{std::stoi(fields[0]), BigInt(fields[1]), {}};
      for (std::size_t i = 2; i < fields.size(); ++i) row.coeffs.emplace_back(fields[i]);
      rows.push_back(std::move(row));
    } catch (const std::exception&) {
      err << "error: malformed fixture line " << line_no << " in " << path << '\n';
      throw Exit{kExitUsage};
    }
  }
  if (rows.empty()) {
    err << "error: fixture " << path << " has no rows\n";
    throw Exit{kExitUsage};
  }
  return rows;
}

int oeis_check(std::ostream& out, std::ostream& err, Kind kind, const std::string& path) {
  auto rows = read_fixture(path, err);
  std::optional<std::string> mismatch;
  for (const auto& fixture : rows) {
    if (fixture.n < 1) {
      err << "error: fixture row with n = " << fixture.n << '\n';
      return kExitUsage;
    }
    auto row = row_product(kind, fixture.n);
    auto total = total_inversions(kind, fixture.n, TotalMethod::Moment);
    if (total != fixture.total) {
      mismatch = "mismatch at total n=" + std::to_string(fixture.n) + ": expected " + total.str() + ", fixture has " +
                 fixture.total.str();
    } else if (row.coeffs.size() != fixture.coeffs.size()) {
      mismatch = "mismatch at row " + std::to_string(fixture.n) + ": expected " + std::to_string(row.coeffs.size()) +
                 " entries, fixture has " + std::to_string(fixture.coeffs.size());
    } else {
      for (std::size_t k = 0; k < row.coeffs.size(); ++k) {
        if (row.coeffs[k] != fixture.coeffs[k]) {
          mismatch = "mismatch at (" + std::to_string(fixture.n) + "," + std::to_string(k) + "): expected " +
                     row.coeffs[k].str() + ", fixture has " + fixture.coeffs[k].str();
          break;
        }
      }
    }
    if (mismatch) break;
  }
  if (mismatch) {
    out << "FAIL oeis-check type=" << to_string(kind) << " fixture=" << path << '\n' << "  " << *mismatch << '\n';
    return kExitFailed;
  }
  out << "PASS oeis-check type=" << to_string(kind) << " rows=" << rows.size() << " fixture=" << path << '\n';
  return kExitOk;
}

}  // namespace

std::string default_fixture(const std::string& type) {
  return std::string(HYPEROCT_DATA_DIR) + (type == "a" ? "/table1_type_a.csv" : "/table2_type_b.csv");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed permutation statistics and Mahonian triangles of types A and B", "hyperoct"};
  app.require_subcommand(1);

  std::string type = "b";
  int n = 0;
  std::string format = "csv";
  bool with_totals = false;
  auto* triangle = app.add_subcommand("triangle", "Print rows 1..n of a Mahonian triangle");
  triangle->add_option("--type", type, "Triangle kind")->required()->check(CLI::IsMember({"a", "b"}));
  triangle->add_option("--n", n, "Last row")->required()->check(CLI::PositiveNumber);
  triangle->add_option("--format", format, "csv (wide rows), long (n,k,value) or json")
      ->check(CLI::IsMember({"csv", "long", "json"}));
  triangle->add_flag("--with-totals", with_totals, "Prepend the total-inversions column");

  std::string perm;
  std::string show = "invtable,inv,fmaj,rank,class,backward,negsum";
  auto* stat = app.add_subcommand("stat", "Statistics of one signed permutation");
  stat->add_option("--perm", perm, "Window, e.g. \"7 3 -2 8 -6 -4 -1 5\"")->required();
  stat->add_option("--show", show, "Comma-separated subset of invtable,inv,fmaj,rank,class,backward,negsum");

  auto* rank_cmd = app.add_subcommand("rank", "Mixed-radix rank of a signed permutation");
  rank_cmd->add_option("--perm", perm, "Window")->required();

  std::string rank_text;
  auto* unrank_cmd = app.add_subcommand("unrank", "Signed permutation with a given rank");
  unrank_cmd->add_option("--n", n, "Rank of the group B_n")->required();
  unrank_cmd->add_option("--rank", rank_text, "Decimal rank in [0, 2^n n!)")->required();

  std::string check;
  unsigned jobs = 1;
  int ceiling = kDefaultCeiling;
  std::string report_format = "text";
  std::vector<std::string> choices = check_names();
  choices.push_back("all");
  auto* verify = app.add_subcommand("verify", "Run named identity checks");
  verify->add_option("--check", check, "Check name or 'all'")->required()->check(CLI::IsMember(choices));
  verify->add_option("--n", n, "Size parameter")->required();
  verify->add_option("--format", report_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--jobs", jobs, "Worker threads for enumeration")->check(CLI::Range(1u, 1024u));
  verify->add_option("--ceiling", ceiling, "Enumeration ceiling (at most 10)")->check(CLI::Range(1, kMaxCeiling));

  std::string fixture;
  auto* oeis = app.add_subcommand("oeis-check", "Compare generated rows with the bundled table fixtures");
  oeis->add_option("--type", type, "Triangle kind")->required()->check(CLI::IsMember({"a", "b"}));
  oeis->add_option("--fixture", fixture, "Fixture CSV (defaults to the bundled table)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*triangle) {
      print_triangle(out, parse_kind(type), n, format, with_totals);
      return kExitOk;
    }
    if (*stat) {
      static const std::vector<std::string> known{"invtable", "inv", "fmaj", "rank", "class", "backward", "negsum"};
      auto keys = split(show, ',');
      for (const auto& key : keys) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
          err << "error: unknown statistic '" << key << "'\n";
          return kExitUsage;
        }
      }
      print_stat(out, parse_window(perm), keys);
      return kExitOk;
    }
    if (*rank_cmd) {
      out << rank(parse_window(perm)) << '\n';
      return kExitOk;
    }
    if (*unrank_cmd) {
      if (rank_text.empty() || rank_text.find_first_not_of("0123456789") != std::string::npos) {
        err << "error: rank must be a non-negative decimal integer, got '" << rank_text << "'\n";
        return kExitUsage;
      }
      out << format_window(unrank(BigInt(rank_text), n)) << '\n';
      return kExitOk;
    }
    if (*verify) {
      EnumerationOptions options;
      options.jobs = jobs;
      options.ceiling = ceiling;
      options.progress = [&err](std::uint64_t done, std::uint64_t total) {
        err << "progress: " << done << '/' << total << '\n';
      };
      std::vector<std::string> selected = check == "all" ? check_names() : std::vector<std::string>{check};
      for (const auto& name : selected) validate_check(name, n, options);
      nlohmann::json reports = nlohmann::json::array();
      bool all_passed = true;
      for (const auto& name : selected) {
        auto report = run_check(name, n, options);
        all_passed = all_passed && report.passed();
        if (report_format == "json") reports.push_back(to_json(report));
        else out << to_text(report) << '\n';
      }
      if (report_format == "json") out << (reports.size() == 1 ? reports[0] : reports).dump(2) << '\n';
      return all_passed ? kExitOk : kExitFailed;
    }
    if (*oeis) {
      return oeis_check(out, err, parse_kind(type), fixture.empty() ? default_fixture(type) : fixture);
    }
  } catch (const Exit& e) {
    return e.status;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hyperoct::cli
