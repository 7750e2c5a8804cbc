// Command-line front end: exact invariants (Frobenius number, genus, Apery
// set, embedding dimension, pseudo-Frobenius numbers) of numerical
// semigroups generated by stepped subsequences V_n, V_{n+d}, V_{n+2d}, ...
// of generalized Fibonacci sequences, plus a formula-vs-brute-force verify
// sweep. See README.md for the exit-code taxonomy.

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "fibsgp/bigint.hpp"
#include "fibsgp/formulas.hpp"
#include "fibsgp/greedy.hpp"
#include "fibsgp/oracle.hpp"
#include "fibsgp/report.hpp"
#include "fibsgp/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotSemigroup = 3;
constexpr int kExitUnsupportedStep = 4;
constexpr int kExitVerifyMismatch = 5;
constexpr int kExitCapExceeded = 6;

// A malformed --a/--b/--x is a usage error, not an internal one.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fibsgp::BigInt parse_big(const std::string& text, const char* flag) {
  try {
    fibsgp::BigInt v{text};
    if (v < 1) {
      throw UsageError(std::string(flag) + " must be a positive integer");
    }
    return v;
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(flag) + ": '" + text +
                     "' is not a decimal integer");
  }
}

std::uint64_t default_oracle_cap() {
  const char* env = std::getenv("FIBSGP_ORACLE_CAP");
  if (env == nullptr || *env == '\0') return fibsgp::kDefaultOracleCap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) {
    throw UsageError(std::string("FIBSGP_ORACLE_CAP: '") + env +
                     "' is not a positive integer");
  }
  return v;
}

struct RangePair {
  std::size_t lo = 0, hi = 0;
};

RangePair parse_range(const std::string& text, const char* flag) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw UsageError(std::string(flag) + ": expected LO:HI, got '" + text + "'");
  }
  try {
    RangePair r;
    r.lo = std::stoull(text.substr(0, colon));
    r.hi = std::stoull(text.substr(colon + 1));
    if (r.lo < 1 || r.lo > r.hi) {
      throw UsageError(std::string(flag) + ": need 1 <= LO <= HI, got '" +
                       text + "'");
    }
    return r;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": expected LO:HI, got '" + text + "'");
  }
}

void emit(const std::string& format, const fibsgp::report::json& machine_doc,
          const std::string& text) {
  if (format == "machine") {
    std::cout << fibsgp::report::render_machine(machine_doc);
  } else {
    std::cout << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fibsgp;

  CLI::App app{
      "fibsgp: exact invariants of numerical semigroups generated by "
      "stepped subsequences of generalized Fibonacci sequences"};
  app.require_subcommand(1);

  std::string a_text = "1", b_text = "1", x_text;
  std::size_t n = 3, d = 2, max_n = 10;
  std::string n_range_text = "3:10", d_range_text = "1:3";
  std::uint64_t oracle_cap = 0;  // resolved after parse (env, then flag)
  bool cap_given = false;
  std::size_t limit = 0;
  bool limit_given = false;
  unsigned jobs = 1;
  std::string format = "text";
  std::string family_text;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--a", a_text, "first seed term V_1")->capture_default_str();
    sub->add_option("--b", b_text, "second seed term V_2")->capture_default_str();
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--oracle-cap", oracle_cap,
                    "largest modulus the brute-force oracle accepts "
                    "(default 1000000, env FIBSGP_ORACLE_CAP)")
        ->check(CLI::PositiveNumber)
        ->each([&](const std::string&) { cap_given = true; });
  };

  CLI::App* cmd_analyze =
      app.add_subcommand("analyze", "summary of one subsequence semigroup");
  add_seed(cmd_analyze);
  cmd_analyze->add_option("--n", n, "start index")->check(CLI::PositiveNumber);
  cmd_analyze->add_option("--d", d, "step width")->check(CLI::PositiveNumber);
  add_cap(cmd_analyze);
  add_format(cmd_analyze);

  CLI::App* cmd_apery = app.add_subcommand(
      "apery", "Apery set of a step-2 subsequence semigroup, in greedy order");
  add_seed(cmd_apery);
  cmd_apery->add_option("--n", n, "start index")->check(CLI::PositiveNumber);
  cmd_apery->add_option("--limit", limit, "print at most this many rows")
      ->check(CLI::PositiveNumber)
      ->each([&](const std::string&) { limit_given = true; });
  add_cap(cmd_apery);
  add_format(cmd_apery);

  CLI::App* cmd_greedy = app.add_subcommand(
      "greedy", "greedy decomposition of x over even-index Fibonacci numbers");
  cmd_greedy->add_option("--x", x_text, "positive integer to decompose")
      ->required();
  add_format(cmd_greedy);

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "sweep a (n, d) rectangle comparing formulas to brute force");
  add_seed(cmd_verify);
  cmd_verify->add_option("--n-range", n_range_text, "start indices LO:HI")
      ->capture_default_str();
  cmd_verify->add_option("--d-range", d_range_text, "step widths LO:HI")
      ->capture_default_str();
  add_cap(cmd_verify);
  cmd_verify->add_option("--jobs", jobs, "worker threads across cases")
      ->check(CLI::PositiveNumber);
  add_format(cmd_verify);

  CLI::App* cmd_table = app.add_subcommand(
      "table", "kappa/Frobenius/genus table for a classical family, d = 2");
  cmd_table->add_option("family", family_text, "fibonacci or lucas")
      ->required()
      ->check(CLI::IsMember({"fibonacci", "lucas"}));
  cmd_table->add_option("--max-n", max_n, "largest start index")
      ->check(CLI::PositiveNumber);
  add_format(cmd_table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help / --version
    }
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (!cap_given) oracle_cap = default_oracle_cap();

    if (*cmd_analyze) {
      SeedPair seed{parse_big(a_text, "--a"), parse_big(b_text, "--b")};
      SubsequenceSpec spec{seed, n, d};
      SemigroupSummary summary =
          analyze(spec, AnalyzeOptions{oracle_cap, SumMode::block});
      std::string reason =
          summary.exists() ? "" : detail::nonexistence_reason(spec);
      emit(format, report::analyze_document(summary),
           report::analyze_text(summary, reason));
      return summary.exists() ? kExitOk : kExitNotSemigroup;
    }

    if (*cmd_apery) {
      SeedPair seed{parse_big(a_text, "--a"), parse_big(b_text, "--b")};
      std::optional<std::size_t> row_limit;
      if (limit_given) row_limit = limit;
      report::AperyRows rows;
      try {
        rows = report::apery_rows(seed, n, row_limit, oracle_cap);
      } catch (const CapExceededError& e) {
        std::cerr << e.what()
                  << "\nhint: `fibsgp analyze` computes Frobenius/genus for "
                     "large V_n without materializing the Apery set\n";
        return kExitCapExceeded;
      }
      emit(format, report::apery_document(seed, n, row_limit, rows),
           report::apery_text(seed, n, rows));
      return kExitOk;
    }

    if (*cmd_greedy) {
      BigInt x = parse_big(x_text, "--x");
      GreedyRep rep = greedy_decompose(x);
      emit(format, report::greedy_document(rep), report::greedy_text(rep));
      return kExitOk;
    }

    if (*cmd_verify) {
      VerifyOptions options{SeedPair{parse_big(a_text, "--a"),
                                     parse_big(b_text, "--b")}};
      RangePair nr = parse_range(n_range_text, "--n-range");
      RangePair dr = parse_range(d_range_text, "--d-range");
      options.n_lo = nr.lo;
      options.n_hi = nr.hi;
      options.d_lo = dr.lo;
      options.d_hi = dr.hi;
      options.oracle_cap = oracle_cap;
      options.jobs = jobs;
      VerifyReport sweep = run_verify(options);
      emit(format, report::verify_document(sweep), report::verify_text(sweep));
      return sweep.all_ok() ? kExitOk : kExitVerifyMismatch;
    }

    if (*cmd_table) {
      Family family =
          family_text == "fibonacci" ? Family::fibonacci : Family::lucas;
      std::vector<report::TableRow> rows = report::family_table(family, max_n);
      emit(format, report::table_document(family, max_n, rows),
           report::table_text(family, rows));
      return kExitOk;
    }

    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedStepError& e) {
    std::cerr << e.what() << "\n";
    return kExitUnsupportedStep;
  } catch (const CapExceededError& e) {
    std::cerr << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
