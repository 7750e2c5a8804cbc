#pragma once

/**
 * Output documents for the CLI. Machine format is a single JSON document
 * per invocation with a schema_version field, keys in stable (sorted)
 * order, no timestamps, and every big integer rendered as a decimal
 * string (indices and counts stay JSON numbers). Parsing a document and
 * re-serializing it reproduces the bytes exactly.
 */

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fibsgp/bigint.hpp"
#include "fibsgp/formulas.hpp"
#include "fibsgp/greedy.hpp"
#include "fibsgp/verify.hpp"

namespace fibsgp::report {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// dump(2) with a trailing newline; the one true rendering used everywhere,
// so round-tripping stays byte-exact.
inline std::string render_machine(const json& doc) { return doc.dump(2) + "\n"; }

inline json document(const std::string& command, json input) {
  return json{{"schema_version", kSchemaVersion},
              {"tool", "fibsgp"},
              {"command", command},
              {"input", std::move(input)}};
}

inline json seed_input(const SeedPair& seed) {
  return json{{"a", dec(seed.a)}, {"b", dec(seed.b)}};
}

inline json biglist(const std::vector<BigInt>& v) {
  json arr = json::array();
  for (const BigInt& x : v) arr.push_back(dec(x));
  return arr;
}

inline std::string join(const std::vector<BigInt>& v, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += dec(v[i]);
  }
  return out;
}

// ---- analyze ----------------------------------------------------------

inline json analyze_document(const SemigroupSummary& s) {
  json input = seed_input(s.spec.seed);
  input["n"] = s.spec.n;
  input["d"] = s.spec.d;
  json doc = document("analyze", std::move(input));
  json result;
  result["exists"] = s.exists();
  if (s.exists()) {
    const SemigroupProfile& p = *s.profile;
    result["degenerate"] = p.degenerate;
    result["embedding_dimension"] = p.embedding_dimension;
    result["minimal_generators"] = biglist(p.minimal_generators);
    result["frobenius"] = dec(p.frobenius);
    result["genus"] = dec(p.genus);
    if (p.pseudo_frobenius) {
      result["pseudo_frobenius"] = biglist(*p.pseudo_frobenius);
    } else {
      result["pseudo_frobenius_skipped"] = "V_n exceeds oracle cap";
    }
  }
  doc["result"] = std::move(result);
  return doc;
}

inline std::string analyze_text(const SemigroupSummary& s,
                                const std::string& nonexistence_reason) {
  std::ostringstream out;
  out << "subsequence: a=" << dec(s.spec.seed.a) << " b=" << dec(s.spec.seed.b)
      << " n=" << s.spec.n << " d=" << s.spec.d << "\n";
  if (!s.exists()) {
    out << "numerical semigroup: no (" << nonexistence_reason << ")\n";
    return out.str();
  }
  const SemigroupProfile& p = *s.profile;
  out << "numerical semigroup: yes\n";
  if (p.degenerate) {
    out << "degenerate: semigroup is all nonnegative integers\n";
  }
  out << "embedding dimension: " << p.embedding_dimension << "\n";
  out << "minimal generators: " << join(p.minimal_generators) << "\n";
  out << "frobenius: " << dec(p.frobenius) << "\n";
  out << "genus: " << dec(p.genus) << "\n";
  if (p.pseudo_frobenius) {
    out << "pseudo-frobenius: " << join(*p.pseudo_frobenius) << "\n";
  } else {
    out << "pseudo-frobenius: skipped (V_n exceeds oracle cap)\n";
  }
  return out.str();
}

// ---- apery ------------------------------------------------------------

struct AperyRows {
  BigInt modulus;
  BigInt frobenius;
  BigInt genus;
  // One row per x = 1..V_n-1 in greedy order: (x, coeffs, s(x), residue).
  struct Row {
    BigInt x;
    std::vector<int> coeffs;
    BigInt s;
    BigInt residue;
  };
  std::vector<Row> rows;  // possibly truncated for display
  std::size_t total_rows = 0;
};

// Walks the Apery set in greedy order x = 1..V_n-1. F and genus always come
// from the full set; `limit` only truncates the rows kept for display.
inline AperyRows apery_rows(const SeedPair& seed, std::size_t n,
                            std::optional<std::size_t> limit,
                            std::uint64_t cap = kDefaultOracleCap) {
  BigInt vn = gen_term(seed, n);
  AperySet ap = d2_apery(seed, n, cap);  // validates and enforces the cap
  SequenceCache seq{seed};

  AperyRows out;
  out.modulus = vn;
  out.total_rows = static_cast<std::size_t>(vn.get_ui()) - 1;

  BigInt max_element = 0;
  BigInt sum;
  sum = 0;
  for (BigInt x = 1; x < vn; ++x) {
    GreedyRep rep = greedy_decompose(x);
    BigInt s = weight(rep, seq, n);
    if (s > max_element) max_element = s;
    sum += s;
    if (!limit || out.rows.size() < *limit) {
      out.rows.push_back({x, rep.coeffs, s, s % vn});
    }
  }
  out.frobenius = max_element - vn;
  out.genus = div_exact(2 * sum - vn * (vn - 1), 2 * vn, "apery_rows genus");
  return out;
}

inline json apery_document(const SeedPair& seed, std::size_t n,
                           std::optional<std::size_t> limit,
                           const AperyRows& rows) {
  json input = seed_input(seed);
  input["n"] = n;
  input["d"] = 2;
  if (limit) {
    input["limit"] = *limit;
  } else {
    input["limit"] = nullptr;
  }
  json doc = document("apery", std::move(input));
  doc["modulus"] = dec(rows.modulus);
  doc["frobenius"] = dec(rows.frobenius);
  doc["genus"] = dec(rows.genus);
  doc["total_rows"] = rows.total_rows;
  doc["rows_shown"] = rows.rows.size();
  json arr = json::array();
  for (const auto& row : rows.rows) {
    arr.push_back(json{{"x", dec(row.x)},
                       {"coeffs", row.coeffs},
                       {"s", dec(row.s)},
                       {"residue", dec(row.residue)}});
  }
  doc["rows"] = std::move(arr);
  return doc;
}

inline std::string coeff_list(const std::vector<int>& coeffs) {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coeffs[i]);
  }
  return out + "]";
}

inline std::string apery_text(const SeedPair& seed, std::size_t n,
                              const AperyRows& rows) {
  std::ostringstream out;
  out << "apery set of <V_n, V_n+2, ...> mod V_" << n << " = "
      << dec(rows.modulus) << " (seed a=" << dec(seed.a)
      << " b=" << dec(seed.b) << ")\n";
  out << "x  lambda  s(x)  s(x) mod V_n\n";
  for (const auto& row : rows.rows) {
    out << dec(row.x) << "  " << coeff_list(row.coeffs) << "  " << dec(row.s)
        << "  " << dec(row.residue) << "\n";
  }
  if (rows.rows.size() < rows.total_rows) {
    out << "(" << rows.total_rows - rows.rows.size() << " more rows not shown)\n";
  }
  out << "frobenius: " << dec(rows.frobenius) << "\n";
  out << "genus: " << dec(rows.genus) << "\n";
  return out.str();
}

// ---- greedy -----------------------------------------------------------

inline json greedy_document(const GreedyRep& rep) {
  json doc = document("greedy", json{{"x", dec(rep.x)}});
  doc["k"] = rep.top_index();
  doc["coeffs"] = rep.coeffs;
  json parts = json::array();
  for (std::size_t i = 1; i <= rep.top_index(); ++i) {
    parts.push_back(json{{"i", i},
                         {"even_fibonacci", dec(fib(2 * i))},
                         {"coeff", rep.coeffs[i - 1]}});
  }
  doc["parts"] = std::move(parts);
  return doc;
}

inline std::string greedy_text(const GreedyRep& rep) {
  std::ostringstream out;
  out << dec(rep.x) << " =";
  bool first = true;
  for (std::size_t i = rep.top_index(); i >= 1; --i) {
    if (rep.coeffs[i - 1] == 0) continue;
    out << (first ? " " : " + ") << rep.coeffs[i - 1] << "*" << dec(fib(2 * i));
    first = false;
  }
  out << "   (even-index fibonacci parts F_2..F_" << 2 * rep.top_index()
      << ")\n";
  out << "lambda: " << coeff_list(rep.coeffs) << "\n";
  return out.str();
}

// ---- table ------------------------------------------------------------

struct TableRow {
  std::size_t n = 0;
  std::size_t kappa = 0;
  BigInt frobenius;
  BigInt genus;
};

inline std::vector<TableRow> family_table(Family family, std::size_t max_n) {
  std::size_t start = family == Family::fibonacci ? 3 : 4;
  if (max_n < start) {
    throw std::invalid_argument("family_table: max n below the family's "
                                "smallest supported index");
  }
  SeedPair seed = family == Family::fibonacci ? SeedPair{1, 1} : SeedPair{1, 3};
  std::vector<TableRow> rows;
  for (std::size_t n = start; n <= max_n; ++n) {
    TableRow row;
    row.n = n;
    row.kappa = embedding_closed(family, n);
    row.frobenius = family == Family::fibonacci ? fibonacci_frobenius_closed(n)
                                                : lucas_frobenius_closed(n);
    row.genus = family == Family::fibonacci ? fibonacci_genus_recurrence(n).first
                                            : d2_genus(seed, n, SumMode::block);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json table_document(Family family, std::size_t max_n,
                           const std::vector<TableRow>& rows) {
  json input{{"family", family == Family::fibonacci ? "fibonacci" : "lucas"},
             {"max_n", max_n}};
  json doc = document("table", std::move(input));
  json arr = json::array();
  for (const TableRow& row : rows) {
    arr.push_back(json{{"n", row.n},
                       {"kappa", row.kappa},
                       {"frobenius", dec(row.frobenius)},
                       {"genus", dec(row.genus)}});
  }
  doc["rows"] = std::move(arr);
  return doc;
}

inline std::string table_text(Family family, const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << (family == Family::fibonacci ? "fibonacci" : "lucas")
      << " subsequence semigroups, d = 2\n";
  out << "n  kappa  frobenius  genus\n";
  for (const TableRow& row : rows) {
    out << row.n << "  " << row.kappa << "  " << dec(row.frobenius) << "  "
        << dec(row.genus) << "\n";
  }
  return out.str();
}

// ---- verify -----------------------------------------------------------

inline json verify_document(const VerifyReport& report) {
  json input = seed_input(report.options.seed);
  input["n_range"] = json::array({report.options.n_lo, report.options.n_hi});
  input["d_range"] = json::array({report.options.d_lo, report.options.d_hi});
  input["oracle_cap"] = report.options.oracle_cap;
  json doc = document("verify", std::move(input));

  json cases = json::array();
  for (const VerifyCase& c : report.cases) {
    json jc{{"n", c.n}, {"d", c.d}};
    switch (c.status) {
      case VerifyCase::Status::pass: jc["status"] = "pass"; break;
      case VerifyCase::Status::fail: jc["status"] = "fail"; break;
      case VerifyCase::Status::skip: jc["status"] = "skip"; break;
    }
    if (c.status == VerifyCase::Status::skip) {
      jc["reason"] = c.skip_reason;
    } else {
      json checks = json::array();
      for (const VerifyCheck& ch : c.checks) {
        checks.push_back(json{{"name", ch.name},
                              {"formula", ch.formula},
                              {"oracle", ch.oracle},
                              {"ok", ch.ok}});
      }
      jc["checks"] = std::move(checks);
    }
    cases.push_back(std::move(jc));
  }
  doc["cases"] = std::move(cases);
  doc["summary"] = json{{"cases", report.cases.size()},
                        {"passed", report.passed},
                        {"failed", report.failed},
                        {"skipped", report.skipped}};
  return doc;
}

inline std::string verify_text(const VerifyReport& report) {
  std::ostringstream out;
  const VerifyOptions& o = report.options;
  out << "verify seed a=" << dec(o.seed.a) << " b=" << dec(o.seed.b) << ", n in ["
      << o.n_lo << ", " << o.n_hi << "], d in [" << o.d_lo << ", " << o.d_hi
      << "], oracle cap " << o.oracle_cap << "\n";
  for (const VerifyCase& c : report.cases) {
    out << "n=" << c.n << " d=" << c.d << ": ";
    switch (c.status) {
      case VerifyCase::Status::pass:
        out << "pass (" << c.checks.size() << " checks)\n";
        break;
      case VerifyCase::Status::skip:
        out << "skip - " << c.skip_reason << "\n";
        break;
      case VerifyCase::Status::fail:
        out << "FAIL\n";
        for (const VerifyCheck& ch : c.checks) {
          if (!ch.ok) {
            out << "  " << ch.name << ": formula " << ch.formula << ", oracle "
                << ch.oracle << "\n";
          }
        }
        break;
    }
  }
  out << "summary: " << report.cases.size() << " cases, " << report.passed
      << " passed, " << report.failed << " failed, " << report.skipped
      << " skipped\n";
  out << (report.all_ok() ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
  return out.str();
}

}  // namespace fibsgp::report
