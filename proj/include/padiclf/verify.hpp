#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padiclf/characters.hpp"
#include "padiclf/ratfun.hpp"
#include "padiclf/serialize.hpp"

namespace padiclf {

struct JobConfig {
  // (p, n) points; empty means the suite's default grid. Suites that do not
  // involve a cover degree only look at the primes.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> points;
  int max_conductor = 2;
  int samples = 10;  // random test functions per parameter point
  std::uint64_t seed = 1;
  std::vector<std::string> suites;
  unsigned threads = 0;  // 0: hardware concurrency
};

// throws DomainError for an even or composite p, n not dividing p - 1, or bounds out of range
void validate(const JobConfig& cfg);

struct VerifyRecord {
  std::string suite;
  std::string id;
  std::string anchor;
  json params;
  bool pass = false;
  std::optional<RatFun> lhs, rhs;
  std::string note;
  bool keep_sides = false;  // serialize lhs/rhs even when passing
  double wall_ms = 0;
};

struct VerifyReport {
  json config;
  std::vector<VerifyRecord> records;
  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

const std::vector<std::string>& suite_names();

// unit parts e <= max_conductor with unit exponents dividing phi(p^e), and chi(pi) over the
// roots of unity of order dividing 2n plus the non-root 2/3; with all_values unset only
// chi(pi) in {1, zeta_2n, 2/3}
std::vector<MultChar> enumerate_characters(std::uint32_t p, int max_conductor, std::uint32_t n,
                                           bool all_values = true);

VerifyReport run_suite(const JobConfig& cfg);
// wall times are included only when timing is set, so the default output is byte-stable.
// Both sides are written for failing records, for keep_sides records, and for all records with full.
json to_json(const VerifyReport& report, bool timing = false, bool full = false);

enum class TableKind { reducibility, dmatrix, factors };
TableKind table_kind_from_string(const std::string& s);

struct Table {
  json data;
  std::string latex;
};

// reducibility: the (p, n) points of cfg (default p = 13, n in {1, 2, 3, 4, 6, 12});
// dmatrix: canonical characters at each point; factors: enumerate_characters at each prime
Table emit_table(TableKind kind, const JobConfig& cfg);

}  // namespace padiclf
