#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ringrank/ideals.hpp"
#include "ringrank/roster.hpp"

namespace ringrank {

enum class CheckStatus { pass, fail, skipped };

/// One line of a verification report.
struct CheckRecord {
  std::string ring;
  std::string suite;
  std::string check;
  CheckStatus status = CheckStatus::pass;
  std::uint64_t cases = 0;
  /// Skip reason, or what went wrong.
  std::string detail;
  /// Named element literals that falsify the check.
  std::vector<std::pair<std::string, std::string>> counterexample;
  /// True when the check was skipped because a scan exceeded the budget.
  bool budget_exhausted = false;

  /// `ring=.. suite=.. check=.. status=.. cases=..` followed by the
  /// counterexample and a quoted detail when present.
  std::string to_line() const;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  /// Sorted by (ring, suite, check).
  std::vector<CheckRecord> records;
  double seconds = 0;

  bool any_failed() const;
  bool any_budget_exhausted() const;
  /// 0 all passed, 2 a check failed, 3 a scan ran out of budget.
  int exit_code() const;
  /// Records plus a summary line; deterministic for fixed inputs and seed
  /// (timing is not included).
  std::string to_text() const;
};

/// Suite ids S1..S10.
const std::vector<std::string>& all_suites();

struct VerifyOptions {
  /// Subset of all_suites(); empty means all.
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
  Budget budget;
  /// Element pairs are enumerated exhaustively up to this many, else sampled.
  std::uint64_t pair_limit = std::uint64_t{1} << 18;
  /// Sample size when a quantifier is not exhausted.
  std::size_t samples = 500;
  /// Rings are checked concurrently on up to this many threads.
  unsigned threads = 0;
};

/// Runs the property suites on every ring. Throws DomainError for unknown
/// suite ids.
VerificationReport run_verification(const std::vector<RosterEntry>& rings,
                                    const VerifyOptions& options);

}  // namespace ringrank
