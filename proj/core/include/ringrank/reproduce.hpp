#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ringrank/ideals.hpp"

namespace ringrank {

struct ReproduceOptions {
  std::size_t m = 1;
  std::size_t n = 2;
  std::uint32_t q = 2;
  /// Ranks via composition length of aR and socles via the radical
  /// annihilator only; needed for (m, n) = (2, 2).
  bool fastpath = false;
  Budget budget;
};

struct ReproduceRow {
  std::string quantity;
  std::string expected;
  std::string computed;
  bool match = false;
};

struct ReproduceReport {
  ReproduceOptions options;
  std::size_t dim = 0;
  std::vector<ReproduceRow> rows;

  bool all_match() const;
  /// Table of expected against computed values, deterministic.
  std::string to_text() const;
};

/// Ranks of J, K, L on both sides and both socles of the block example
/// algebra for the given (m, n, q), against the closed-form values
/// rank_r J = n, rank_l J = m, rank_r K = inf, rank_l K = m,
/// rank_r L = n, rank_l L = inf, right socle [0 B; 0 C], left socle [A B; 0 0].
/// Throws BudgetExceeded when the requested size is out of reach.
ReproduceReport reproduce_block_example(const ReproduceOptions& options);

}  // namespace ringrank
