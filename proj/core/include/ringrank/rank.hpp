#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ringrank/algebra.hpp"
#include "ringrank/ideals.hpp"

namespace ringrank {

/// Rank of an element: a finite count of minimal one-sided ideals, or
/// infinite when the element lies outside the socle. Infinite compares
/// greater than every finite value.
class RankValue {
 public:
  static RankValue finite(std::size_t n) { return RankValue(n); }
  static RankValue infinite() { return RankValue(); }

  bool is_finite() const { return value_.has_value(); }
  /// Throws DomainError when infinite.
  std::size_t value() const;
  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend bool operator==(const RankValue&, const RankValue&) = default;
  friend std::strong_ordering operator<=>(const RankValue& a, const RankValue& b) {
    if (a.is_finite() != b.is_finite()) return a.is_finite() ? std::strong_ordering::less
                                                             : std::strong_ordering::greater;
    if (!a.is_finite()) return std::strong_ordering::equal;
    return *a.value_ <=> *b.value_;
  }

 private:
  RankValue() = default;
  explicit RankValue(std::size_t n) : value_(n) {}
  std::optional<std::size_t> value_;
};

RankValue operator+(const RankValue& a, const RankValue& b);

/// a = a_1 + ... + a_n with each a_i of right rank 1 in witness ideal K_i
/// and n the right rank of a.
struct MinimalDecomposition {
  std::vector<Element> summands;
  std::vector<RightIdealBasis> witness_ideals;
};

enum class RankMethod {
  automatic,           // composition length on semiprime algebras, else sum search
  sum_search,          // breadth-first search over sums of minimal right ideals
  composition_length,  // length of aR for socle elements
};

struct RankOptions {
  Budget budget;
  RankMethod method = RankMethod::automatic;
  /// In automatic mode on semiprime algebras, also run the sum search when
  /// it fits the budget and fail loudly on disagreement.
  bool cross_check = true;
};

/// Rank queries on one algebra with cached minimal ideals and ideal sums.
/// Const member functions are safe to call concurrently.
class RankEngine {
 public:
  explicit RankEngine(Algebra algebra, RankOptions options = {});
  ~RankEngine();
  RankEngine(const RankEngine&) = delete;
  RankEngine& operator=(const RankEngine&) = delete;

  const Algebra& algebra() const { return algebra_; }
  const RankOptions& options() const { return options_; }
  const IdealLattice& lattice() const { return lattice_; }
  bool is_semiprime() const { return lattice_.is_semiprime(); }
  bool in_right_socle(const Element& a) const;
  bool in_left_socle(const Element& a) const;

  RankValue right_rank(const Element& a) const;
  /// Right rank of the same coefficient vector in the opposite algebra.
  RankValue left_rank(const Element& a) const;

  RankValue right_rank_by_sum_search(const Element& a) const;
  RankValue right_rank_by_length(const Element& a) const;

  /// Uses the lexicographically first set of minimal ideals (in canonical
  /// order) whose sum contains `a`; summands come from the linear solve with
  /// free variables zero. Throws DomainError for zero or infinite rank.
  MinimalDecomposition minimal_right_decomposition(const Element& a) const;

  /// Engine for opposite(algebra()), built on first use.
  const RankEngine& opposite_engine() const;

 private:
  using IdealTuple = std::vector<std::size_t>;
  struct Hit {
    std::size_t depth;
    IdealTuple ideals;
  };

  void check_owner(const Element& a) const;
  std::optional<Hit> search(const Element& a) const;
  bool extend_levels(std::size_t depth) const;  // requires mutex_

  Algebra algebra_;
  RankOptions options_;
  IdealLattice lattice_;

  mutable std::mutex mutex_;
  // levels_[k] holds the ideal sums first reached with k + 1 summands, each
  // with the lexicographically least sorted tuple of ideal indices.
  mutable std::vector<std::map<Subspace, IdealTuple>> levels_;
  mutable std::set<Subspace> seen_;
  mutable bool exhausted_ = false;

  mutable std::once_flag opposite_once_;
  mutable std::unique_ptr<RankEngine> opposite_;
};

RankValue right_rank(const Element& a, RankOptions options = {});
RankValue left_rank(const Element& a, RankOptions options = {});
MinimalDecomposition minimal_right_decomposition(const Element& a, RankOptions options = {});

}  // namespace ringrank
