#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringrank/algebra.hpp"
#include "ringrank/detail/lazy.hpp"
#include "ringrank/linalg.hpp"

namespace ringrank {

/// Limit on exhaustive scans, counted in visited elements.
struct Budget {
  std::uint64_t max_steps = std::uint64_t{1} << 20;
};

/// Cumulative cost accounting for one top-level operation.
class BudgetMeter {
 public:
  BudgetMeter(Budget budget, std::string operation)
      : budget_(budget), operation_(std::move(operation)) {}

  /// Throws BudgetExceeded before any work is done when the running total
  /// would pass the limit.
  void charge(std::uint64_t steps);
  std::uint64_t used() const { return used_; }

 private:
  Budget budget_;
  std::string operation_;
  std::uint64_t used_ = 0;
};

/// A right ideal given by its carrier subspace, certified closed under
/// x -> x b_i for every basis element b_i.
struct RightIdealBasis {
  Algebra algebra;
  Subspace carrier;
  std::optional<Element> generator;
  bool closed = false;

  /// Throws DomainError if `carrier` is not closed under right
  /// multiplication, or if `generator` is given but not in `carrier`.
  static RightIdealBasis certify(const Algebra& algebra, Subspace carrier,
                                 std::optional<Element> generator = std::nullopt);

  std::size_t dim() const { return carrier.dim(); }
};

enum class Side { right, left };
enum class SocleMethod { automatic, bruteforce, radical_annihilator };
enum class RadicalMethod { quasi_regularity_scan, structural };
enum class ScanScope { socle, whole_algebra };

struct SocleReport {
  Side side = Side::right;
  Subspace socle;
  std::vector<RightIdealBasis> minimal_ideals;
  SocleMethod method = SocleMethod::radical_annihilator;
};

struct RadicalReport {
  Subspace radical;
  std::size_t nilpotency_index = 1;
  RadicalMethod method = RadicalMethod::quasi_regularity_scan;
};

/// q^dim bound below which the quasi-regularity scan is the reference
/// radical algorithm.
inline constexpr std::uint64_t kRadicalScanLimit = std::uint64_t{1} << 13;

/// aR = span{a b_i}. Contains a since the algebra is unital.
RightIdealBasis principal_right_ideal(const Element& a);

/// True iff I != 0 and every nonzero b in I generates I.
bool is_minimal_right_ideal(const RightIdealBasis& ideal, Budget budget = {});

/// Every minimal right ideal exactly once, sorted by canonical basis.
/// With ScanScope::socle only elements of the (annihilator) socle are scanned;
/// ScanScope::whole_algebra scans everything and is independent of the
/// radical computation.
std::vector<RightIdealBasis> minimal_right_ideals(const Algebra& algebra, Budget budget = {},
                                                  ScanScope scope = ScanScope::socle);

/// {x : x * y = 0 for all y in ideal}.
Subspace left_annihilator(const Algebra& algebra, const Subspace& ideal);

/// Smallest k with ideal^k = 0; 1 for the zero ideal. Throws InternalError
/// if the ideal is not nilpotent.
std::size_t nilpotency_index(const Algebra& algebra, const Subspace& ideal);

/// x is in J iff 1 - x y is a unit for every y. Costs q^(2 dim) steps.
Subspace radical_by_quasi_regularity(const Algebra& algebra, Budget budget = {});
/// Closed-form radical of the shipped constructions (matrix, triangular,
/// block example, and direct sums / opposites of those); nullopt for raw
/// algebras. The result is checked to be a nilpotent two-sided ideal.
std::optional<Subspace> structural_radical(const Algebra& algebra);
/// Quasi-regularity scan when q^dim <= kRadicalScanLimit, else structural.
RadicalReport jacobson_radical(const Algebra& algebra, Budget budget = {});

SocleReport right_socle(const Algebra& algebra, SocleMethod method = SocleMethod::automatic,
                        Budget budget = {});
/// Computed as the right socle of the opposite algebra; coordinates refer
/// to the shared basis.
SocleReport left_socle(const Algebra& algebra, SocleMethod method = SocleMethod::automatic,
                       Budget budget = {});

/// Finite-dimensional: semiprime iff the Jacobson radical vanishes.
bool is_semiprime(const Algebra& algebra, Budget budget = {});
/// Oracle: no nonzero a with a R a = 0.
bool is_semiprime_by_scan(const Algebra& algebra, Budget budget = {});

/// Length of a composition series of the right module `ideal`, built by
/// repeatedly adjoining a cyclic submodule of least dimension. A seed
/// shuffles the scan order (the result must not depend on it).
std::size_t composition_length(const RightIdealBasis& ideal, Budget budget = {},
                               std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// First idempotent e (in scan order) of a minimal right ideal with eR = I.
std::optional<Element> find_idempotent_generator(const RightIdealBasis& ideal,
                                                 Budget budget = {});

/// Caches the lattice data of one algebra. Thread-safe; each item is
/// computed once on first use.
class IdealLattice {
 public:
  explicit IdealLattice(Algebra algebra, Budget budget = {});

  const Algebra& algebra() const { return algebra_; }
  Budget budget() const { return budget_; }

  const RadicalReport& radical() const;
  /// Right socle via the radical annihilator.
  const Subspace& right_socle() const;
  const std::vector<RightIdealBasis>& minimal_right_ideals() const;
  bool is_semiprime() const;

 private:
  Algebra algebra_;
  Budget budget_;
  detail::Lazy<RadicalReport> radical_;
  detail::Lazy<Subspace> socle_;
  detail::Lazy<std::vector<RightIdealBasis>> minimal_;
};

}  // namespace ringrank
