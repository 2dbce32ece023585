#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ringrank/algebra.hpp"
#include "ringrank/ideals.hpp"
#include "ringrank/rank.hpp"

namespace ringrank {

/// b with a b a = a.
struct InnerInverseWitness {
  Element b;
};

/// a = e u with e idempotent and u a unit.
struct UnitRegularWitness {
  Element e;
  Element u;
  Element u_inv;
};

/// Pairwise orthogonal idempotents (e_i e_j = 0 for i != j).
struct OrthogonalIdempotentSystem {
  std::vector<Element> members;
};

/// A unit x with e r = e x, together with its inverse.
struct UnitSolution {
  Element x;
  Element x_inv;
};

/// Returned when rank(e r) < rank(e), the other horn of the dichotomy.
struct RankDrop {
  RankValue rank_of_product;
  std::size_t rank_of_idempotent;
};

using UnitCompletion = std::variant<UnitSolution, RankDrop>;

enum class WitnessFailure { not_regular, infinite_rank };

struct UnitRegularResult {
  std::optional<InnerInverseWitness> inner_inverse;
  std::optional<UnitRegularWitness> witness;
  std::optional<WitnessFailure> failure;
};

bool is_idempotent(const Element& a);
bool is_nilpotent(const Element& a);
/// The two-sided inverse of a, if a is a unit.
std::optional<Element> is_unit(const Element& a);

/// Whether eRe is a division ring (every nonzero x in eRe has y in eRe with
/// x y = y x = e). Scans the projective points of eRe.
bool corner_is_division_ring(const Element& e, Budget budget = {});

/// Whether the idempotent e generates a minimal right ideal.
bool is_right_irreducible(const Element& e, Budget budget = {});

/// Solves a b a = a (linear in b); free variables zero.
std::optional<InnerInverseWitness> find_inner_inverse(const Element& a);

/// Splits an idempotent of finite right rank into the summands of its
/// minimal right decomposition and checks that they form an orthogonal
/// system of idempotents (an InternalError otherwise).
OrthogonalIdempotentSystem orthogonalize_idempotent_decomposition(const RankEngine& engine,
                                                                  const Element& e);

/// For an idempotent e of finite right rank n: a verified unit x with
/// e r = e x when rank(e r) = n, else RankDrop. Built by peeling one rank-one
/// idempotent e_1 off e = e_1 + f, recursing on f, and then correcting with
/// an explicit invertible factor (corner inverse or a solution t of
/// e_1 r x^-1 (1 - e) t = e_1).
UnitCompletion unit_completion(const RankEngine& engine, const Element& e, const Element& r);

/// e = a b from an inner inverse, then x = unit_completion(e, a); every
/// equation is re-verified. No witness when a is not regular or has infinite
/// right rank.
UnitRegularResult unit_regular_witness(const RankEngine& engine, const Element& a);

namespace oracle {

/// Every unit of the algebra, in element order. Throws BudgetExceeded when
/// the algebra has more than `budget` elements.
std::vector<Element> enumerate_units(const Algebra& algebra, Budget budget = {});

/// First unit x (in element order) with a r = a x, by exhaustive search.
std::optional<Element> find_unit_solution(const Element& a, const Element& r,
                                          const std::vector<Element>& units);

}  // namespace oracle

}  // namespace ringrank
