#include "ringrank/rank.hpp"

#include <algorithm>

#include "ringrank/errors.hpp"

namespace ringrank {

std::size_t RankValue::value() const {
  if (!value_) throw DomainError("rank is infinite");
  return *value_;
}

RankValue operator+(const RankValue& a, const RankValue& b) {
  if (!a.is_finite() || !b.is_finite()) return RankValue::infinite();
  return RankValue::finite(a.value() + b.value());
}

RankEngine::RankEngine(Algebra algebra, RankOptions options)
    : algebra_(algebra), options_(options), lattice_(std::move(algebra), options.budget) {
  seen_.insert(Subspace(algebra_.field(), algebra_.dim()));
}

RankEngine::~RankEngine() = default;

void RankEngine::check_owner(const Element& a) const {
  if (!(a.algebra() == algebra_)) {
    throw AlgebraMismatch("element of " + a.algebra().description() +
                          " passed to rank engine of " + algebra_.description());
  }
}

bool RankEngine::in_right_socle(const Element& a) const {
  check_owner(a);
  return lattice_.right_socle().contains(a.coeffs());
}

bool RankEngine::in_left_socle(const Element& a) const {
  check_owner(a);
  const RankEngine& op = opposite_engine();
  return op.lattice().right_socle().contains(a.coeffs());
}

const RankEngine& RankEngine::opposite_engine() const {
  std::call_once(opposite_once_, [&] {
    opposite_ = std::make_unique<RankEngine>(opposite(algebra_), options_);
  });
  return *opposite_;
}

RankValue RankEngine::right_rank(const Element& a) const {
  check_owner(a);
  switch (options_.method) {
    case RankMethod::sum_search:
      return right_rank_by_sum_search(a);
    case RankMethod::composition_length:
      return right_rank_by_length(a);
    case RankMethod::automatic:
      break;
  }
  if (!is_semiprime()) return right_rank_by_sum_search(a);
  const RankValue fast = right_rank_by_length(a);
  if (options_.cross_check) {
    std::optional<RankValue> slow;
    try {
      slow = right_rank_by_sum_search(a);
    } catch (const BudgetExceeded&) {
    }
    if (slow && *slow != fast) {
      throw InternalError("composition length and ideal-sum rank disagree on an element of " +
                          algebra_.description());
    }
  }
  return fast;
}

RankValue RankEngine::left_rank(const Element& a) const {
  check_owner(a);
  const RankEngine& op = opposite_engine();
  return op.right_rank(op.algebra().element(a.coeffs()));
}

RankValue RankEngine::right_rank_by_length(const Element& a) const {
  check_owner(a);
  if (a.is_zero()) return RankValue::finite(0);
  if (!in_right_socle(a)) return RankValue::infinite();
  return RankValue::finite(composition_length(principal_right_ideal(a), options_.budget));
}

RankValue RankEngine::right_rank_by_sum_search(const Element& a) const {
  check_owner(a);
  if (a.is_zero()) return RankValue::finite(0);
  if (!in_right_socle(a)) return RankValue::infinite();
  auto hit = search(a);
  if (!hit) throw InternalError("socle element not reached by sums of minimal right ideals");
  return RankValue::finite(hit->depth);
}

bool RankEngine::extend_levels(std::size_t depth) const {
  const auto& ideals = lattice_.minimal_right_ideals();
  while (levels_.size() < depth && !exhausted_) {
    std::map<Subspace, IdealTuple> next;
    if (levels_.empty()) {
      for (std::size_t i = 0; i < ideals.size(); ++i) next.emplace(ideals[i].carrier, IdealTuple{i});
    } else {
      for (const auto& [space, tuple] : levels_.back()) {
        for (std::size_t j = 0; j < ideals.size(); ++j) {
          if (std::binary_search(tuple.begin(), tuple.end(), j)) continue;
          Subspace grown = sum(space, ideals[j].carrier);
          if (seen_.contains(grown)) continue;
          IdealTuple t = tuple;
          t.insert(std::upper_bound(t.begin(), t.end(), j), j);
          auto [it, inserted] = next.try_emplace(std::move(grown), t);
          if (!inserted && t < it->second) it->second = std::move(t);
        }
      }
    }
    if (next.empty()) {
      exhausted_ = true;
      break;
    }
    for (const auto& entry : next) seen_.insert(entry.first);
    levels_.push_back(std::move(next));
  }
  return levels_.size() >= depth;
}

std::optional<RankEngine::Hit> RankEngine::search(const Element& a) const {
  std::lock_guard lock(mutex_);
  for (std::size_t depth = 1; extend_levels(depth); ++depth) {
    const IdealTuple* best = nullptr;
    for (const auto& [space, tuple] : levels_[depth - 1]) {
      if (space.contains(a.coeffs()) && (!best || tuple < *best)) best = &tuple;
    }
    if (best) return Hit{depth, *best};
  }
  return std::nullopt;
}

MinimalDecomposition RankEngine::minimal_right_decomposition(const Element& a) const {
  check_owner(a);
  if (a.is_zero()) throw DomainError("the zero element has no minimal right decomposition");
  if (!in_right_socle(a)) throw DomainError("element of infinite right rank");
  auto hit = search(a);
  if (!hit) throw InternalError("socle element not reached by sums of minimal right ideals");

  const auto& ideals = lattice_.minimal_right_ideals();
  const Field& f = algebra_.field();
  const std::size_t d = algebra_.dim();
  std::size_t cols = 0;
  for (auto i : hit->ideals) cols += ideals[i].dim();
  Matrix system(d, cols);
  std::size_t col = 0;
  for (auto i : hit->ideals) {
    const Subspace& k = ideals[i].carrier;
    for (std::size_t r = 0; r < k.dim(); ++r, ++col) {
      for (std::size_t j = 0; j < d; ++j) system(j, col) = k.basis()(r, j);
    }
  }
  auto x = solve_linear(f, system, a.coeffs());
  if (!x) throw InternalError("element not in the sum of its witness ideals");

  MinimalDecomposition out;
  col = 0;
  Element total = algebra_.zero();
  for (auto i : hit->ideals) {
    const Subspace& k = ideals[i].carrier;
    Vector coords(x->begin() + static_cast<std::ptrdiff_t>(col),
                  x->begin() + static_cast<std::ptrdiff_t>(col + k.dim()));
    col += k.dim();
    Element part = algebra_.element(k.combine(coords));
    if (part.is_zero()) throw InternalError("zero summand in a minimal right decomposition");
    total += part;
    out.summands.push_back(std::move(part));
    out.witness_ideals.push_back(ideals[i]);
  }
  if (total != a) throw InternalError("minimal right decomposition does not sum to the element");
  return out;
}

RankValue right_rank(const Element& a, RankOptions options) {
  return RankEngine(a.algebra(), options).right_rank(a);
}

RankValue left_rank(const Element& a, RankOptions options) {
  return RankEngine(a.algebra(), options).left_rank(a);
}

MinimalDecomposition minimal_right_decomposition(const Element& a, RankOptions options) {
  return RankEngine(a.algebra(), options).minimal_right_decomposition(a);
}

}  // namespace ringrank
