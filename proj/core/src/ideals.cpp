#include "ringrank/ideals.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "ringrank/errors.hpp"

namespace ringrank {

void BudgetMeter::charge(std::uint64_t steps) {
  const std::uint64_t total =
      steps > budget_.max_steps - std::min(used_, budget_.max_steps) ? budget_.max_steps + 1
                                                                     : used_ + steps;
  if (total > budget_.max_steps) {
    throw BudgetExceeded(operation_, used_ + std::min(steps, UINT64_MAX - used_),
                         budget_.max_steps);
  }
  used_ = total;
}

namespace {

Vector unit_vector(std::size_t d, std::size_t i, const Field& f) {
  Vector v(d);
  v[i] = f.one();
  return v;
}

// xR = span{x b_i}: the rows of the left multiplication matrix.
Subspace right_ideal_carrier(const Algebra& alg, std::span<const Scalar> x) {
  return Subspace::span(alg.field(), alg.left_mult_matrix(x));
}

// S + xR
Subspace extend_by_cyclic(const Algebra& alg, const Subspace& s, std::span<const Scalar> x) {
  const std::size_t d = alg.dim();
  Matrix gens(s.dim() + d, d);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    auto r = s.basis().row(i);
    std::copy(r.begin(), r.end(), gens.row(i).begin());
  }
  const Matrix lm = alg.left_mult_matrix(x);
  for (std::size_t i = 0; i < d; ++i) {
    auto r = lm.row(i);
    std::copy(r.begin(), r.end(), gens.row(s.dim() + i).begin());
  }
  return Subspace::span(alg.field(), gens);
}

bool is_two_sided_ideal(const Algebra& alg, const Subspace& s) {
  const std::size_t d = alg.dim();
  for (std::size_t k = 0; k < s.dim(); ++k) {
    Vector x = s.basis_vector(k);
    for (std::size_t i = 0; i < d; ++i) {
      Vector b = unit_vector(d, i, alg.field());
      if (!s.contains(alg.multiply(x, b)) || !s.contains(alg.multiply(b, x))) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> structural_radical_indices(const Algebra& alg) {
  const Construction& c = alg.construction();
  switch (c.kind) {
    case ConstructionKind::matrix:
      return std::vector<std::size_t>{};
    case ConstructionKind::triangular: {
      std::vector<std::size_t> idx;
      std::size_t pos = 0;
      for (std::size_t i = 0; i < c.n; ++i) {
        for (std::size_t j = i; j < c.n; ++j, ++pos) {
          if (i < j) idx.push_back(pos);
        }
      }
      return idx;
    }
    case ConstructionKind::block_example: {
      std::vector<std::size_t> idx;
      const std::size_t first = c.block.m * c.block.m + c.block.n * c.block.n;
      for (std::size_t i = first; i < alg.dim(); ++i) idx.push_back(i);
      return idx;
    }
    case ConstructionKind::direct_sum: {
      auto a = structural_radical_indices(c.parts[0]);
      auto b = structural_radical_indices(c.parts[1]);
      if (!a || !b) return std::nullopt;
      for (auto i : *b) a->push_back(i + c.parts[0].dim());
      return a;
    }
    case ConstructionKind::opposite:
      return structural_radical_indices(c.parts[0]);
    case ConstructionKind::raw:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

RightIdealBasis RightIdealBasis::certify(const Algebra& algebra, Subspace carrier,
                                         std::optional<Element> generator) {
  const std::size_t d = algebra.dim();
  if (carrier.ambient() != d) throw DimensionMismatch("ideal carrier has wrong ambient dimension");
  for (std::size_t k = 0; k < carrier.dim(); ++k) {
    Vector x = carrier.basis_vector(k);
    for (std::size_t i = 0; i < d; ++i) {
      if (!carrier.contains(algebra.multiply(x, unit_vector(d, i, algebra.field())))) {
        throw DomainError("subspace is not closed under right multiplication");
      }
    }
  }
  if (generator && !carrier.contains(generator->coeffs())) {
    throw DomainError("generator does not lie in the ideal");
  }
  return RightIdealBasis{algebra, std::move(carrier), std::move(generator), true};
}

RightIdealBasis principal_right_ideal(const Element& a) {
  const Algebra& alg = a.algebra();
  return RightIdealBasis{alg, right_ideal_carrier(alg, a.coeffs()), a, true};
}

namespace {

bool is_minimal_carrier(const Algebra& alg, const Subspace& carrier, BudgetMeter& meter) {
  if (carrier.dim() == 0) return false;
  meter.charge(carrier.cardinality());
  bool minimal = true;
  for_each_projective_vector(carrier, [&](const Vector& b) {
    if (right_ideal_carrier(alg, b).dim() != carrier.dim()) minimal = false;
    return minimal;
  });
  return minimal;
}

std::vector<RightIdealBasis> enumerate_minimal_ideals(const Algebra& algebra,
                                                     const Subspace& space, BudgetMeter& meter) {
  meter.charge(space.cardinality());
  std::map<Subspace, Vector> minimal;  // carrier -> first generator seen
  std::set<Subspace> not_minimal;
  for_each_projective_vector(space, [&](const Vector& v) {
    Subspace ideal = right_ideal_carrier(algebra, v);
    if (minimal.contains(ideal) || not_minimal.contains(ideal)) return true;
    for (const auto& entry : minimal) {
      if (ideal.contains(entry.first)) {  // properly contains a minimal ideal
        not_minimal.insert(std::move(ideal));
        return true;
      }
    }
    if (is_minimal_carrier(algebra, ideal, meter)) {
      minimal.emplace(std::move(ideal), v);
    } else {
      not_minimal.insert(std::move(ideal));
    }
    return true;
  });
  std::vector<RightIdealBasis> out;
  out.reserve(minimal.size());
  for (auto& [carrier, gen] : minimal) {
    out.push_back(RightIdealBasis{algebra, carrier, algebra.element(gen), true});
  }
  return out;
}

}  // namespace

bool is_minimal_right_ideal(const RightIdealBasis& ideal, Budget budget) {
  if (!ideal.closed) throw DomainError("ideal is not certified closed");
  BudgetMeter meter(budget, "minimality scan");
  return is_minimal_carrier(ideal.algebra, ideal.carrier, meter);
}

std::vector<RightIdealBasis> minimal_right_ideals(const Algebra& algebra, Budget budget,
                                                  ScanScope scope) {
  BudgetMeter meter(budget, "minimal right ideal enumeration");
  const Subspace space = scope == ScanScope::socle
                             ? right_socle(algebra, SocleMethod::radical_annihilator, budget).socle
                             : Subspace::whole(algebra.field(), algebra.dim());
  return enumerate_minimal_ideals(algebra, space, meter);
}

Subspace left_annihilator(const Algebra& algebra, const Subspace& ideal) {
  const std::size_t d = algebra.dim();
  if (ideal.dim() == 0) return Subspace::whole(algebra.field(), d);
  // x * y_k = 0 for every basis vector y_k  <=>  x * [R(y_1) | ... | R(y_k)] = 0
  Matrix stacked(d, d * ideal.dim());
  for (std::size_t k = 0; k < ideal.dim(); ++k) {
    const Matrix rm = algebra.right_mult_matrix(ideal.basis().row(k));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) stacked(i, k * d + j) = rm(i, j);
  }
  return Subspace::span(algebra.field(), null_space(algebra.field(), stacked.transposed()));
}

std::size_t nilpotency_index(const Algebra& algebra, const Subspace& ideal) {
  Subspace power = ideal;
  for (std::size_t k = 1; k <= algebra.dim() + 1; ++k) {
    if (power.dim() == 0) return k;
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < power.dim(); ++i) {
      for (std::size_t j = 0; j < ideal.dim(); ++j) {
        gens.push_back(algebra.multiply(power.basis().row(i), ideal.basis().row(j)));
      }
    }
    power = Subspace::span(algebra.field(), algebra.dim(), gens);
  }
  throw InternalError("ideal is not nilpotent");
}

Subspace radical_by_quasi_regularity(const Algebra& algebra, Budget budget) {
  BudgetMeter meter(budget, "quasi-regularity radical scan");
  const std::uint64_t n = algebra.cardinality();
  meter.charge(n);
  meter.charge(n > UINT64_MAX / n ? UINT64_MAX : n * (n - 1));

  const Field& f = algebra.field();
  const std::size_t d = algebra.dim();
  std::vector<bool> unit(n, false);
  for (std::uint64_t i = 0; i < n; ++i) {
    const Element x = element_at(algebra, i);
    unit[i] = matrix_rank(f, algebra.right_mult_matrix(x.coeffs())) == d;
  }
  const Element one = algebra.one();
  std::vector<Vector> members;
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Element x = element_at(algebra, i);
    bool quasi_regular = true;
    for (std::uint64_t j = 0; j < n && quasi_regular; ++j) {
      quasi_regular = unit[element_index(one - x * element_at(algebra, j))];
    }
    if (quasi_regular) {
      members.push_back(x.coeffs());
      ++count;
    }
  }
  Subspace radical = Subspace::span(f, d, members);
  if (radical.cardinality() != count) {
    throw InternalError("quasi-regular elements do not form a subspace");
  }
  return radical;
}

std::optional<Subspace> structural_radical(const Algebra& algebra) {
  auto idx = structural_radical_indices(algebra);
  if (!idx) return std::nullopt;
  std::vector<Vector> gens;
  for (auto i : *idx) gens.push_back(unit_vector(algebra.dim(), i, algebra.field()));
  Subspace radical = Subspace::span(algebra.field(), algebra.dim(), gens);
  if (!is_two_sided_ideal(algebra, radical)) {
    throw InternalError("closed-form radical of " + algebra.description() +
                        " is not a two-sided ideal");
  }
  nilpotency_index(algebra, radical);  // throws if not nilpotent
  return radical;
}

RadicalReport jacobson_radical(const Algebra& algebra, Budget budget) {
  const std::uint64_t n = algebra.cardinality();
  const bool scan_allowed = n <= kRadicalScanLimit && n * n <= budget.max_steps;
  if (!scan_allowed) {
    if (auto s = structural_radical(algebra)) {
      const std::size_t index = nilpotency_index(algebra, *s);
      return RadicalReport{std::move(*s), index, RadicalMethod::structural};
    }
  }
  Subspace radical = radical_by_quasi_regularity(algebra, budget);
  const std::size_t index = nilpotency_index(algebra, radical);
  return RadicalReport{std::move(radical), index, RadicalMethod::quasi_regularity_scan};
}

SocleReport right_socle(const Algebra& algebra, SocleMethod method, Budget budget) {
  SocleReport report{Side::right, Subspace(algebra.field(), algebra.dim()), {}, method};
  auto bruteforce = [&] {
    report.minimal_ideals = minimal_right_ideals(algebra, budget, ScanScope::whole_algebra);
    Subspace total(algebra.field(), algebra.dim());
    for (const auto& ideal : report.minimal_ideals) total = sum(total, ideal.carrier);
    return total;
  };
  if (method == SocleMethod::bruteforce) {
    report.socle = bruteforce();
    return report;
  }
  report.socle = left_annihilator(algebra, jacobson_radical(algebra, budget).radical);
  report.method = SocleMethod::radical_annihilator;
  if (method == SocleMethod::automatic && algebra.cardinality() <= budget.max_steps) {
    try {
      Subspace check = bruteforce();
      if (check != report.socle) {
        throw InternalError("bruteforce and annihilator socles disagree for " +
                            algebra.description());
      }
    } catch (const BudgetExceeded&) {
      report.minimal_ideals.clear();
    }
  }
  return report;
}

SocleReport left_socle(const Algebra& algebra, SocleMethod method, Budget budget) {
  SocleReport report = right_socle(opposite(algebra), method, budget);
  report.side = Side::left;
  return report;
}

bool is_semiprime(const Algebra& algebra, Budget budget) {
  return jacobson_radical(algebra, budget).radical.dim() == 0;
}

bool is_semiprime_by_scan(const Algebra& algebra, Budget budget) {
  BudgetMeter meter(budget, "semiprime scan");
  meter.charge(algebra.cardinality());
  const Subspace whole = Subspace::whole(algebra.field(), algebra.dim());
  const std::size_t d = algebra.dim();
  bool semiprime = true;
  for_each_projective_vector(whole, [&](const Vector& a) {
    bool annihilates = true;
    for (std::size_t i = 0; i < d && annihilates; ++i) {
      Vector aba = algebra.multiply(algebra.multiply(a, unit_vector(d, i, algebra.field())), a);
      annihilates = is_zero(aba);
    }
    if (annihilates) semiprime = false;
    return semiprime;
  });
  return semiprime;
}

std::size_t composition_length(const RightIdealBasis& ideal, Budget budget,
                               std::optional<std::uint64_t> shuffle_seed) {
  const Algebra& alg = ideal.algebra;
  const Field& f = alg.field();
  BudgetMeter meter(budget, "composition series search");
  std::optional<std::mt19937_64> rng;
  if (shuffle_seed) rng.emplace(*shuffle_seed);

  Subspace current(f, alg.dim());
  std::size_t length = 0;
  while (current.dim() < ideal.carrier.dim()) {
    // complement of `current` inside the ideal
    std::vector<Vector> complement;
    Subspace spanned = current;
    for (std::size_t i = 0; i < ideal.carrier.dim(); ++i) {
      Vector v = ideal.carrier.basis_vector(i);
      if (spanned.contains(v)) continue;
      complement.push_back(v);
      spanned = sum(spanned, Subspace::span(f, alg.dim(), std::span<const Vector>(&v, 1)));
    }
    const Subspace reps = Subspace::span(f, alg.dim(), complement);
    meter.charge(reps.cardinality());

    std::vector<Vector> candidates;
    for_each_projective_vector(reps, [&](const Vector& v) {
      candidates.push_back(v);
      return true;
    });
    if (rng) std::shuffle(candidates.begin(), candidates.end(), *rng);

    std::optional<Subspace> best;
    for (const Vector& v : candidates) {
      Subspace next = extend_by_cyclic(alg, current, v);
      if (!best || next.dim() < best->dim()) best = std::move(next);
      if (best->dim() == current.dim() + 1) break;
    }
    current = std::move(*best);
    ++length;
  }
  return length;
}

std::optional<Element> find_idempotent_generator(const RightIdealBasis& ideal, Budget budget) {
  BudgetMeter meter(budget, "idempotent generator scan");
  meter.charge(ideal.carrier.cardinality());
  const Algebra& alg = ideal.algebra;
  std::optional<Element> found;
  for_each_vector(ideal.carrier, [&](const Vector& v) {
    if (is_zero(v)) return true;
    if (alg.multiply(v, v) == v && right_ideal_carrier(alg, v) == ideal.carrier) {
      found = alg.element(v);
      return false;
    }
    return true;
  });
  return found;
}

// --- IdealLattice -----------------------------------------------------------

IdealLattice::IdealLattice(Algebra algebra, Budget budget)
    : algebra_(std::move(algebra)), budget_(budget) {}

const RadicalReport& IdealLattice::radical() const {
  return radical_.get([&] { return jacobson_radical(algebra_, budget_); });
}

const Subspace& IdealLattice::right_socle() const {
  return socle_.get([&] { return left_annihilator(algebra_, radical().radical); });
}

const std::vector<RightIdealBasis>& IdealLattice::minimal_right_ideals() const {
  return minimal_.get([&] {
    BudgetMeter meter(budget_, "minimal right ideal enumeration");
    return enumerate_minimal_ideals(algebra_, right_socle(), meter);
  });
}

bool IdealLattice::is_semiprime() const { return radical().radical.dim() == 0; }

}  // namespace ringrank
