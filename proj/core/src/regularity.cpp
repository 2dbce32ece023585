#include "ringrank/regularity.hpp"

#include "ringrank/errors.hpp"

namespace ringrank {

namespace {

Vector unit_vector(std::size_t d, std::size_t i, const Field& f) {
  Vector v(d);
  v[i] = f.one();
  return v;
}

// eRe = span{e b_i e}
Subspace corner(const Element& e) {
  const Algebra& alg = e.algebra();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    gens.push_back(alg.multiply(alg.multiply(e.coeffs(), unit_vector(alg.dim(), i, alg.field())),
                                e.coeffs()));
  }
  return Subspace::span(alg.field(), alg.dim(), gens);
}

// y in the corner eRe with x y = e, if any.
std::optional<Element> corner_right_inverse(const Element& x, const Element& e,
                                            const Subspace& corner_space) {
  const Algebra& alg = x.algebra();
  Matrix system(alg.dim(), corner_space.dim());
  for (std::size_t k = 0; k < corner_space.dim(); ++k) {
    Vector xv = alg.multiply(x.coeffs(), corner_space.basis().row(k));
    for (std::size_t j = 0; j < alg.dim(); ++j) system(j, k) = xv[j];
  }
  auto c = solve_linear(alg.field(), system, e.coeffs());
  if (!c) return std::nullopt;
  return alg.element(corner_space.combine(*c));
}

// Some t with z t = target, free variables zero.
std::optional<Element> solve_left_factor(const Element& z, const Element& target) {
  const Algebra& alg = z.algebra();
  auto t = solve_linear(alg.field(), alg.left_mult_matrix(z.coeffs()).transposed(),
                        target.coeffs());
  if (!t) return std::nullopt;
  return alg.element(std::move(*t));
}

void require_idempotent(const Element& e) {
  if (!is_idempotent(e)) throw DomainError("element is not idempotent");
}

}  // namespace

bool is_idempotent(const Element& a) { return a * a == a; }

bool is_nilpotent(const Element& a) {
  Element power = a;
  for (std::size_t k = 1; k < a.algebra().dim() && !power.is_zero(); ++k) power = power * a;
  return power.is_zero();
}

std::optional<Element> is_unit(const Element& a) {
  const Algebra& alg = a.algebra();
  auto x = solve_linear(alg.field(), alg.left_mult_matrix(a.coeffs()).transposed(),
                        alg.unit_coords());
  if (!x) return std::nullopt;
  Element inv = alg.element(std::move(*x));
  if (inv * a != alg.one()) return std::nullopt;
  return inv;
}

bool corner_is_division_ring(const Element& e, Budget budget) {
  require_idempotent(e);
  if (e.is_zero()) return false;
  const Subspace space = corner(e);
  BudgetMeter meter(budget, "corner ring scan");
  meter.charge(space.cardinality());
  const Algebra& alg = e.algebra();
  bool division = true;
  for_each_projective_vector(space, [&](const Vector& v) {
    const Element x = alg.element(v);
    auto y = corner_right_inverse(x, e, space);
    division = y && *y * x == e;
    return division;
  });
  return division;
}

bool is_right_irreducible(const Element& e, Budget budget) {
  require_idempotent(e);
  if (e.is_zero()) throw DomainError("the zero idempotent is not right irreducible");
  return is_minimal_right_ideal(principal_right_ideal(e), budget);
}

std::optional<InnerInverseWitness> find_inner_inverse(const Element& a) {
  const Algebra& alg = a.algebra();
  const std::size_t d = alg.dim();
  // coords(a b a) = coords(b) * M with row i of M = coords(a b_i a)
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Vector row = alg.multiply(alg.multiply(a.coeffs(), unit_vector(d, i, alg.field())), a.coeffs());
    std::copy(row.begin(), row.end(), m.row(i).begin());
  }
  auto b = solve_linear(alg.field(), m.transposed(), a.coeffs());
  if (!b) return std::nullopt;
  Element witness = alg.element(std::move(*b));
  if (a * witness * a != a) throw InternalError("inner inverse failed verification");
  return InnerInverseWitness{std::move(witness)};
}

OrthogonalIdempotentSystem orthogonalize_idempotent_decomposition(const RankEngine& engine,
                                                                  const Element& e) {
  require_idempotent(e);
  if (e.is_zero()) return {};
  MinimalDecomposition dec = engine.minimal_right_decomposition(e);
  const auto& parts = dec.summands;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!is_idempotent(parts[i])) {
      throw InternalError("summand of a minimal right decomposition of an idempotent is not "
                          "idempotent");
    }
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (i != j && !(parts[i] * parts[j]).is_zero()) {
        throw InternalError("summands of a minimal right decomposition of an idempotent are "
                            "not orthogonal");
      }
    }
  }
  return OrthogonalIdempotentSystem{std::move(dec.summands)};
}

UnitCompletion unit_completion(const RankEngine& engine, const Element& e, const Element& r) {
  require_idempotent(e);
  const Algebra& alg = e.algebra();
  const Element one = alg.one();
  const RankValue rank_e = engine.right_rank(e);
  if (!rank_e.is_finite()) throw DomainError("idempotent has infinite right rank");
  const std::size_t n = rank_e.value();
  if (n == 0) return UnitSolution{one, one};

  const Element er = e * r;
  const RankValue rank_er = engine.right_rank(er);
  if (rank_er < rank_e) return RankDrop{rank_er, n};

  // e = e1 + f with e1 of rank one and f of rank n - 1
  OrthogonalIdempotentSystem system = orthogonalize_idempotent_decomposition(engine, e);
  const Element e1 = system.members.front();
  Element f = alg.zero();
  for (std::size_t i = 1; i < system.members.size(); ++i) f += system.members[i];

  UnitCompletion inner = unit_completion(engine, f, r);
  const auto* sub = std::get_if<UnitSolution>(&inner);
  if (!sub) throw InternalError("rank of f r dropped below rank f - 1");
  const Element& x = sub->x;
  const Element& x_inv = sub->x_inv;

  const Element w = e1 * r * x_inv;  // e r x^-1 = w + f
  const Element one_minus_e1 = one - e1;
  const Element nil_part = w * one_minus_e1;  // squares to zero
  const Element h_inv = one - nil_part;       // inverse of 1 + w (1 - e1)

  Element v = alg.zero();
  Element v_inv = alg.zero();
  const Element c = w * e1;
  if (!c.is_zero()) {
    // c is a nonzero element of the division ring e1 R e1
    auto y = corner_right_inverse(c, e1, corner(e1));
    if (!y || *y * c != e1) throw InternalError("no corner inverse in e1 R e1");
    v = w + one_minus_e1;
    // v = (1 + w (1 - e1)) (c + 1 - e1), and (c + 1 - e1)^-1 = y + 1 - e1
    v_inv = (*y + one_minus_e1) * h_inv;
  } else {
    auto t = solve_left_factor(w * (one - e), e1);
    if (!t) throw InternalError("no t with e1 r x^-1 (1 - e) t = e1");
    const Element g = (one - e) * *t * e1;  // squares to zero
    v = w - g + one_minus_e1;
    // v (1 + g) = 1 + w (1 - e1)
    v_inv = (one + g) * h_inv;
  }

  Element u = v * x;
  Element u_inv = x_inv * v_inv;
  if (u * u_inv != one || u_inv * u != one) throw InternalError("unit completion: inverse check failed");
  if (e * u != er) throw InternalError("unit completion: e r != e x");
  return UnitSolution{std::move(u), std::move(u_inv)};
}

UnitRegularResult unit_regular_witness(const RankEngine& engine, const Element& a) {
  UnitRegularResult result;
  result.inner_inverse = find_inner_inverse(a);
  if (!result.inner_inverse) {
    result.failure = WitnessFailure::not_regular;
    return result;
  }
  if (!engine.right_rank(a).is_finite()) {
    result.failure = WitnessFailure::infinite_rank;
    return result;
  }
  const Element e = a * result.inner_inverse->b;
  UnitCompletion completion = unit_completion(engine, e, a);
  auto* sol = std::get_if<UnitSolution>(&completion);
  if (!sol) throw InternalError("rank of e a dropped below rank of a regular element");
  if (!is_idempotent(e) || e * sol->x != a) {
    throw InternalError("unit-regular witness failed verification");
  }
  result.witness = UnitRegularWitness{e, sol->x, sol->x_inv};
  return result;
}

namespace oracle {

std::vector<Element> enumerate_units(const Algebra& algebra, Budget budget) {
  BudgetMeter meter(budget, "unit enumeration");
  meter.charge(algebra.cardinality());
  std::vector<Element> units;
  for_each_element(algebra, [&](const Element& x) {
    if (matrix_rank(algebra.field(), algebra.right_mult_matrix(x.coeffs())) == algebra.dim()) {
      units.push_back(x);
    }
    return true;
  });
  return units;
}

std::optional<Element> find_unit_solution(const Element& a, const Element& r,
                                          const std::vector<Element>& units) {
  const Element target = a * r;
  for (const auto& x : units) {
    if (a * x == target) return x;
  }
  return std::nullopt;
}

}  // namespace oracle

}  // namespace ringrank
