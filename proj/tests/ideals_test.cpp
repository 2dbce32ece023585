#include "doctest.h"
#include "ringrank/errors.hpp"
#include "ringrank/ideals.hpp"
#include "ringrank/roster.hpp"
#include "support/oracle.hpp"

using namespace ringrank;

namespace {

Subspace span_of(const Algebra& alg, std::initializer_list<const char*> names) {
  std::vector<Vector> gens;
  for (const char* n : names) gens.push_back(alg.named(n).coeffs());
  return Subspace::span(alg.field(), alg.dim(), gens);
}

Subspace coordinate_span(const Algebra& alg, std::vector<std::size_t> idx) {
  std::vector<Vector> gens;
  for (std::size_t i : idx) gens.push_back(alg.basis_element(i).coeffs());
  return Subspace::span(alg.field(), alg.dim(), gens);
}

setoracle::ElementSet as_set(const setoracle::Table& t, const Subspace& s) {
  setoracle::ElementSet out(t.size());
  for_each_vector(s, [&](const Vector& v) {
    out[t.index(t.alg.element(v))] = true;
    return true;
  });
  return out;
}

}  // namespace

TEST_CASE("principal right ideals") {
  const Algebra m2 = make_full_matrix_algebra(2, Field::prime(2));
  CHECK(principal_right_ideal(m2.zero()).dim() == 0);
  CHECK(principal_right_ideal(m2.one()).dim() == 4);
  const RightIdealBasis i = principal_right_ideal(m2.named("E11"));
  CHECK(i.carrier == span_of(m2, {"E11", "E12"}));
  CHECK(i.closed);
  CHECK(i.generator == m2.named("E11"));
  // oracle: E11 * x over all 16 x
  setoracle::Table t(m2);
  CHECK(as_set(t, i.carrier) == t.principal_right(t.index(m2.named("E11"))));
}

TEST_CASE("certify rejects subspaces that are not right ideals") {
  const Algebra m2 = make_full_matrix_algebra(2, Field::prime(2));
  CHECK_THROWS_AS(RightIdealBasis::certify(m2, span_of(m2, {"E11"})), DomainError);
  CHECK_THROWS_AS(RightIdealBasis::certify(m2, span_of(m2, {"E11", "E12"}), m2.named("E22")),
                  DomainError);
  CHECK_NOTHROW(RightIdealBasis::certify(m2, span_of(m2, {"E21", "E22"})));
}

TEST_CASE("minimality") {
  const Algebra m2 = make_full_matrix_algebra(2, Field::prime(2));
  CHECK(is_minimal_right_ideal(RightIdealBasis::certify(m2, span_of(m2, {"E11", "E12"}))));
  CHECK_FALSE(is_minimal_right_ideal(principal_right_ideal(m2.one())));
  CHECK_FALSE(is_minimal_right_ideal(principal_right_ideal(m2.zero())));
  const Algebra t2 = make_triangular_algebra(2, Field::prime(2));
  CHECK(is_minimal_right_ideal(RightIdealBasis::certify(t2, span_of(t2, {"E12"}))));
  CHECK_THROWS_AS(is_minimal_right_ideal(principal_right_ideal(m2.one()), Budget{4}),
                  BudgetExceeded);
}

TEST_CASE("minimal right ideal inventories") {
  const Field f2 = Field::prime(2);
  const Algebra m2 = make_full_matrix_algebra(2, f2);
  const auto m2_ideals = minimal_right_ideals(m2);
  CHECK(m2_ideals.size() == 3);  // q + 1
  for (const auto& i : m2_ideals) CHECK(i.dim() == 2);

  // The three minimal right ideals of T_2(F_2) are the lines of
  // span{E12, E22}: span{E12}, span{E22}, span{E12 + E22}.
  const Algebra t2 = make_triangular_algebra(2, f2);
  const auto t2_ideals = minimal_right_ideals(t2);
  CHECK(t2_ideals.size() == 3);
  for (const auto& i : t2_ideals) {
    CHECK(i.dim() == 1);
    CHECK(span_of(t2, {"E12", "E22"}).contains(i.carrier));
  }

  CHECK(minimal_right_ideals(make_full_matrix_algebra(1, f2)).size() == 1);
  CHECK(minimal_right_ideals(make_full_matrix_algebra(2, Field::prime(3))).size() == 4);
}

TEST_CASE("minimal right ideals agree with the set oracle on the roster") {
  for (const auto& entry : default_roster()) {
    CAPTURE(entry.id);
    setoracle::Table t(entry.algebra);
    std::set<setoracle::ElementSet> expected;
    for (auto& s : t.minimal_right_ideals()) expected.insert(s);
    std::set<setoracle::ElementSet> got, got_whole;
    for (const auto& i : minimal_right_ideals(entry.algebra)) got.insert(as_set(t, i.carrier));
    for (const auto& i : minimal_right_ideals(entry.algebra, {}, ScanScope::whole_algebra)) {
      got_whole.insert(as_set(t, i.carrier));
    }
    CHECK(got == expected);
    CHECK(got_whole == expected);
    CHECK(as_set(t, right_socle(entry.algebra).socle) == t.socle());
  }
}

TEST_CASE("jacobson radical") {
  const Field f2 = Field::prime(2);
  CHECK(jacobson_radical(make_full_matrix_algebra(2, f2)).radical.dim() == 0);
  const Algebra t2 = make_triangular_algebra(2, f2);
  const RadicalReport r = jacobson_radical(t2);
  CHECK(r.radical == span_of(t2, {"E12"}));
  CHECK(r.nilpotency_index == 2);
  const Algebra b12 = make_block_example_algebra({1, 2}, f2);
  const RadicalReport rb = jacobson_radical(b12);
  CHECK(rb.radical.dim() == 4);
  CHECK(rb.radical == coordinate_span(b12, {5, 6, 7, 8}));
  CHECK(rb.radical == *structural_radical(b12));
  CHECK(nilpotency_index(b12, Subspace(f2, b12.dim())) == 1);
}

TEST_CASE("radical agrees with the nil-ideal oracle and the structural form on the roster") {
  for (const auto& entry : default_roster()) {
    CAPTURE(entry.id);
    setoracle::Table t(entry.algebra);
    const Subspace scan = radical_by_quasi_regularity(entry.algebra);
    CHECK(as_set(t, scan) == t.radical());
    const auto structural = structural_radical(entry.algebra);
    REQUIRE(structural);
    CHECK(*structural == scan);
  }
}

TEST_CASE("large algebras use the structural radical") {
  const Algebra b22 = make_block_example_algebra({2, 2}, Field::prime(2));
  const RadicalReport r = jacobson_radical(b22);
  CHECK(r.method == RadicalMethod::structural);
  CHECK(r.radical.dim() == 16);
  CHECK(r.nilpotency_index == 2);
}

TEST_CASE("socles") {
  const Field f2 = Field::prime(2);
  for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 1}}) {
    const Algebra b = make_block_example_algebra({std::size_t(m), std::size_t(n)}, f2);
    const std::size_t a_end = m * m, c_end = a_end + n * n, d = b.dim();
    std::vector<std::size_t> right_idx, left_idx;
    for (std::size_t i = a_end; i < d; ++i) right_idx.push_back(i);
    for (std::size_t i = 0; i < d; ++i) {
      if (i < a_end || i >= c_end) left_idx.push_back(i);
    }
    CHECK(right_socle(b).socle == coordinate_span(b, right_idx));
    CHECK(left_socle(b).socle == coordinate_span(b, left_idx));
  }
  const Algebra m2 = make_full_matrix_algebra(2, f2);
  CHECK(right_socle(m2).socle.dim() == 4);
  const Algebra t2 = make_triangular_algebra(2, f2);
  CHECK(right_socle(t2).socle == span_of(t2, {"E12", "E22"}));
  CHECK(left_socle(t2).socle == span_of(t2, {"E11", "E12"}));
  const SocleReport brute = right_socle(t2, SocleMethod::bruteforce);
  CHECK(brute.method == SocleMethod::bruteforce);
  CHECK(brute.minimal_ideals.size() == 3);
}

TEST_CASE("bruteforce and annihilator socles agree on the roster") {
  for (const auto& entry : default_roster()) {
    CAPTURE(entry.id);
    for (auto side : {&right_socle, &left_socle}) {
      CHECK((*side)(entry.algebra, SocleMethod::bruteforce, {}).socle ==
            (*side)(entry.algebra, SocleMethod::radical_annihilator, {}).socle);
    }
  }
}

TEST_CASE("semiprimeness") {
  const Field f2 = Field::prime(2), f3 = Field::prime(3);
  CHECK(is_semiprime(make_full_matrix_algebra(2, f2)));
  CHECK(is_semiprime(make_full_matrix_algebra(2, f3)));
  CHECK(is_semiprime(direct_sum(make_full_matrix_algebra(2, f3), make_full_matrix_algebra(1, f3))));
  CHECK_FALSE(is_semiprime(make_triangular_algebra(2, f2)));
  CHECK_FALSE(is_semiprime(make_block_example_algebra({1, 2}, f2)));
  for (const auto& entry : default_roster()) {
    CAPTURE(entry.id);
    CHECK(is_semiprime(entry.algebra) == is_semiprime_by_scan(entry.algebra));
  }
}

TEST_CASE("composition length") {
  const Field f2 = Field::prime(2);
  const Algebra m2 = make_full_matrix_algebra(2, f2);
  CHECK(composition_length(principal_right_ideal(m2.zero())) == 0);
  CHECK(composition_length(principal_right_ideal(m2.one())) == 2);
  const Algebra m3 = make_full_matrix_algebra(3, f2);
  const RightIdealBasis i = principal_right_ideal(m3.named("E11") + m3.named("E22"));
  CHECK(composition_length(i) == 2);
  for (std::uint64_t seed = 1; seed < 6; ++seed) CHECK(composition_length(i, {}, seed) == 2);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint32_t p : {2u, 3u}) {
      const Algebra m = make_full_matrix_algebra(n, Field::prime(p));
      CHECK(composition_length(principal_right_ideal(m.one())) == n);
    }
  }
  // T_2: 0 < span{E12} < span{E12,E22} < T_2
  const Algebra t2 = make_triangular_algebra(2, f2);
  CHECK(composition_length(principal_right_ideal(t2.one())) == 3);
}

TEST_CASE("idempotent generators") {
  const Field f2 = Field::prime(2);
  const Algebra m2 = make_full_matrix_algebra(2, f2);
  const auto e = find_idempotent_generator(RightIdealBasis::certify(m2, span_of(m2, {"E11", "E12"})));
  REQUIRE(e);
  CHECK(*e * *e == *e);
  CHECK(principal_right_ideal(*e).carrier == span_of(m2, {"E11", "E12"}));
  const Algebra t2 = make_triangular_algebra(2, f2);
  CHECK_FALSE(find_idempotent_generator(RightIdealBasis::certify(t2, span_of(t2, {"E12"}))));
  const Algebra f3 = make_full_matrix_algebra(1, Field::prime(3));
  CHECK(find_idempotent_generator(principal_right_ideal(f3.one())) == f3.one());
}

TEST_CASE("semiprime roster rings: every minimal ideal has an idempotent generator") {
  for (const auto& entry : default_roster()) {
    if (!is_semiprime(entry.algebra)) continue;
    CAPTURE(entry.id);
    for (const auto& ideal : minimal_right_ideals(entry.algebra)) {
      const auto e = find_idempotent_generator(ideal);
      REQUIRE(e);
      CHECK(principal_right_ideal(*e).carrier == ideal.carrier);
    }
  }
}

TEST_CASE("budgets fail loudly") {
  const Algebra m3 = make_full_matrix_algebra(3, Field::prime(2));
  CHECK_THROWS_AS(minimal_right_ideals(m3, Budget{100}), BudgetExceeded);
  CHECK_THROWS_AS(radical_by_quasi_regularity(m3, Budget{1000}), BudgetExceeded);
  const IdealLattice lattice(m3, Budget{100});
  CHECK_THROWS_AS(lattice.minimal_right_ideals(), BudgetExceeded);
}

TEST_CASE("ideal lattice caches") {
  const Algebra t3 = make_triangular_algebra(3, Field::prime(2));
  const IdealLattice lattice(t3);
  CHECK(&lattice.minimal_right_ideals() == &lattice.minimal_right_ideals());
  CHECK_FALSE(lattice.is_semiprime());
  CHECK(lattice.right_socle() == right_socle(t3).socle);
  CHECK(lattice.radical().radical.dim() == 3);
}
