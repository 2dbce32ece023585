// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any gating
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <variant>

#include "ringrank/errors.hpp"
#include "ringrank/rank.hpp"
#include "ringrank/regularity.hpp"
#include "ringrank/reproduce.hpp"
#include "ringrank/roster.hpp"
#include "ringrank/verify.hpp"

using namespace ringrank;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

class Failures {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && count_++ < 5) notes_ << (notes_.tellp() > 0 ? "; " : "") << what;
  }
  Outcome outcome(std::string summary) const {
    if (count_ == 0) return {true, std::move(summary)};
    return {false, std::to_string(count_) + " failures: " + notes_.str()};
  }

 private:
  std::size_t count_ = 0;
  std::ostringstream notes_;
};

std::size_t echelon_rank(const Element& a) {
  return matrix_rank(a.algebra().field(), *a.algebra().render(a.coeffs()));
}

Algebra roster_ring(const char* id) { return roster_entry(id)->algebra; }

Outcome matrix_rank_agreement() {
  Failures f;
  std::size_t cases = 0;
  for (const char* id : {"m2f2", "m2f3"}) {
    RankEngine engine(roster_ring(id));
    for_each_element(engine.algebra(), [&](const Element& a) {
      const RankValue want = RankValue::finite(echelon_rank(a));
      f.expect(engine.right_rank(a) == want && engine.left_rank(a) == want,
               std::string(id) + " element " + std::to_string(element_index(a)));
      ++cases;
      return true;
    });
  }
  RankEngine m3(roster_ring("m3f2"));
  std::mt19937_64 rng(20240601);
  for (int t = 0; t < 200; ++t) {
    const Element a = element_at(m3.algebra(), rng() % m3.algebra().cardinality());
    const RankValue want = RankValue::finite(echelon_rank(a));
    f.expect(m3.right_rank(a) == want && m3.left_rank(a) == want,
             "m3f2 element " + std::to_string(element_index(a)));
    ++cases;
  }
  return f.outcome(std::to_string(cases) + " elements");
}

Outcome block_example_table() {
  Failures f;
  for (auto [m, n, q] : {std::tuple{1, 1, 2}, {1, 2, 2}, {2, 1, 2}, {1, 1, 3}}) {
    ReproduceOptions opts;
    opts.m = m;
    opts.n = n;
    opts.q = q;
    const ReproduceReport r = reproduce_block_example(opts);
    for (const auto& row : r.rows) {
      f.expect(row.match, "(" + std::to_string(m) + "," + std::to_string(n) + "," +
                              std::to_string(q) + ") " + row.quantity + " = " + row.computed);
    }
  }
  return f.outcome("4 parameter sets, 8 entries each");
}

Outcome block_example_stretch() {
  ReproduceOptions opts;
  opts.m = 2;
  opts.n = 2;
  opts.q = 2;
  opts.fastpath = true;
  const ReproduceReport r = reproduce_block_example(opts);
  Failures f;
  for (const auto& row : r.rows) f.expect(row.match, row.quantity + " = " + row.computed);
  return f.outcome("(2,2,2) via fast path");
}

bool witness_verifies(const RankEngine& engine, const Element& a) {
  const UnitRegularResult res = unit_regular_witness(engine, a);
  if (!res.witness) return false;
  const auto& w = *res.witness;
  const Element one = a.algebra().one();
  return w.e * w.e == w.e && w.u * w.u_inv == one && w.u_inv * w.u == one && w.e * w.u == a;
}

Outcome socle_unit_regularity() {
  Failures f;
  std::size_t cases = 0;
  for (const auto& entry : default_roster()) {
    RankEngine engine(entry.algebra);
    if (!engine.is_semiprime() || entry.algebra.cardinality() > 1024) continue;
    for_each_element(entry.algebra, [&](const Element& a) {
      if (!engine.in_right_socle(a)) return true;
      f.expect(witness_verifies(engine, a), entry.id + " element " + std::to_string(element_index(a)));
      ++cases;
      return true;
    });
  }
  for (const char* id : {"m3f2", "m2f3"}) {
    RankEngine engine(roster_ring(id));
    std::mt19937_64 rng(4242);
    for (int t = 0; t < 500; ++t) {
      const Element a = element_at(engine.algebra(), rng() % engine.algebra().cardinality());
      f.expect(engine.in_right_socle(a) && witness_verifies(engine, a),
               std::string(id) + " sample " + std::to_string(element_index(a)));
      ++cases;
    }
  }
  return f.outcome(std::to_string(cases) + " socle elements");
}

Outcome constructive_vs_oracle() {
  Failures f;
  std::size_t completions = 0, pairs = 0;
  for (const char* id : {"m2f2", "m2f3"}) {
    const Algebra alg = roster_ring(id);
    RankEngine engine(alg);
    const auto units = oracle::enumerate_units(alg);
    std::vector<Element> xs;
    for_each_element(alg, [&](const Element& x) {
      xs.push_back(x);
      return true;
    });
    for (const auto& e : xs) {
      if (!is_idempotent(e)) continue;
      const RankValue n = engine.right_rank(e);
      for (const auto& r : xs) {
        const bool full = engine.right_rank(e * r) == n;
        const UnitCompletion out = unit_completion(engine, e, r);
        if (const auto* s = std::get_if<UnitSolution>(&out)) {
          const Element one = alg.one();
          f.expect(full && s->x * s->x_inv == one && s->x_inv * s->x == one && e * r == e * s->x,
                   std::string(id) + " completion e=" + std::to_string(element_index(e)) +
                       " r=" + std::to_string(element_index(r)));
          f.expect(oracle::find_unit_solution(e, r, units).has_value(),
                   std::string(id) + " oracle disagrees");
          ++completions;
        } else {
          f.expect(!full, std::string(id) + " spurious rank drop");
        }
      }
    }
    for (const auto& a : xs) {
      const RankValue n = engine.right_rank(a);
      for (const auto& r : xs) {
        f.expect(engine.right_rank(a * r) < n || oracle::find_unit_solution(a, r, units).has_value(),
                 std::string(id) + " dichotomy a=" + std::to_string(element_index(a)) +
                     " r=" + std::to_string(element_index(r)));
        ++pairs;
      }
    }
  }
  return f.outcome(std::to_string(completions) + " verified completions, " + std::to_string(pairs) +
                   " dichotomy pairs");
}

Outcome non_regular_counterexample() {
  Failures f;
  for (std::uint32_t p : {2u, 3u}) {
    const Algebra t2 = make_triangular_algebra(2, Field::prime(p));
    RankEngine engine(t2);
    const Element a = t2.named("E12");
    const std::string tag = "T_2(F_" + std::to_string(p) + ") ";
    f.expect(engine.in_right_socle(a) && engine.in_left_socle(a), tag + "E12 not in both socles");
    f.expect(engine.right_rank(a) == RankValue::finite(1), tag + "right rank");
    f.expect(engine.left_rank(a) == RankValue::finite(1), tag + "left rank");
    f.expect(!find_inner_inverse(a), tag + "inner inverse found");
    f.expect(!unit_regular_witness(engine, a).witness, tag + "witness found");
  }
  return f.outcome("E12 in T_2(F_2) and T_2(F_3)");
}

Outcome counterexample_suite() {
  Failures f;
  const Algebra m3 = roster_ring("m3f2");
  f.expect(right_rank(m3.named("E13") + m3.named("E23")) == RankValue::finite(1),
           "E13+E23 rank");
  for (const char* id : {"m2f2", "m2f3"}) {
    const Algebra m2 = roster_ring(id);
    const Element a = m2.named("E11") + m2.named("E12") + m2.named("E22");
    std::vector<Element> xs;
    for_each_element(m2, [&](const Element& x) {
      xs.push_back(x);
      return true;
    });
    for (const auto& x : xs) {
      for (const auto& y : xs) {
        const bool split = x + y == a && !x.is_zero() && !y.is_zero() && (x * y).is_zero() &&
                           (y * x).is_zero();
        f.expect(!split, std::string(id) + " orthogonal splitting of E11+E12+E22");
      }
    }
  }
  const Algebra m2 = roster_ring("m2f3");
  RankEngine engine(m2);
  const Element e11 = m2.named("E11"), e12 = m2.named("E12");
  const Element two_e22 = m2.named("E22").scaled(m2.field().from_integer(2));
  const Element b = e11 + two_e22;
  const RankValue one = RankValue::finite(1);
  f.expect(engine.right_rank(b) == RankValue::finite(2), "rank of E11+2E22");
  f.expect(engine.right_rank(e11) == one && engine.right_rank(two_e22) == one &&
               (e11 * two_e22).is_zero() && (two_e22 * e11).is_zero(),
           "orthogonal decomposition of E11+2E22");
  const Element x = e11 + e12, y = two_e22 - e12;
  f.expect(x + y == b && engine.right_rank(x) == one && engine.right_rank(y) == one &&
               !(x * y).is_zero(),
           "non-orthogonal decomposition of E11+2E22");
  return f.outcome("rank-1 nilpotent sum, non-orthogonalizable A, two decompositions of B");
}

Outcome property_suites() {
  VerifyOptions opts;
  opts.suites = {"S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8", "S9"};
  opts.seed = 7;
  const VerificationReport report = run_verification(default_roster(), opts);
  Failures f;
  std::size_t pass = 0, skipped = 0;
  for (const auto& rec : report.records) {
    if (rec.status == CheckStatus::fail || rec.budget_exhausted) {
      f.expect(false, rec.to_line());
    } else if (rec.status == CheckStatus::skipped) {
      ++skipped;
    } else {
      ++pass;
    }
  }
  return f.outcome(std::to_string(pass) + " checks passed, " + std::to_string(skipped) +
                   " skipped by precondition");
}

Outcome oracle_cross_checks() {
  Failures f;
  std::size_t rings = 0;
  for (const auto& entry : default_roster()) {
    const Algebra& alg = entry.algebra;
    if (alg.cardinality() > (std::uint64_t{1} << 13)) continue;
    ++rings;
    const auto structural = structural_radical(alg);
    f.expect(structural && *structural == radical_by_quasi_regularity(alg), entry.id + " radical");
    f.expect(right_socle(alg, SocleMethod::bruteforce).socle ==
                 right_socle(alg, SocleMethod::radical_annihilator).socle,
             entry.id + " right socle");
    f.expect(left_socle(alg, SocleMethod::bruteforce).socle ==
                 left_socle(alg, SocleMethod::radical_annihilator).socle,
             entry.id + " left socle");
  }
  return f.outcome(std::to_string(rings) + " roster rings");
}

struct Criterion {
  std::string id;
  std::string name;
  double limit_seconds;
  bool gating;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1", "matrix rank agreement", 10, true, matrix_rank_agreement},
      {"2", "block example rank table and socles", 60, true, block_example_table},
      {"2s", "block example (2,2,2) fast path (non-gating)", 300, false, block_example_stretch},
      {"3", "socle unit-regularity", 60, true, socle_unit_regularity},
      {"4", "constructive unit completion vs oracle", 120, true, constructive_vs_oracle},
      {"5", "non-regular socle element", 10, true, non_regular_counterexample},
      {"6", "counterexample suite", 30, true, counterexample_suite},
      {"7", "property suites S1-S9 on the default roster", 300, true, property_suites},
      {"8", "radical and socle oracle cross-checks", 60, true, oracle_cross_checks},
  };
  bool all_ok = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      out.ok = false;
      out.note += " (over time limit)";
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (out.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " | "
         << out.note << " | " << secs << " s of " << c.limit_seconds << " s";
    std::cout << line.str() << std::endl;
    if (c.gating && !out.ok) all_ok = false;
  }
  return all_ok ? 0 : 1;
}
