#include "ringrank/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "ringrank/element_literal.hpp"
#include "ringrank/errors.hpp"
#include "ringrank/rank.hpp"
#include "ringrank/regularity.hpp"

namespace ringrank {

namespace {

constexpr std::uint64_t kElementLimit = std::uint64_t{1} << 10;

std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 14695981039346656037ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct CheckFailed {
  std::string detail;
  std::vector<std::pair<std::string, std::string>> counterexample;
};

struct CheckSkipped {
  std::string reason;
};

/// Handle passed to a check body.
class Check {
 public:
  std::uint64_t cases = 0;

  void require(bool ok, std::string detail,
               std::vector<std::pair<std::string, const Element*>> witnesses = {}) {
    ++cases;
    if (ok) return;
    CheckFailed f{std::move(detail), {}};
    for (auto& [name, x] : witnesses) f.counterexample.emplace_back(name, format_element(*x));
    throw f;
  }
  [[noreturn]] void skip(std::string reason) { throw CheckSkipped{std::move(reason)}; }
};

class Context {
 public:
  Context(const RosterEntry& ring, const VerifyOptions& options)
      : ring_(ring),
        options_(options),
        alg_(ring.algebra),
        engine_(ring.algebra, RankOptions{options.budget, RankMethod::automatic, true}) {}

  const std::string& id() const { return ring_.id; }
  const Algebra& alg() const { return alg_; }
  const RankEngine& engine() const { return engine_; }
  const VerifyOptions& options() const { return options_; }
  std::vector<CheckRecord>& records() { return records_; }

  bool semiprime() const { return engine_.is_semiprime(); }

  RankValue rr(const Element& a) {
    auto it = right_.find(a.coeffs());
    if (it == right_.end()) it = right_.emplace(a.coeffs(), engine_.right_rank(a)).first;
    return it->second;
  }
  RankValue lr(const Element& a) {
    auto it = left_.find(a.coeffs());
    if (it == left_.end()) it = left_.emplace(a.coeffs(), engine_.left_rank(a)).first;
    return it->second;
  }

  std::mt19937_64 rng(std::string_view suite, std::string_view check) const {
    const std::uint64_t h = fnv1a(check, fnv1a(suite, fnv1a(ring_.id)));
    std::seed_seq seq{static_cast<std::uint32_t>(options_.seed),
                      static_cast<std::uint32_t>(options_.seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    return std::mt19937_64(seq);
  }

  Element random_element(std::mt19937_64& rng) const {
    const std::uint64_t card = alg_.cardinality();
    return element_at(alg_, card == UINT64_MAX ? rng() : rng() % card);
  }

  /// Every element when the algebra is small, else a seeded sample.
  std::vector<Element> universe(std::mt19937_64& rng) {
    if (alg_.cardinality() <= kElementLimit) {
      if (!all_) {
        all_.emplace();
        for_each_element(alg_, [&](const Element& x) {
          all_->push_back(x);
          return true;
        });
      }
      return *all_;
    }
    std::vector<Element> out;
    for (std::size_t i = 0; i < options_.samples; ++i) out.push_back(random_element(rng));
    return out;
  }

  /// All ordered pairs from `left` x `right` when within the pair limit,
  /// else a seeded sample of 4 * samples pairs.
  void pairs(const std::vector<Element>& left, const std::vector<Element>& right,
             std::mt19937_64& rng, const std::function<void(const Element&, const Element&)>& f) {
    if (left.empty() || right.empty()) return;
    if (static_cast<double>(left.size()) * static_cast<double>(right.size()) <=
        static_cast<double>(options_.pair_limit)) {
      for (const auto& a : left)
        for (const auto& b : right) f(a, b);
      return;
    }
    for (std::size_t i = 0; i < 4 * options_.samples; ++i) {
      f(left[rng() % left.size()], right[rng() % right.size()]);
    }
  }

  const std::vector<Element>& units() {
    if (!units_) units_ = oracle::enumerate_units(alg_, options_.budget);
    return *units_;
  }

  const std::vector<Element>& decomposition(const Element& a) {
    auto it = decompositions_.find(a.coeffs());
    if (it == decompositions_.end()) {
      it = decompositions_.emplace(a.coeffs(), engine_.minimal_right_decomposition(a).summands)
               .first;
    }
    return it->second;
  }

  std::optional<Element> named(std::string_view name) const {
    try {
      return alg_.named(name);
    } catch (const DomainError&) {
      return std::nullopt;
    }
  }

  void run(std::string suite, std::string check, const std::function<void(Check&)>& body) {
    CheckRecord rec;
    rec.ring = ring_.id;
    rec.suite = std::move(suite);
    rec.check = std::move(check);
    Check c;
    try {
      body(c);
      rec.status = CheckStatus::pass;
    } catch (CheckFailed& f) {
      rec.status = CheckStatus::fail;
      rec.detail = std::move(f.detail);
      rec.counterexample = std::move(f.counterexample);
    } catch (CheckSkipped& s) {
      rec.status = CheckStatus::skipped;
      rec.detail = std::move(s.reason);
    } catch (const BudgetExceeded& e) {
      rec.status = CheckStatus::skipped;
      rec.budget_exhausted = true;
      rec.detail = std::string("budget: ") + e.what();
    } catch (const Error& e) {
      rec.status = CheckStatus::fail;
      rec.detail = std::string("error: ") + e.what();
    }
    rec.cases = c.cases;
    records_.push_back(std::move(rec));
  }

  bool is_matrix(std::size_t n) const {
    const auto& c = alg_.construction();
    return c.kind == ConstructionKind::matrix && (n == 0 || c.n == n);
  }

 private:
  const RosterEntry& ring_;
  const VerifyOptions& options_;
  Algebra alg_;
  RankEngine engine_;
  std::vector<CheckRecord> records_;
  std::map<Vector, RankValue> right_, left_;
  std::map<Vector, std::vector<Element>> decompositions_;
  std::optional<std::vector<Element>> all_;
  std::optional<std::vector<Element>> units_;
};

RankValue min_rank(RankValue a, RankValue b) { return a < b ? a : b; }

std::vector<Element> idempotents(Context& ctx, std::mt19937_64& rng) {
  std::vector<Element> out;
  for (const auto& x : ctx.universe(rng)) {
    if (is_idempotent(x)) out.push_back(x);
  }
  return out;
}

/// Greedy orthogonal systems over a shuffled pool; every prefix is a system.
std::vector<std::vector<Element>> orthogonal_systems(std::vector<Element> pool,
                                                     std::mt19937_64& rng, std::size_t count) {
  std::vector<std::vector<Element>> out;
  if (pool.empty()) return out;
  for (std::size_t round = 0; round < count; ++round) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Element> system;
    for (const auto& x : pool) {
      const bool orthogonal = std::all_of(system.begin(), system.end(), [&](const Element& y) {
        return (x * y).is_zero() && (y * x).is_zero();
      });
      if (orthogonal) {
        system.push_back(x);
        out.push_back(system);
      }
    }
  }
  return out;
}

Element sum_of(const Algebra& alg, const std::vector<Element>& xs) {
  Element s = alg.zero();
  for (const auto& x : xs) s += x;
  return s;
}

void require_semiprime(Context& ctx, Check& c) {
  if (!ctx.semiprime()) c.skip("not semiprime");
}

// S1: rank inequalities.
void suite_s1(Context& ctx) {
  ctx.run("S1", "zero_rank", [&](Check& c) {
    auto rng = ctx.rng("S1", "zero_rank");
    for (const auto& a : ctx.universe(rng)) {
      const bool zero_r = ctx.rr(a) == RankValue::finite(0);
      const bool zero_l = ctx.lr(a) == RankValue::finite(0);
      c.require(zero_r == a.is_zero() && zero_l == a.is_zero(), "rank 0 iff a = 0", {{"a", &a}});
    }
  });
  ctx.run("S1", "subadditivity", [&](Check& c) {
    auto rng = ctx.rng("S1", "subadditivity");
    const auto xs = ctx.universe(rng);
    ctx.pairs(xs, xs, rng, [&](const Element& a, const Element& b) {
      c.require(ctx.rr(a + b) <= ctx.rr(a) + ctx.rr(b), "rank_r(a+b) > rank_r a + rank_r b",
                {{"a", &a}, {"b", &b}});
      c.require(ctx.lr(a + b) <= ctx.lr(a) + ctx.lr(b), "rank_l(a+b) > rank_l a + rank_l b",
                {{"a", &a}, {"b", &b}});
    });
  });
  ctx.run("S1", "product_bound", [&](Check& c) {
    auto rng = ctx.rng("S1", "product_bound");
    const auto xs = ctx.universe(rng);
    ctx.pairs(xs, xs, rng, [&](const Element& a, const Element& b) {
      const Element ab = a * b;
      c.require(ctx.rr(ab) <= min_rank(ctx.rr(a), ctx.rr(b)), "rank_r(ab) > min(rank_r a, rank_r b)",
                {{"a", &a}, {"b", &b}});
      c.require(ctx.lr(ab) <= min_rank(ctx.lr(a), ctx.lr(b)), "rank_l(ab) > min(rank_l a, rank_l b)",
                {{"a", &a}, {"b", &b}});
    });
  });
  ctx.run("S1", "rank_one_products", [&](Check& c) {
    auto rng = ctx.rng("S1", "rank_one_products");
    const auto xs = ctx.universe(rng);
    const RankValue one = RankValue::finite(1);
    ctx.pairs(xs, xs, rng, [&](const Element& a, const Element& b) {
      const Element ab = a * b;
      if (ab.is_zero()) return;
      if (ctx.rr(a) == one) {
        c.require(ctx.rr(ab) == one, "rank_r a = 1, ab != 0, rank_r ab != 1", {{"a", &a}, {"b", &b}});
      }
      if (ctx.lr(b) == one) {
        c.require(ctx.lr(ab) == one, "rank_l b = 1, ab != 0, rank_l ab != 1", {{"a", &a}, {"b", &b}});
      }
    });
  });
}

// S2: unit invariance.
void suite_s2(Context& ctx) {
  ctx.run("S2", "unit_invariance", [&](Check& c) {
    auto rng = ctx.rng("S2", "unit_invariance");
    const auto& units = ctx.units();
    ctx.pairs(ctx.universe(rng), units, rng, [&](const Element& a, const Element& u) {
      const RankValue r = ctx.rr(a), l = ctx.lr(a);
      c.require(ctx.rr(a * u) == r && ctx.rr(u * a) == r, "right rank changed by a unit",
                {{"a", &a}, {"u", &u}});
      c.require(ctx.lr(a * u) == l && ctx.lr(u * a) == l, "left rank changed by a unit",
                {{"a", &a}, {"u", &u}});
    });
  });
}

// S3: minimal decompositions and annihilated summands.
void suite_s3(Context& ctx) {
  ctx.run("S3", "minimal_decompositions", [&](Check& c) {
    auto rng = ctx.rng("S3", "minimal_decompositions");
    for (const auto& a : ctx.universe(rng)) {
      const RankValue r = ctx.rr(a);
      if (!r.is_finite() || r.value() == 0) continue;
      const auto& parts = ctx.decomposition(a);
      c.require(parts.size() == r.value(), "decomposition length != rank", {{"a", &a}});
      for (const auto& p : parts) {
        c.require(!p.is_zero() && ctx.rr(p) == RankValue::finite(1), "summand without rank 1",
                  {{"a", &a}, {"summand", &p}});
      }
      c.require(sum_of(ctx.alg(), parts) == a, "summands do not add up", {{"a", &a}});
    }
  });
  ctx.run("S3", "annihilated_summands", [&](Check& c) {
    auto rng = ctx.rng("S3", "annihilated_summands");
    const auto xs = ctx.universe(rng);
    ctx.pairs(xs, xs, rng, [&](const Element& a, const Element& b) {
      if (!(a * b).is_zero()) return;
      const RankValue r = ctx.rr(a);
      if (!r.is_finite() || r.value() == 0) return;
      for (const auto& p : ctx.decomposition(a)) {
        c.require((p * b).is_zero(), "ab = 0 but a_i b != 0",
                  {{"a", &a}, {"b", &b}, {"summand", &p}});
      }
    });
  });
}

// S4: idempotent decompositions are orthogonal systems.
void suite_s4(Context& ctx) {
  ctx.run("S4", "orthogonalize", [&](Check& c) {
    auto rng = ctx.rng("S4", "orthogonalize");
    for (const auto& e : idempotents(ctx, rng)) {
      const RankValue r = ctx.rr(e);
      if (!r.is_finite() || e.is_zero()) continue;
      const auto sys = orthogonalize_idempotent_decomposition(ctx.engine(), e);
      c.require(sys.members.size() == r.value(), "system size != rank", {{"e", &e}});
      for (std::size_t i = 0; i < sys.members.size(); ++i) {
        const Element& x = sys.members[i];
        c.require(is_idempotent(x) && ctx.rr(x) == RankValue::finite(1),
                  "member is not a rank-one idempotent", {{"e", &e}, {"member", &x}});
        for (std::size_t j = 0; j < sys.members.size(); ++j) {
          if (i == j) continue;
          c.require((x * sys.members[j]).is_zero(), "members not orthogonal",
                    {{"e", &e}, {"x", &x}, {"y", &sys.members[j]}});
        }
      }
      c.require(sum_of(ctx.alg(), sys.members) == e, "members do not add up to e", {{"e", &e}});
    }
  });
  ctx.run("S4", "orthogonal_idempotent_sums", [&](Check& c) {
    auto rng = ctx.rng("S4", "orthogonal_idempotent_sums");
    std::vector<Element> pool;
    for (const auto& e : idempotents(ctx, rng)) {
      if (!e.is_zero() && ctx.rr(e) == RankValue::finite(1)) pool.push_back(e);
    }
    for (const auto& sys : orthogonal_systems(pool, rng, 50)) {
      const Element s = sum_of(ctx.alg(), sys);
      c.require(is_idempotent(s) && ctx.rr(s) == RankValue::finite(sys.size()),
                "sum of an orthogonal system of rank-one idempotents has the wrong rank",
                {{"sum", &s}, {"last", &sys.back()}});
    }
  });
  if (ctx.is_matrix(2)) {
    ctx.run("S4", "non_orthogonalizable", [&](Check& c) {
      const Element a = *ctx.named("E11") + *ctx.named("E12") + *ctx.named("E22");
      for_each_element(ctx.alg(), [&](const Element& x) {
        const Element y = a - x;
        const bool split = !x.is_zero() && !y.is_zero() && (x * y).is_zero() && (y * x).is_zero();
        c.require(!split, "E11+E12+E22 has an orthogonal splitting", {{"x", &x}, {"y", &y}});
        return true;
      });
    });
    if (ctx.alg().field().characteristic() > 2) {
      ctx.run("S4", "orthogonal_and_non_orthogonal", [&](Check& c) {
        const Field& f = ctx.alg().field();
        const Element e11 = *ctx.named("E11"), e12 = *ctx.named("E12"), e22 = *ctx.named("E22");
        const Element two_e22 = e22.scaled(f.from_integer(2));
        const Element b = e11 + two_e22;
        const RankValue one = RankValue::finite(1);
        c.require(ctx.rr(b) == RankValue::finite(2), "rank of E11+2E22 is not 2", {{"b", &b}});
        c.require(ctx.rr(e11) == one && ctx.rr(two_e22) == one && (e11 * two_e22).is_zero() &&
                      (two_e22 * e11).is_zero(),
                  "E11, 2E22 is not an orthogonal minimal decomposition", {{"b", &b}});
        const Element x = e11 + e12, y = two_e22 - e12;
        c.require(x + y == b && ctx.rr(x) == one && ctx.rr(y) == one && !(x * y).is_zero(),
                  "(E11+E12) + (2E22-E12) is not a non-orthogonal minimal decomposition",
                  {{"x", &x}, {"y", &y}});
      });
    }
  }
}

// S5: orthogonal non-nilpotent rank-one elements add ranks.
void suite_s5(Context& ctx) {
  ctx.run("S5", "non_nilpotent_orthogonal_sums", [&](Check& c) {
    auto rng = ctx.rng("S5", "non_nilpotent_orthogonal_sums");
    std::vector<Element> pool;
    for (const auto& x : ctx.universe(rng)) {
      if (!x.is_zero() && ctx.rr(x) == RankValue::finite(1) && !is_nilpotent(x)) pool.push_back(x);
    }
    for (const auto& sys : orthogonal_systems(pool, rng, 50)) {
      const Element s = sum_of(ctx.alg(), sys);
      c.require(ctx.rr(s) == RankValue::finite(sys.size()),
                "sum of an orthogonal system of non-nilpotent rank-one elements has the wrong rank",
                {{"sum", &s}, {"last", &sys.back()}});
    }
  });
  if (ctx.is_matrix(0) && ctx.alg().construction().n >= 3) {
    ctx.run("S5", "nilpotent_counterexample", [&](Check& c) {
      const std::size_t n = ctx.alg().construction().n;
      std::vector<Element> parts;
      for (std::size_t i = 1; i < n; ++i) {
        parts.push_back(*ctx.named("E" + std::to_string(i) + std::to_string(n)));
      }
      const Element a = sum_of(ctx.alg(), parts);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        c.require(ctx.rr(parts[i]) == RankValue::finite(1) && is_nilpotent(parts[i]),
                  "summand is not a nilpotent rank-one element", {{"summand", &parts[i]}});
        for (std::size_t j = 0; j < parts.size(); ++j) {
          if (i != j) {
            c.require((parts[i] * parts[j]).is_zero(), "summands not orthogonal",
                      {{"x", &parts[i]}, {"y", &parts[j]}});
          }
        }
      }
      c.require(ctx.rr(a) == RankValue::finite(1) && ctx.decomposition(a).size() == 1,
                "E1n+...+E(n-1)n does not have rank 1", {{"a", &a}});
    });
  }
}

// S6: unit completion and the rank dichotomy.
void suite_s6(Context& ctx) {
  ctx.run("S6", "unit_completion", [&](Check& c) {
    auto rng = ctx.rng("S6", "unit_completion");
    const auto& units = ctx.units();
    std::vector<Element> es;
    for (const auto& e : idempotents(ctx, rng)) {
      if (ctx.rr(e).is_finite()) es.push_back(e);
    }
    ctx.pairs(es, ctx.universe(rng), rng, [&](const Element& e, const Element& r) {
      const RankValue n = ctx.rr(e);
      const RankValue m = ctx.rr(e * r);
      const UnitCompletion out = unit_completion(ctx.engine(), e, r);
      if (const auto* sol = std::get_if<UnitSolution>(&out)) {
        const Element one = ctx.alg().one();
        c.require(m == n, "unit returned although rank(er) < rank(e)", {{"e", &e}, {"r", &r}});
        c.require(sol->x * sol->x_inv == one && sol->x_inv * sol->x == one && e * r == e * sol->x,
                  "unit completion failed verification", {{"e", &e}, {"r", &r}, {"x", &sol->x}});
        c.require(oracle::find_unit_solution(e, r, units).has_value(),
                  "unit search finds no x with er = ex", {{"e", &e}, {"r", &r}});
      } else {
        c.require(m < n, "rank drop reported although rank(er) = rank(e)", {{"e", &e}, {"r", &r}});
      }
    });
  });
  ctx.run("S6", "dichotomy", [&](Check& c) {
    require_semiprime(ctx, c);
    auto rng = ctx.rng("S6", "dichotomy");
    const auto& units = ctx.units();
    const auto xs = ctx.universe(rng);
    ctx.pairs(xs, xs, rng, [&](const Element& a, const Element& r) {
      const RankValue n = ctx.rr(a);
      if (!n.is_finite()) return;
      c.require(ctx.rr(a * r) < n || oracle::find_unit_solution(a, r, units).has_value(),
                "rank(ar) = rank(a) but no unit x with ar = ax", {{"a", &a}, {"r", &r}});
    });
  });
  ctx.run("S6", "remark_rank_one", [&](Check& c) {
    auto rng = ctx.rng("S6", "remark_rank_one");
    const auto& units = ctx.units();
    const auto xs = ctx.universe(rng);
    for (const auto& e : idempotents(ctx, rng)) {
      if (e.is_zero()) continue;
      const bool body = std::all_of(xs.begin(), xs.end(), [&](const Element& r) {
        return (e * r).is_zero() || oracle::find_unit_solution(e, r, units).has_value();
      });
      if (body) {
        c.require(is_right_irreducible(e, ctx.options().budget),
                  "dichotomy holds with n = 1 but eR is not minimal", {{"e", &e}});
      }
    }
  });
  if (ctx.alg().construction().kind == ConstructionKind::triangular &&
      ctx.alg().construction().n == 2) {
    ctx.run("S6", "finite_rank_essential", [&](Check& c) {
      const Element e11 = *ctx.named("E11"), e22 = *ctx.named("E22");
      c.require(!ctx.rr(e11).is_finite(), "E11 has finite right rank", {{"e", &e11}});
      for_each_element(ctx.alg(), [&](const Element& r) {
        const Element er = e11 * r;
        c.require((er * e11).is_zero() || er == e11 * (er + e22),
                  "dichotomy body fails for E11", {{"r", &r}});
        return true;
      });
    });
  }
}

// S7: rank equals composition length of aR.
void suite_s7(Context& ctx) {
  ctx.run("S7", "length_law", [&](Check& c) {
    require_semiprime(ctx, c);
    auto rng = ctx.rng("S7", "length_law");
    for (const auto& a : ctx.universe(rng)) {
      if (!ctx.engine().in_right_socle(a)) continue;
      const RankValue bfs = ctx.engine().right_rank_by_sum_search(a);
      const std::size_t len = composition_length(principal_right_ideal(a), ctx.options().budget);
      c.require(bfs == RankValue::finite(len), "rank != composition length of aR", {{"a", &a}});
    }
  });
  ctx.run("S7", "length_order_independence", [&](Check& c) {
    require_semiprime(ctx, c);
    auto rng = ctx.rng("S7", "length_order_independence");
    auto xs = ctx.universe(rng);
    if (xs.size() > 64) xs.erase(xs.begin() + 64, xs.end());
    for (const auto& a : xs) {
      const RightIdealBasis ideal = principal_right_ideal(a);
      const std::size_t base = composition_length(ideal, ctx.options().budget);
      for (int k = 0; k < 3; ++k) {
        c.require(composition_length(ideal, ctx.options().budget, rng()) == base,
                  "composition length depends on scan order", {{"a", &a}});
      }
    }
  });
}

// S8: left and right coincide in semiprime rings.
void suite_s8(Context& ctx) {
  ctx.run("S8", "rank_symmetry", [&](Check& c) {
    require_semiprime(ctx, c);
    auto rng = ctx.rng("S8", "rank_symmetry");
    for (const auto& a : ctx.universe(rng)) {
      c.require(ctx.rr(a) == ctx.lr(a), "left rank != right rank", {{"a", &a}});
    }
  });
  ctx.run("S8", "socle_symmetry", [&](Check& c) {
    require_semiprime(ctx, c);
    const Subspace right = right_socle(ctx.alg(), SocleMethod::automatic, ctx.options().budget).socle;
    const Subspace left = left_socle(ctx.alg(), SocleMethod::automatic, ctx.options().budget).socle;
    c.require(right == left, "left socle != right socle");
  });
}

// S9: idempotents and minimal ideals.
void suite_s9(Context& ctx) {
  ctx.run("S9", "irreducible_corner_division", [&](Check& c) {
    auto rng = ctx.rng("S9", "irreducible_corner_division");
    for (const auto& e : idempotents(ctx, rng)) {
      if (e.is_zero()) continue;
      if (is_right_irreducible(e, ctx.options().budget)) {
        c.require(corner_is_division_ring(e, ctx.options().budget),
                  "eR minimal but eRe is not a division ring", {{"e", &e}});
      }
    }
  });
  ctx.run("S9", "division_corner_irreducible", [&](Check& c) {
    require_semiprime(ctx, c);
    auto rng = ctx.rng("S9", "division_corner_irreducible");
    for (const auto& e : idempotents(ctx, rng)) {
      if (e.is_zero()) continue;
      c.require(corner_is_division_ring(e, ctx.options().budget) ==
                    is_right_irreducible(e, ctx.options().budget),
                "eRe division ring does not match minimality of eR", {{"e", &e}});
    }
  });
  ctx.run("S9", "idempotent_generators", [&](Check& c) {
    require_semiprime(ctx, c);
    for (const auto& ideal : ctx.engine().lattice().minimal_right_ideals()) {
      const auto e = find_idempotent_generator(ideal, ctx.options().budget);
      c.require(e.has_value(), "minimal right ideal without an idempotent generator");
      c.require(is_idempotent(*e) && principal_right_ideal(*e).carrier == ideal.carrier,
                "idempotent generator does not generate its ideal", {{"e", &*e}});
    }
  });
  ctx.run("S9", "left_right_irreducible", [&](Check& c) {
    require_semiprime(ctx, c);
    auto rng = ctx.rng("S9", "left_right_irreducible");
    const Algebra& op = ctx.engine().opposite_engine().algebra();
    for (const auto& e : idempotents(ctx, rng)) {
      if (e.is_zero()) continue;
      const bool right = is_right_irreducible(e, ctx.options().budget);
      const bool left = is_right_irreducible(op.element(e.coeffs()), ctx.options().budget);
      c.require(right == left, "eR minimal does not match Re minimal", {{"e", &e}});
    }
  });
}

// S10: socle elements of semiprime rings are unit-regular.
void suite_s10(Context& ctx) {
  ctx.run("S10", "inner_inverse_contract", [&](Check& c) {
    auto rng = ctx.rng("S10", "inner_inverse_contract");
    for (const auto& a : ctx.universe(rng)) {
      const auto w = find_inner_inverse(a);
      if (!w) continue;
      c.require(a * w->b * a == a && is_idempotent(a * w->b) && is_idempotent(w->b * a),
                "inner inverse violates its contract", {{"a", &a}, {"b", &w->b}});
    }
  });
  ctx.run("S10", "socle_unit_regular", [&](Check& c) {
    require_semiprime(ctx, c);
    auto rng = ctx.rng("S10", "socle_unit_regular");
    const Element one = ctx.alg().one();
    for (const auto& a : ctx.universe(rng)) {
      if (!ctx.engine().in_right_socle(a)) continue;
      const UnitRegularResult res = unit_regular_witness(ctx.engine(), a);
      c.require(res.witness.has_value(), "socle element without a unit-regular witness", {{"a", &a}});
      const auto& w = *res.witness;
      c.require(is_idempotent(w.e) && w.u * w.u_inv == one && w.u_inv * w.u == one && w.e * w.u == a,
                "unit-regular witness failed verification",
                {{"a", &a}, {"e", &w.e}, {"u", &w.u}});
    }
  });
  if (ctx.alg().construction().kind == ConstructionKind::triangular &&
      ctx.alg().construction().n == 2) {
    ctx.run("S10", "non_regular_socle_element", [&](Check& c) {
      const Element a = *ctx.named("E12");
      const RankValue one = RankValue::finite(1);
      c.require(ctx.engine().in_right_socle(a) && ctx.engine().in_left_socle(a),
                "E12 not in both socles", {{"a", &a}});
      c.require(ctx.rr(a) == one && ctx.lr(a) == one, "E12 does not have rank 1 on both sides",
                {{"a", &a}});
      c.require(!find_inner_inverse(a) && !unit_regular_witness(ctx.engine(), a).witness,
                "E12 is regular", {{"a", &a}});
    });
  }
}

using SuiteFn = void (*)(Context&);

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> table = {
      {"S1", suite_s1}, {"S2", suite_s2}, {"S3", suite_s3}, {"S4", suite_s4}, {"S5", suite_s5},
      {"S6", suite_s6}, {"S7", suite_s7}, {"S8", suite_s8}, {"S9", suite_s9}, {"S10", suite_s10}};
  return table;
}

std::vector<CheckRecord> verify_ring(const RosterEntry& ring, const VerifyOptions& options,
                                     const std::vector<std::string>& suites) {
  Context ctx(ring, options);
  for (const auto& s : suites) suite_table().at(s)(ctx);
  return std::move(ctx.records());
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

// S2 < S10 in suite order, not lexicographically.
int suite_number(const std::string& s) { return std::stoi(s.substr(1)); }

}  // namespace

std::string CheckRecord::to_line() const {
  std::ostringstream out;
  out << "ring=" << ring << " suite=" << suite << " check=" << check
      << " status=" << status_name(status) << " cases=" << cases;
  for (const auto& [name, literal] : counterexample) out << ' ' << name << '=' << literal;
  if (!detail.empty()) {
    std::string quoted;
    for (char ch : detail) quoted += ch == '"' ? '\'' : ch;
    out << " detail=\"" << quoted << '"';
  }
  return out.str();
}

bool VerificationReport::any_failed() const {
  return std::any_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return r.status == CheckStatus::fail; });
}

bool VerificationReport::any_budget_exhausted() const {
  return std::any_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return r.budget_exhausted; });
}

int VerificationReport::exit_code() const {
  if (any_failed()) return 2;
  if (any_budget_exhausted()) return 3;
  return 0;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : records) {
    out << r.to_line() << '\n';
    (r.status == CheckStatus::pass ? pass : r.status == CheckStatus::fail ? fail : skipped)++;
  }
  out << "summary seed=" << seed << " checks=" << records.size() << " pass=" << pass
      << " fail=" << fail << " skipped=" << skipped << '\n';
  return out.str();
}

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> ids = {"S1", "S2", "S3", "S4", "S5",
                                               "S6", "S7", "S8", "S9", "S10"};
  return ids;
}

VerificationReport run_verification(const std::vector<RosterEntry>& rings,
                                    const VerifyOptions& options) {
  std::vector<std::string> suites = options.suites.empty() ? all_suites() : options.suites;
  for (const auto& s : suites) {
    if (!suite_table().count(s)) throw DomainError("unknown suite \"" + s + "\"");
  }
  std::sort(suites.begin(), suites.end(),
            [](const std::string& a, const std::string& b) { return suite_number(a) < suite_number(b); });
  suites.erase(std::unique(suites.begin(), suites.end()), suites.end());

  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.seed = options.seed;

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(rings.size(), 1)));
  std::vector<std::vector<CheckRecord>> results(rings.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rings.size(); i = next++) {
      results[i] = verify_ring(rings[i], options, suites);
    }
  };
  std::vector<std::future<void>> pool;
  for (unsigned t = 0; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();

  for (auto& r : results) {
    for (auto& rec : r) report.records.push_back(std::move(rec));
  }
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) {
                     if (a.ring != b.ring) return a.ring < b.ring;
                     if (a.suite != b.suite) return suite_number(a.suite) < suite_number(b.suite);
                     return a.check < b.check;
                   });
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace ringrank
