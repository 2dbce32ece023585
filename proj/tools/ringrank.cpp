#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ringrank/element_literal.hpp"
#include "ringrank/errors.hpp"
#include "ringrank/rank.hpp"
#include "ringrank/regularity.hpp"
#include "ringrank/reproduce.hpp"
#include "ringrank/ring_spec.hpp"
#include "ringrank/roster.hpp"
#include "ringrank/verify.hpp"

namespace {

using namespace ringrank;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCheck = 2;
constexpr int kExitBudget = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Args {
  std::string spec;
  std::string element;
  bool decompose = false;
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::uint64_t budget = std::uint64_t{1} << 20;
  bool fastpath = false;
  std::string report;
  std::string roster;
  std::string example;
  std::size_t m = 1;
  std::size_t n = 2;
  std::uint32_t q = 2;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void write_report(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write report file " + path);
  out << text;
}

RankOptions rank_options(const Args& args) {
  RankOptions opts;
  opts.budget = Budget{args.budget};
  if (args.fastpath) opts.method = RankMethod::composition_length;
  return opts;
}

int cmd_rank(const Args& args) {
  const Algebra alg = load_ring_spec(args.spec);
  const Element a = parse_element(alg, args.element);
  RankEngine engine(alg, rank_options(args));
  const RankValue right = engine.right_rank(a);
  const RankValue left = engine.left_rank(a);
  std::cout << "ring: " << alg.description() << '\n'
            << "element: " << format_element(a) << '\n'
            << "right_rank: " << right.to_string() << '\n'
            << "left_rank: " << left.to_string() << '\n'
            << "in_right_socle: " << yes_no(engine.in_right_socle(a)) << '\n'
            << "in_left_socle: " << yes_no(engine.in_left_socle(a)) << '\n';
  if (args.decompose) {
    if (!right.is_finite()) {
      std::cout << "decomposition: none (infinite right rank)\n";
    } else if (right.value() == 0) {
      std::cout << "decomposition: empty\n";
    } else {
      const MinimalDecomposition dec = engine.minimal_right_decomposition(a);
      std::cout << "decomposition:\n";
      for (std::size_t i = 0; i < dec.summands.size(); ++i) {
        std::cout << "  summand " << i + 1 << ": " << format_element(dec.summands[i])
                  << "  (ideal dim " << dec.witness_ideals[i].dim() << ")\n";
      }
    }
  }
  return kExitOk;
}

int cmd_witness(const Args& args) {
  const Algebra alg = load_ring_spec(args.spec);
  const Element a = parse_element(alg, args.element);
  RankEngine engine(alg, rank_options(args));
  const UnitRegularResult res = unit_regular_witness(engine, a);
  std::cout << "ring: " << alg.description() << '\n'
            << "element: " << format_element(a) << '\n'
            << "right_rank: " << engine.right_rank(a).to_string() << '\n'
            << "regular: " << yes_no(res.inner_inverse.has_value()) << '\n';
  if (res.inner_inverse) std::cout << "inner_inverse: " << format_element(res.inner_inverse->b) << '\n';
  if (!res.witness) {
    const char* reason =
        res.failure == WitnessFailure::not_regular ? "not regular" : "infinite rank";
    std::cout << "unit_regular: no (" << reason << ")\n";
    return kExitOk;
  }
  const auto& w = *res.witness;
  const bool ok = is_idempotent(w.e) && w.u * w.u_inv == alg.one() &&
                  w.u_inv * w.u == alg.one() && w.e * w.u == a;
  std::cout << "unit_regular: yes\n"
            << "e: " << format_element(w.e) << '\n'
            << "u: " << format_element(w.u) << '\n'
            << "u_inv: " << format_element(w.u_inv) << '\n'
            << "verified: " << yes_no(ok) << '\n';
  return ok ? kExitOk : kExitCheck;
}

std::vector<std::string> split_suites(const std::string& s) {
  std::vector<std::string> out;
  if (s == "all") return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_verify(const Args& args) {
  std::vector<RosterEntry> rings;
  if (!args.roster.empty()) {
    if (args.roster != "default") {
      auto entry = roster_entry(args.roster);
      if (!entry) throw UsageError("unknown roster \"" + args.roster + "\"");
      rings.push_back(*entry);
    } else {
      rings = default_roster();
    }
  }
  if (!args.spec.empty()) rings.push_back({args.spec, load_ring_spec(args.spec)});
  if (rings.empty()) throw UsageError("verify needs --spec or --roster");

  VerifyOptions opts;
  opts.suites = split_suites(args.suite);
  opts.seed = args.seed;
  opts.budget = Budget{args.budget};
  const VerificationReport report = run_verification(rings, opts);
  const std::string text = report.to_text();
  std::cout << text;
  std::ostringstream timing;
  timing << "elapsed_seconds=" << report.seconds << '\n';
  std::cerr << timing.str();
  write_report(args.report, text + timing.str());
  return report.exit_code();
}

int cmd_reproduce(const Args& args) {
  if (args.example != "3.4") throw UsageError("only --example 3.4 is available");
  ReproduceOptions opts;
  opts.m = args.m;
  opts.n = args.n;
  opts.q = args.q;
  opts.fastpath = args.fastpath;
  opts.budget = Budget{args.budget};
  const auto start = std::chrono::steady_clock::now();
  const ReproduceReport report = reproduce_block_example(opts);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string text = report.to_text();
  std::cout << text;
  std::ostringstream timing;
  timing << "elapsed_seconds=" << seconds << '\n';
  std::cerr << timing.str();
  write_report(args.report, text + timing.str());
  return report.all_match() ? kExitOk : kExitCheck;
}

int cmd_info(const Args& args) {
  const Algebra alg = load_ring_spec(args.spec);
  const Budget budget{args.budget};
  std::cout << "ring: " << alg.description() << '\n'
            << "field: F_" << alg.field().order() << '\n'
            << "dim: " << alg.dim() << '\n'
            << "elements: " << alg.cardinality() << '\n'
            << "basis:";
  for (const auto& name : alg.basis_names()) std::cout << ' ' << name;
  std::cout << '\n';
  if (!alg.aliases().empty()) {
    std::cout << "aliases:";
    for (const auto& [name, v] : alg.aliases()) {
      std::cout << ' ' << name << '=' << format_element(alg.element(v));
    }
    std::cout << '\n';
  }
  std::cout << "unit: " << format_element(alg.one()) << '\n';
  const RadicalReport rad = jacobson_radical(alg, budget);
  std::cout << "radical_dim: " << rad.radical.dim() << '\n'
            << "nilpotency_index: " << rad.nilpotency_index << '\n'
            << "semiprime: " << yes_no(rad.radical.dim() == 0) << '\n';
  const SocleReport right = right_socle(alg, SocleMethod::radical_annihilator, budget);
  const SocleReport left = left_socle(alg, SocleMethod::radical_annihilator, budget);
  std::cout << "right_socle_dim: " << right.socle.dim() << '\n'
            << "left_socle_dim: " << left.socle.dim() << '\n';
  try {
    std::cout << "minimal_right_ideals: " << minimal_right_ideals(alg, budget).size() << '\n';
  } catch (const BudgetExceeded&) {
    std::cout << "minimal_right_ideals: over budget\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank, socle and unit-regularity computations in finite algebras over F_q"};
  app.require_subcommand(1);
  Args args;

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", args.budget, "Scan budget in visited elements")
        ->capture_default_str();
  };
  auto add_spec = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--spec", args.spec, "Ring spec JSON file");
    if (required) opt->required();
  };

  auto* rank = app.add_subcommand("rank", "Left and right rank of an element");
  add_spec(rank, true);
  rank->add_option("--element", args.element, "Element literal, e.g. E11+2*E22")->required();
  rank->add_flag("--decompose", args.decompose, "Print a minimal right decomposition");
  rank->add_flag("--fastpath", args.fastpath, "Rank as composition length of aR");
  add_budget(rank);

  auto* witness = app.add_subcommand("witness", "Inner inverse and unit-regular factorization");
  add_spec(witness, true);
  witness->add_option("--element", args.element, "Element literal")->required();
  witness->add_flag("--fastpath", args.fastpath, "Rank as composition length of aR");
  add_budget(witness);

  auto* verify = app.add_subcommand("verify", "Run the property suites");
  add_spec(verify, false);
  verify->add_option("--roster", args.roster, "\"default\" or a roster ring id");
  verify->add_option("--suite", args.suite, "all, or a comma list of S1..S10")->capture_default_str();
  verify->add_option("--seed", args.seed, "Sampling seed")->capture_default_str();
  verify->add_option("--report", args.report, "Also write the report to this file");
  add_budget(verify);

  auto* reproduce = app.add_subcommand("reproduce", "Block example rank table and socles");
  reproduce->add_option("--example", args.example, "Example id (3.4)")->required();
  reproduce->add_option("--m", args.m, "Block size m")->capture_default_str()->check(CLI::Range(1, 3));
  reproduce->add_option("--n", args.n, "Block size n")->capture_default_str()->check(CLI::Range(1, 3));
  reproduce->add_option("--q", args.q, "Field order")->capture_default_str();
  reproduce->add_flag("--fastpath", args.fastpath, "Composition length and radical annihilator");
  reproduce->add_option("--report", args.report, "Also write the table to this file");
  add_budget(reproduce);

  auto* info = app.add_subcommand("info", "Summary of a ring spec");
  add_spec(info, true);
  add_budget(info);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*rank) return cmd_rank(args);
    if (*witness) return cmd_witness(args);
    if (*verify) return cmd_verify(args);
    if (*reproduce) return cmd_reproduce(args);
    if (*info) return cmd_info(args);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const SpecError& e) {
    std::cerr << "spec error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidField& e) {
    std::cerr << "invalid field: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidAlgebra& e) {
    std::cerr << "invalid algebra: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LiteralError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kExitCheck;
  }
  return kExitUsage;
}
