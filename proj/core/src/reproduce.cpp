#include "ringrank/reproduce.hpp"

#include <algorithm>
#include <sstream>

#include "ringrank/algebra.hpp"
#include "ringrank/rank.hpp"

namespace ringrank {

namespace {

Subspace coordinate_span(const Field& field, std::size_t dim, std::size_t lo, std::size_t hi,
                         std::size_t lo2 = 0, std::size_t hi2 = 0) {
  std::vector<Vector> gens;
  auto add = [&](std::size_t i) {
    Vector v(dim);
    v[i] = field.one();
    gens.push_back(std::move(v));
  };
  for (std::size_t i = lo; i < hi; ++i) add(i);
  for (std::size_t i = lo2; i < hi2; ++i) add(i);
  return Subspace::span(field, dim, gens);
}

std::string describe(const Subspace& s, const Subspace& expected, const std::string& name) {
  if (s == expected) return name;
  return "dim " + std::to_string(s.dim()) + " subspace";
}

}  // namespace

bool ReproduceReport::all_match() const {
  return !rows.empty() &&
         std::all_of(rows.begin(), rows.end(), [](const ReproduceRow& r) { return r.match; });
}

std::string ReproduceReport::to_text() const {
  std::ostringstream out;
  out << "block example m=" << options.m << " n=" << options.n << " q=" << options.q
      << " dim=" << dim << " method=" << (options.fastpath ? "fastpath" : "definition") << '\n';
  std::size_t w0 = 8, w1 = 8, w2 = 8;
  for (const auto& r : rows) {
    w0 = std::max(w0, r.quantity.size());
    w1 = std::max(w1, r.expected.size());
    w2 = std::max(w2, r.computed.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  out << pad("quantity", w0) << "  " << pad("expected", w1) << "  " << pad("computed", w2)
      << "  status\n";
  for (const auto& r : rows) {
    out << pad(r.quantity, w0) << "  " << pad(r.expected, w1) << "  " << pad(r.computed, w2)
        << "  " << (r.match ? "match" : "MISMATCH") << '\n';
  }
  out << (all_match() ? "all entries match" : "some entries differ") << '\n';
  return out.str();
}

ReproduceReport reproduce_block_example(const ReproduceOptions& options) {
  const Field field = Field::of_order(options.q);
  const Algebra alg = make_block_example_algebra({options.m, options.n}, field);
  const std::size_t m = options.m, n = options.n, d = alg.dim();

  RankOptions rank_options;
  rank_options.budget = options.budget;
  rank_options.method = options.fastpath ? RankMethod::composition_length : RankMethod::sum_search;
  RankEngine engine(alg, rank_options);

  ReproduceReport report;
  report.options = options;
  report.dim = d;
  auto add_rank = [&](const std::string& q, RankValue expected, RankValue computed) {
    report.rows.push_back({q, expected.to_string(), computed.to_string(), expected == computed});
  };
  const RankValue inf = RankValue::infinite();
  const RankValue rm = RankValue::finite(m), rn = RankValue::finite(n);
  const Element j = alg.named("J"), k = alg.named("K"), l = alg.named("L");
  add_rank("rank_r(J)", rn, engine.right_rank(j));
  add_rank("rank_l(J)", rm, engine.left_rank(j));
  add_rank("rank_r(K)", inf, engine.right_rank(k));
  add_rank("rank_l(K)", rm, engine.left_rank(k));
  add_rank("rank_r(L)", rn, engine.right_rank(l));
  add_rank("rank_l(L)", inf, engine.left_rank(l));

  // Basis: A (m^2), C (n^2), B (m^2 n^2).
  const std::size_t a_end = m * m, c_end = a_end + n * n;
  const Subspace right_expected = coordinate_span(field, d, a_end, d);
  const Subspace left_expected = coordinate_span(field, d, 0, a_end, c_end, d);
  const SocleMethod method =
      options.fastpath ? SocleMethod::radical_annihilator : SocleMethod::automatic;
  const Subspace right = right_socle(alg, method, options.budget).socle;
  const Subspace left = left_socle(alg, method, options.budget).socle;
  const std::string right_name = "[0 B; 0 C]", left_name = "[A B; 0 0]";
  report.rows.push_back({"soc_r", right_name, describe(right, right_expected, right_name),
                         right == right_expected});
  report.rows.push_back({"soc_l", left_name, describe(left, left_expected, left_name),
                         left == left_expected});
  return report;
}

}  // namespace ringrank
