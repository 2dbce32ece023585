#include "ringrank/roster.hpp"

#include <algorithm>

namespace ringrank {

namespace {

Algebra one_dimensional(const Field& f) { return make_full_matrix_algebra(1, f); }

}  // namespace

std::vector<RosterEntry> default_roster() {
  const Field f2 = Field::prime(2);
  const Field f3 = Field::prime(3);
  std::vector<RosterEntry> roster = {
      {"m2f2", make_full_matrix_algebra(2, f2)},
      {"m2f3", make_full_matrix_algebra(2, f3)},
      {"m3f2", make_full_matrix_algebra(3, f2)},
      {"t2f2", make_triangular_algebra(2, f2)},
      {"t3f2", make_triangular_algebra(3, f2)},
      {"block11f2", make_block_example_algebra({1, 1}, f2)},
      {"block12f2", make_block_example_algebra({1, 2}, f2)},
      {"block21f2", make_block_example_algebra({2, 1}, f2)},
      {"m2f3+f3", direct_sum(make_full_matrix_algebra(2, f3), one_dimensional(f3))},
  };
  std::sort(roster.begin(), roster.end(),
            [](const RosterEntry& a, const RosterEntry& b) { return a.id < b.id; });
  return roster;
}

std::optional<RosterEntry> roster_entry(std::string_view id) {
  for (auto& entry : default_roster()) {
    if (entry.id == id) return entry;
  }
  return std::nullopt;
}

}  // namespace ringrank
