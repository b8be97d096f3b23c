// Acceptance run: one line per criterion, exit status 1 if any fails.
//
// Each criterion is evaluated from the individual checks of the verify
// module; its runtime is the sum of those checks' runtimes and must stay
// under the criterion's bound.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "idpda/format.hpp"
#include "idpda/verify.hpp"
#include "idpda/witness.hpp"

using namespace idpda;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::chrono::milliseconds bound;
  std::vector<std::string> checks;
};

}  // namespace

int main() {
  auto profile = verify::Profile::desk();
  profile.tuple_samples = 100;

  std::vector<CheckResult> all;
  auto add = [&](std::vector<CheckResult> more) { all.insert(all.end(), more.begin(), more.end()); };

  // Strings of criteria 3, 5, 7 and 8 are evaluated by both simulation paths.
  verify::OracleTally oracle;
  add(verify::check_state_bound(1, profile));
  add(verify::check_state_bound(2, profile, &oracle));
  add(verify::check_state_bound(3, profile));
  add(verify::check_stack_bound(2, 3, profile, &oracle));
  for (std::uint64_t s : {2, 3, 4}) add(verify::check_bracket_bound(2, s, 1, profile, &oracle));
  add(verify::check_one_state(profile));
  add(verify::check_language_preservation("A2", witness::build_A(2), 12, profile, &oracle));
  add(verify::check_language_preservation("B2", witness::build_B(2), 12, profile, &oracle));
  add(verify::check_language_preservation("B2_2", witness::build_Bns(2, 2), 10, profile, &oracle));
  add(verify::check_language_preservation("B1_2", witness::build_B12(), 10, profile, &oracle));

  std::map<std::string, const CheckResult*> by_id;
  std::vector<std::string> empty_push_ids;
  for (const auto& r : all) {
    by_id[r.id] = &r;
    if (r.id.size() > 14 && r.id.substr(r.id.size() - 14) == ".no_empty_push") empty_push_ids.push_back(r.id);
  }

  using std::chrono::milliseconds;
  using std::chrono::seconds;
  const std::vector<Criterion> criteria{
      {1, "reachable states of det(A_n) = 2^(n^2), n = 1, 2, 3", seconds(10),
       {"A1.reachable_states", "A2.reachable_states", "A3.reachable_states"}},
      {2, "prefixes #x w_R reach pairwise distinct states, n = 2, 3", seconds(30),
       {"A2.reachable_states", "A3.reachable_states", "A2.distinct_prefixes", "A3.distinct_prefixes"}},
      {3, "A_2 accepts #x w_R y_j #x' y_i iff (i,j) in R, 64 strings", seconds(5), {"A2.accept"}},
      {4, "reachable pushed symbols of det(B_2) = 15", seconds(5), {"B2.reachable_pushed"}},
      {5, "f g accepted iff (i,j) in R_k, m = 1 exhaustive, m = 2, 3 sampled", seconds(60),
       {"B2.fg.m1", "B2.fg.m2", "B2.fg.m3"}},
      {6, "reachable pushed symbols of det(B_{2,s}) = 15 s, s = 2, 3, 4", seconds(30),
       {"B2_2.reachable_pushed", "B2_3.reachable_pushed", "B2_4.reachable_pushed"}},
      {7, "f h accepted iff bit x of l_k is 1, s = 2, 4", seconds(60), {"B2_2.fh.m1", "B2_4.fh.m1"}},
      {8, "bounded equivalence of A_2, B_2, B_{2,2}, B_{1,2} with their determinizations", seconds(600),
       {"equiv.A2.len12", "equiv.B2.len12", "equiv.B2_2.len10", "equiv.B1_2.len10"}},
      {9, "no pushed symbol carries the empty relation", seconds(1), empty_push_ids},
      {10, "frontier and relation simulation agree on criteria 3, 5, 7, 8", milliseconds(0), {}},
      {11, "det(B_{1,2}): >= 2 states, 2 pushed symbols, type-matched acceptance", seconds(5),
       {"B1_2.states", "B1_2.reachable_pushed", "B1_2.type_match"}},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::string detail;
    milliseconds spent{0};
    bool ok = true;
    for (const auto& id : c.checks) {
      const auto it = by_id.find(id);
      if (it == by_id.end()) {
        ok = false;
        detail += " missing:" + id;
        continue;
      }
      spent += it->second->runtime;
      if (!it->second->passed()) {
        ok = false;
        detail += " [" + format::render_check(*it->second) + "]";
      }
    }
    if (c.number == 10) {
      ok = oracle.disagreements == 0 && oracle.evaluated > 0;
      detail += " strings=" + std::to_string(oracle.evaluated) +
                " disagreements=" + std::to_string(oracle.disagreements);
      if (oracle.disagreements) detail += " first=" + oracle.first;
    } else if (spent > c.bound) {
      ok = false;
      detail += " over time bound";
    }
    if (!ok) ++failed;
    std::cout << "CRITERION " << c.number << ' ' << (ok ? "PASS" : "FAIL") << ' ' << spent.count() << "ms";
    if (c.number != 10) std::cout << " (bound " << c.bound.count() << "ms)";
    std::cout << " - " << c.title << detail << "\n";
  }
  std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAILED") << "\n";
  return failed == 0 ? 0 : 1;
}
