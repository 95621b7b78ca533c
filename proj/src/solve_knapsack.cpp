#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <vector>

#include "orbench/solve.hpp"

namespace orbench {

namespace {

using Clock = std::chrono::steady_clock;

/// One branch of the augmentation case split: items pinned in or out, plus a
/// capacity delta from triggered reductions.
struct ItemCase {
  std::set<int> forced_in;
  std::set<int> removed;
  std::int64_t cap_delta = 0;
};

std::vector<ItemCase> expand_cases(const KnapsackInstance& inst,
                                   const std::vector<AugmentedConstraint>& augs) {
  const int n = static_cast<int>(inst.weights.size());
  auto check_item = [n](int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("item index out of range");
  };
  std::vector<ItemCase> cases(1);
  for (const auto& aug : augs) {
    if (const auto* x = std::get_if<KnapsackExactlyOneOf>(&aug)) {
      check_item(x->item_a);
      check_item(x->item_b);
      if (x->item_a == x->item_b)
        throw std::invalid_argument("exactly-one items coincide");
      std::vector<ItemCase> next;
      for (const auto& c : cases) {
        for (auto [in, out] : {std::pair{x->item_a, x->item_b},
                               std::pair{x->item_b, x->item_a}}) {
          if (c.removed.count(in) || c.forced_in.count(out)) continue;
          ItemCase nc = c;
          nc.forced_in.insert(in);
          nc.removed.insert(out);
          next.push_back(std::move(nc));
        }
      }
      cases = std::move(next);
    } else if (const auto* r = std::get_if<KnapsackCapacityReduction>(&aug)) {
      check_item(r->trigger_item);
      std::vector<ItemCase> next;
      for (const auto& c : cases) {
        if (c.forced_in.count(r->trigger_item)) {
          ItemCase nc = c;
          nc.cap_delta -= r->reduction;
          next.push_back(std::move(nc));
        } else if (c.removed.count(r->trigger_item)) {
          next.push_back(c);
        } else {
          ItemCase with = c;
          with.forced_in.insert(r->trigger_item);
          with.cap_delta -= r->reduction;
          ItemCase without = c;
          without.removed.insert(r->trigger_item);
          next.push_back(std::move(with));
          next.push_back(std::move(without));
        }
      }
      cases = std::move(next);
    } else {
      throw std::invalid_argument("augmentation undefined for class");
    }
  }
  return cases;
}

struct DpResult {
  std::int64_t value = 0;
  std::vector<int> selected;
};

/// Classic O(n·W) table over the free items.
DpResult knapsack_dp(const KnapsackInstance& inst, const std::vector<int>& items,
                     std::int64_t capacity, std::int64_t* cells) {
  const int k = static_cast<int>(items.size());
  const int cap = static_cast<int>(capacity);
  std::vector<std::int64_t> best(cap + 1, 0);
  std::vector<std::vector<char>> take(k, std::vector<char>(cap + 1, 0));
  for (int idx = 0; idx < k; ++idx) {
    const std::int64_t w = inst.weights(items[idx]);
    const std::int64_t v = inst.values(items[idx]);
    for (int c = cap; c >= static_cast<int>(w); --c) {
      if (best[c - w] + v > best[c]) {
        best[c] = best[c - w] + v;
        take[idx][c] = 1;
      }
    }
  }
  *cells += std::int64_t(k) * (cap + 1);
  DpResult res;
  res.value = best[cap];
  int c = cap;
  for (int idx = k - 1; idx >= 0; --idx) {
    if (take[idx][c]) {
      res.selected.push_back(items[idx]);
      c -= static_cast<int>(inst.weights(items[idx]));
    }
  }
  return res;
}

}  // namespace

SolveOutcome solve_knapsack(const KnapsackInstance& instance,
                            const std::vector<AugmentedConstraint>& augs) {
  const auto start = Clock::now();
  if (instance.capacity < 0) throw std::invalid_argument("negative capacity");
  const int n = static_cast<int>(instance.weights.size());

  SolveOutcome outcome;
  bool found = false;
  std::int64_t best_value = 0;
  std::vector<int> best_sel;
  for (const ItemCase& ic : expand_cases(instance, augs)) {
    std::int64_t used = 0, base_value = 0;
    for (int i : ic.forced_in) {
      used += instance.weights(i);
      base_value += instance.values(i);
    }
    const std::int64_t cap = instance.capacity + ic.cap_delta - used;
    if (cap < 0) continue;  // forced set does not fit
    std::vector<int> free_items;
    for (int i = 0; i < n; ++i) {
      if (!ic.forced_in.count(i) && !ic.removed.count(i)) free_items.push_back(i);
    }
    DpResult dp = knapsack_dp(instance, free_items, cap,
                              &outcome.stats.nodes_explored);
    const std::int64_t value = base_value + dp.value;
    if (!found || value > best_value) {
      found = true;
      best_value = value;
      best_sel.assign(ic.forced_in.begin(), ic.forced_in.end());
      best_sel.insert(best_sel.end(), dp.selected.begin(), dp.selected.end());
      std::sort(best_sel.begin(), best_sel.end());
    }
  }
  outcome.stats.elapsed = Clock::now() - start;
  if (!found) {
    outcome.status = SolveStatus::infeasible;
    return outcome;
  }
  outcome.status = SolveStatus::optimal;
  GroundTruth gt;
  gt.objective_value = static_cast<scalar_t>(best_value);
  gt.assignment = ItemSelection{std::move(best_sel)};
  gt.solver_id = "knapsack_dp";
  outcome.ground_truth = std::move(gt);
  return outcome;
}

}  // namespace orbench
