#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace orbench::oracle {

namespace {

using Edge = std::pair<int, int>;

Edge norm_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::set<Edge> tour_edges(const std::vector<int>& tour) {
  std::set<Edge> edges;
  const int n = static_cast<int>(tour.size());
  for (int k = 0; k < n; ++k)
    edges.insert(norm_edge(tour[k], tour[(k + 1) % n]));
  return edges;
}

bool tour_ok(const std::set<Edge>& edges,
             const std::vector<AugmentedConstraint>& augs) {
  for (const auto& aug : augs) {
    if (const auto* f = std::get_if<TspForbidEdge>(&aug)) {
      if (edges.count(norm_edge(f->i, f->j))) return false;
    } else if (const auto* x = std::get_if<TspExactlyOneOf>(&aug)) {
      const int used = static_cast<int>(edges.count(norm_edge(x->a1, x->a2))) +
                       static_cast<int>(edges.count(norm_edge(x->b1, x->b2)));
      if (used != 1) return false;
    }
  }
  return true;
}

}  // namespace

bool tsp_tour_satisfies(const std::vector<int>& tour,
                        const std::vector<AugmentedConstraint>& augs) {
  return tour_ok(tour_edges(tour), augs);
}

std::optional<scalar_t> tsp_best(const TspInstance& instance,
                                 const std::vector<AugmentedConstraint>& augs) {
  const int n = static_cast<int>(instance.dist.rows());
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::optional<scalar_t> best;
  do {
    std::vector<int> tour{0};
    tour.insert(tour.end(), rest.begin(), rest.end());
    if (!tour_ok(tour_edges(tour), augs)) continue;
    scalar_t total = 0;
    for (int k = 0; k < n; ++k) total += instance.dist(tour[k], tour[(k + 1) % n]);
    if (!best || total < *best) best = total;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

std::optional<std::int64_t> knapsack_best(
    const KnapsackInstance& instance,
    const std::vector<AugmentedConstraint>& augs) {
  const int n = static_cast<int>(instance.weights.size());
  std::optional<std::int64_t> best;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    auto in = [&](int i) { return (subset >> i) & 1u; };
    std::int64_t cap = instance.capacity;
    bool ok = true;
    for (const auto& aug : augs) {
      if (const auto* x = std::get_if<KnapsackExactlyOneOf>(&aug)) {
        if (in(x->item_a) + in(x->item_b) != 1) ok = false;
      } else if (const auto* r = std::get_if<KnapsackCapacityReduction>(&aug)) {
        if (in(r->trigger_item)) cap -= r->reduction;
      }
    }
    if (!ok) continue;
    std::int64_t weight = 0, value = 0;
    for (int i = 0; i < n; ++i) {
      if (in(i)) {
        weight += instance.weights(i);
        value += instance.values(i);
      }
    }
    if (weight > cap) continue;
    if (!best || value > *best) best = value;
  }
  return best;
}

namespace {

void partition_rec(const BinPackingInstance& inst, std::size_t item,
                   std::vector<std::int64_t>& load, int used, int& best) {
  if (used >= best) return;
  if (item == static_cast<std::size_t>(inst.weights.size())) {
    best = used;
    return;
  }
  const std::int64_t w = inst.weights(item);
  for (int b = 0; b < used; ++b) {
    if (load[b] + w <= inst.bin_capacity) {
      load[b] += w;
      partition_rec(inst, item + 1, load, used, best);
      load[b] -= w;
    }
  }
  load[used] = w;
  partition_rec(inst, item + 1, load, used + 1, best);
  load[used] = 0;
}

}  // namespace

int bin_packing_best(const BinPackingInstance& instance) {
  const int n = static_cast<int>(instance.weights.size());
  std::vector<std::int64_t> load(n, 0);
  int best = n + 1;
  partition_rec(instance, 0, load, 0, best);
  return best;
}

namespace {

void schedule_rec(const JobShopInstance& inst, std::vector<std::size_t>& next,
                  std::vector<std::int64_t>& job_ready,
                  std::vector<std::int64_t>& machine_ready, std::size_t done,
                  std::size_t total, std::int64_t makespan, std::int64_t& best) {
  if (done == total) {
    best = std::min(best, makespan);
    return;
  }
  for (std::size_t j = 0; j < inst.jobs.size(); ++j) {
    if (next[j] >= inst.jobs[j].size()) continue;
    const auto& op = inst.jobs[j][next[j]];
    const std::int64_t begin = std::max(job_ready[j], machine_ready[op.machine]);
    const std::int64_t end = begin + op.duration;
    const std::int64_t pj = job_ready[j], pm = machine_ready[op.machine];
    ++next[j];
    job_ready[j] = end;
    machine_ready[op.machine] = end;
    schedule_rec(inst, next, job_ready, machine_ready, done + 1, total,
                 std::max(makespan, end), best);
    --next[j];
    job_ready[j] = pj;
    machine_ready[op.machine] = pm;
  }
}

}  // namespace

std::int64_t job_shop_best(const JobShopInstance& instance) {
  std::size_t total = 0;
  for (const auto& job : instance.jobs) total += job.size();
  std::vector<std::size_t> next(instance.jobs.size(), 0);
  std::vector<std::int64_t> job_ready(instance.jobs.size(), 0);
  std::vector<std::int64_t> machine_ready(instance.n_machines, 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  schedule_rec(instance, next, job_ready, machine_ready, 0, total, 0, best);
  return best;
}

std::optional<scalar_t> lp_vertex_best(const LpProblem& lp) {
  const index_t n = lp.objective.size();
  // Row system: the LP rows plus one x_i >= 0 row per variable.
  const index_t m = lp.lhs.rows() + n;
  auto row_of = [&](index_t r) -> vector_t {
    if (r < lp.lhs.rows()) return lp.lhs.row(r).transpose();
    vector_t e = vector_t::Zero(n);
    e(r - lp.lhs.rows()) = 1;
    return e;
  };
  auto rhs_of = [&](index_t r) -> scalar_t {
    return r < lp.lhs.rows() ? lp.rhs(r) : 0;
  };
  auto feasible = [&](const vector_t& x) {
    constexpr scalar_t tol = 1e-7;
    for (index_t r = 0; r < lp.lhs.rows(); ++r) {
      const scalar_t lhs = lp.lhs.row(r).dot(x);
      switch (lp.kinds[r]) {
        case RowKind::le:
          if (lhs > lp.rhs(r) + tol) return false;
          break;
        case RowKind::ge:
          if (lhs < lp.rhs(r) - tol) return false;
          break;
        case RowKind::eq:
          if (std::abs(lhs - lp.rhs(r)) > tol) return false;
          break;
      }
    }
    return (x.array() >= -tol).all();
  };

  std::optional<scalar_t> best;
  std::vector<index_t> pick(n);
  // Enumerate all size-n active sets.
  std::vector<index_t> idx(n);
  std::function<void(index_t, index_t)> combos = [&](index_t start, index_t k) {
    if (k == n) {
      matrix_t a(n, n);
      vector_t b(n);
      for (index_t r = 0; r < n; ++r) {
        a.row(r) = row_of(idx[r]).transpose();
        b(r) = rhs_of(idx[r]);
      }
      Eigen::FullPivLU<matrix_t> lu(a);
      if (!lu.isInvertible()) return;
      const vector_t x = lu.solve(b);
      if (!feasible(x)) return;
      const scalar_t value = lp.objective.dot(x);
      if (!best) {
        best = value;
      } else if (lp.sense == Sense::minimize) {
        best = std::min(*best, value);
      } else {
        best = std::max(*best, value);
      }
      return;
    }
    for (index_t r = start; r <= m - (n - k); ++r) {
      idx[k] = r;
      combos(r + 1, k + 1);
    }
  };
  combos(0, 0);
  return best;
}

}  // namespace orbench::oracle
