#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include "orbench/solve.hpp"

namespace orbench {

namespace {

using Clock = std::chrono::steady_clock;
using Edge = std::pair<int, int>;  // normalized, first < second

constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max() / 4;

Edge norm_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

struct HkResult {
  bool feasible = false;
  std::int64_t cost = 0;
  std::vector<int> order;  // node visit order, starts at 0
  std::int64_t states = 0;
};

/// Subset DP over directed tours through all nodes of `w` (possibly
/// asymmetric after contraction).
HkResult held_karp(const std::vector<std::vector<std::int32_t>>& w) {
  const int n = static_cast<int>(w.size());
  HkResult res;
  if (n == 1) {
    res.feasible = true;
    res.order = {0};
    res.states = 1;
    return res;
  }
  const std::size_t full = std::size_t(1) << n;
  std::vector<std::int32_t> dp(full * n, kInf);
  std::vector<std::int8_t> parent(full * n, -1);
  dp[(1u << 0) * n + 0] = 0;
  for (std::size_t mask = 1; mask < full; ++mask) {
    if (!(mask & 1)) continue;  // paths always start at node 0
    for (int j = 0; j < n; ++j) {
      const std::int32_t cur = dp[mask * n + j];
      if (cur >= kInf || !(mask & (std::size_t(1) << j))) continue;
      ++res.states;
      for (int k = 0; k < n; ++k) {
        if (mask & (std::size_t(1) << k)) continue;
        if (w[j][k] >= kInf) continue;
        const std::size_t next = mask | (std::size_t(1) << k);
        const std::int32_t cand = cur + w[j][k];
        if (cand < dp[next * n + k]) {
          dp[next * n + k] = cand;
          parent[next * n + k] = static_cast<std::int8_t>(j);
        }
      }
    }
  }
  std::int64_t best = kInf;
  int best_end = -1;
  for (int j = 1; j < n; ++j) {
    if (dp[(full - 1) * n + j] >= kInf || w[j][0] >= kInf) continue;
    const std::int64_t total = std::int64_t(dp[(full - 1) * n + j]) + w[j][0];
    if (total < best) {
      best = total;
      best_end = j;
    }
  }
  if (best_end < 0) return res;
  res.feasible = true;
  res.cost = best;
  std::size_t mask = full - 1;
  int j = best_end;
  while (j >= 0) {
    res.order.push_back(j);
    const int p = parent[mask * n + j];
    mask &= ~(std::size_t(1) << j);
    j = p;
  }
  std::reverse(res.order.begin(), res.order.end());
  return res;
}

/// One forced/forbidden combination from the exactly-one-of case split.
struct EdgeCase {
  std::set<Edge> forced;
  std::set<Edge> forbidden;
};

std::vector<EdgeCase> expand_cases(
    int n, const std::vector<AugmentedConstraint>& augs) {
  auto check_city = [n](int c) {
    if (c < 0 || c >= n) throw std::invalid_argument("city index out of range");
  };
  std::vector<EdgeCase> cases(1);
  for (const auto& aug : augs) {
    if (const auto* f = std::get_if<TspForbidEdge>(&aug)) {
      check_city(f->i);
      check_city(f->j);
      if (f->i == f->j) throw std::invalid_argument("self-loop edge");
      for (auto& c : cases) c.forbidden.insert(norm_edge(f->i, f->j));
    } else if (const auto* x = std::get_if<TspExactlyOneOf>(&aug)) {
      check_city(x->a1);
      check_city(x->a2);
      check_city(x->b1);
      check_city(x->b2);
      const Edge ea = norm_edge(x->a1, x->a2);
      const Edge eb = norm_edge(x->b1, x->b2);
      if (ea == eb) throw std::invalid_argument("exactly-one edges coincide");
      std::vector<EdgeCase> next;
      for (const auto& c : cases) {
        EdgeCase in_a = c;
        in_a.forced.insert(ea);
        in_a.forbidden.insert(eb);
        EdgeCase in_b = c;
        in_b.forced.insert(eb);
        in_b.forbidden.insert(ea);
        next.push_back(std::move(in_a));
        next.push_back(std::move(in_b));
      }
      cases = std::move(next);
    } else {
      throw std::invalid_argument("augmentation undefined for class");
    }
  }
  return cases;
}

struct CaseSolution {
  bool feasible = false;
  std::int64_t cost = 0;
  std::vector<int> tour;  // city order
  std::int64_t states = 0;
};

/// Forced edges become oriented chains contracted into supernodes; the
/// remaining asymmetric instance goes through the subset DP.
CaseSolution solve_case(const std::vector<std::vector<std::int32_t>>& dist,
                        const EdgeCase& ec) {
  const int n = static_cast<int>(dist.size());
  CaseSolution out;
  for (const Edge& e : ec.forced) {
    if (ec.forbidden.count(e)) return out;  // contradictory case
  }

  // Forced subgraph must be a union of simple paths (or one full cycle).
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : ec.forced) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
    if (adj[e.first].size() > 2 || adj[e.second].size() > 2) return out;
  }

  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> chains;  // oriented vertex sequences
  int edges_in_chains = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0 || adj[v].empty()) continue;
    if (adj[v].size() == 2) continue;  // interior; start from an endpoint
    std::vector<int> chain{v};
    comp[v] = static_cast<int>(chains.size());
    int prev = -1, cur = v;
    while (true) {
      int next = -1;
      for (int u : adj[cur]) {
        if (u != prev) next = u;
      }
      if (next < 0) break;
      if (comp[next] >= 0) return out;  // touched twice: not a simple path
      comp[next] = static_cast<int>(chains.size());
      chain.push_back(next);
      prev = cur;
      cur = next;
    }
    edges_in_chains += static_cast<int>(chain.size()) - 1;
    chains.push_back(std::move(chain));
  }
  if (edges_in_chains != static_cast<int>(ec.forced.size())) {
    // Leftover forced edges form a cycle.  Only a Hamiltonian one is a tour.
    if (static_cast<int>(ec.forced.size()) == n && chains.empty()) {
      bool all_covered = true;
      for (int v = 0; v < n; ++v) {
        if (adj[v].size() != 2) all_covered = false;
      }
      if (all_covered) {
        std::vector<int> tour{0};
        int prev = -1, cur = 0;
        while (true) {
          int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
          if (next == 0) break;
          tour.push_back(next);
          prev = cur;
          cur = next;
        }
        if (static_cast<int>(tour.size()) != n) return out;  // disjoint cycles
        std::int64_t cost = 0;
        for (int k = 0; k < n; ++k) {
          const int a = tour[k], b = tour[(k + 1) % n];
          if (dist[a][b] >= kInf) return out;
          cost += dist[a][b];
        }
        out.feasible = true;
        out.cost = cost;
        out.tour = std::move(tour);
      }
    }
    return out;
  }

  std::vector<int> free_cities;
  for (int v = 0; v < n; ++v) {
    if (adj[v].empty()) free_cities.push_back(v);
  }

  const int p = static_cast<int>(chains.size());
  const int reduced_n = static_cast<int>(free_cities.size()) + p;
  auto edge_cost = [&](int a, int b) -> std::int32_t {
    if (ec.forbidden.count(norm_edge(a, b))) return kInf;
    return dist[a][b];
  };

  bool found = false;
  for (int orient = 0; orient < (1 << p); ++orient) {
    // head = entry city, tail = exit city of each oriented chain
    std::vector<std::vector<int>> seq(p);
    std::int64_t internal = 0;
    bool ok = true;
    for (int ci = 0; ci < p; ++ci) {
      seq[ci] = chains[ci];
      if (orient & (1 << ci)) std::reverse(seq[ci].begin(), seq[ci].end());
      for (std::size_t k = 0; k + 1 < seq[ci].size(); ++k) {
        const std::int32_t c = dist[seq[ci][k]][seq[ci][k + 1]];
        if (c >= kInf) ok = false;
        internal += c;
      }
    }
    if (!ok) continue;

    // Reduced node u: 0..p-1 are chains, then the free cities.
    auto in_city = [&](int u) {
      return u < p ? seq[u].front() : free_cities[u - p];
    };
    auto out_city = [&](int u) {
      return u < p ? seq[u].back() : free_cities[u - p];
    };

    if (reduced_n == 1) {
      // A single Hamiltonian chain; close it directly.
      const std::int32_t closing = edge_cost(out_city(0), in_city(0));
      if (closing >= kInf) continue;
      const std::int64_t cost = internal + closing;
      if (!found || cost < out.cost) {
        found = true;
        out.cost = cost;
        out.tour = seq[0];
      }
      continue;
    }

    std::vector<std::vector<std::int32_t>> reduced(
        reduced_n, std::vector<std::int32_t>(reduced_n, kInf));
    for (int u = 0; u < reduced_n; ++u) {
      for (int v = 0; v < reduced_n; ++v) {
        if (u != v) reduced[u][v] = edge_cost(out_city(u), in_city(v));
      }
    }
    HkResult hk = held_karp(reduced);
    out.states += hk.states;
    if (!hk.feasible) continue;
    const std::int64_t cost = internal + hk.cost;
    if (!found || cost < out.cost) {
      found = true;
      out.cost = cost;
      out.tour.clear();
      for (int u : hk.order) {
        if (u < p)
          out.tour.insert(out.tour.end(), seq[u].begin(), seq[u].end());
        else
          out.tour.push_back(free_cities[u - p]);
      }
    }
  }
  out.feasible = found;
  return out;
}

/// Start at city 0 and prefer the lexicographically smaller direction, so
/// equal-cost solves are byte-stable.
void canonicalize(std::vector<int>& tour) {
  auto at0 = std::find(tour.begin(), tour.end(), 0);
  std::rotate(tour.begin(), at0, tour.end());
  if (tour.size() > 2 && tour[1] > tour[tour.size() - 1]) {
    std::reverse(tour.begin() + 1, tour.end());
  }
}

std::vector<std::vector<std::int32_t>> scaled_distances(const TspInstance& t) {
  const int n = static_cast<int>(t.dist.rows());
  std::vector<std::vector<std::int32_t>> w(n, std::vector<std::int32_t>(n, kInf));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // 1-decimal distances scale exactly to integers.
      if (i != j) w[i][j] = static_cast<std::int32_t>(std::llround(t.dist(i, j) * 10.0));
    }
  }
  return w;
}

}  // namespace

SolveOutcome solve_tsp(const TspInstance& instance,
                       const std::vector<AugmentedConstraint>& augs) {
  const auto start = Clock::now();
  const int n = static_cast<int>(instance.dist.rows());
  if (n < 3) throw std::invalid_argument("tsp requires at least 3 cities");
  SolveOutcome outcome;
  if (n > kTspMaxCities) {
    outcome.status = SolveStatus::size_exceeded;
    return outcome;
  }

  const auto w = scaled_distances(instance);
  bool found = false;
  std::int64_t best_cost = 0;
  std::vector<int> best_tour;
  for (const EdgeCase& ec : expand_cases(n, augs)) {
    CaseSolution cs = solve_case(w, ec);
    outcome.stats.nodes_explored += cs.states;
    if (cs.feasible && (!found || cs.cost < best_cost)) {
      found = true;
      best_cost = cs.cost;
      best_tour = std::move(cs.tour);
    }
  }
  outcome.stats.elapsed = Clock::now() - start;
  if (!found) {
    outcome.status = SolveStatus::infeasible;
    return outcome;
  }
  canonicalize(best_tour);
  outcome.status = SolveStatus::optimal;
  GroundTruth gt;
  gt.objective_value = static_cast<scalar_t>(best_cost) / 10.0;
  gt.assignment = TourOrder{std::move(best_tour)};
  gt.solver_id = "held_karp";
  outcome.ground_truth = std::move(gt);
  return outcome;
}

namespace detail {

/// Tour-existence check used by the feasibility oracle: depth-first search
/// for any Hamiltonian cycle under the same case machinery, no cost mindset.
bool tsp_feasible(const TspInstance& instance,
                  const std::vector<AugmentedConstraint>& augs,
                  std::vector<int>* witness) {
  const int n = static_cast<int>(instance.dist.rows());
  if (n < 3) return false;
  if (augs.empty()) {
    if (witness) {
      witness->resize(n);
      for (int i = 0; i < n; ++i) (*witness)[i] = i;
    }
    return true;
  }
  const auto w = scaled_distances(instance);
  for (const EdgeCase& ec : expand_cases(n, augs)) {
    CaseSolution cs = solve_case(w, ec);
    if (cs.feasible) {
      if (witness) *witness = cs.tour;
      return true;
    }
  }
  return false;
}

}  // namespace detail

}  // namespace orbench
