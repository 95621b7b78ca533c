#include "orbench/lp.hpp"

#include <limits>
#include <stdexcept>

#include "orbench/format.hpp"

namespace orbench {

namespace {

constexpr scalar_t kTol = 1e-9;

// Columns: original variables, then one slack/surplus per inequality row,
// then artificials for eq/ge rows.  Full-tableau primal simplex.
struct Tableau {
  matrix_t t;               // m x (ncols + 1); last column is the RHS
  vector_t obj;             // ncols + 1; reduced costs and -objective
  std::vector<index_t> basis;
  index_t ncols = 0;
  index_t n_structural = 0;  // original + slack/surplus (artificials after)
  std::int64_t iterations = 0;

  void pivot(index_t row, index_t col) {
    t.row(row) /= t(row, col);
    for (index_t i = 0; i < t.rows(); ++i) {
      if (i != row && std::abs(t(i, col)) > 0) t.row(i) -= t(i, col) * t.row(row);
    }
    if (std::abs(obj(col)) > 0) obj -= obj(col) * t.row(row).transpose();
    basis[row] = col;
    ++iterations;
  }

  /// Bland: entering = lowest-index negative reduced cost; leaving = min
  /// ratio, ties broken by lowest basic index.  `limit` excludes artificial
  /// columns once phase 2 starts.
  bool iterate(index_t limit, bool& unbounded) {
    if (iterations > 1000000)
      throw std::runtime_error("simplex iteration cap exceeded");
    index_t enter = -1;
    for (index_t j = 0; j < limit; ++j) {
      if (obj(j) < -kTol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return false;  // optimal
    index_t leave = -1;
    scalar_t best_ratio = std::numeric_limits<scalar_t>::infinity();
    for (index_t i = 0; i < t.rows(); ++i) {
      if (t(i, enter) > kTol) {
        scalar_t ratio = t(i, ncols) / t(i, enter);
        if (ratio < best_ratio - kTol ||
            (ratio < best_ratio + kTol &&
             (leave < 0 || basis[i] < basis[leave]))) {
          best_ratio = ratio;
          leave = i;
        }
      }
    }
    if (leave < 0) {
      unbounded = true;
      return false;
    }
    pivot(leave, enter);
    unbounded = false;
    return true;
  }
};

}  // namespace

LpSolution solve_simplex(const LpProblem& lp) {
  const index_t n = lp.objective.size();
  const index_t m = lp.lhs.rows();
  if (lp.rhs.size() != m || static_cast<index_t>(lp.kinds.size()) != m)
    throw std::invalid_argument("inconsistent LP shape");

  // Normalize to min-sense with nonnegative RHS.
  vector_t c = lp.objective;
  if (lp.sense == Sense::maximize) c = -c;
  matrix_t a = lp.lhs;
  vector_t b = lp.rhs;
  std::vector<RowKind> kinds = lp.kinds;
  for (index_t i = 0; i < m; ++i) {
    if (b(i) < 0) {
      a.row(i) = -a.row(i);
      b(i) = -b(i);
      if (kinds[i] == RowKind::le) kinds[i] = RowKind::ge;
      else if (kinds[i] == RowKind::ge) kinds[i] = RowKind::le;
    }
  }

  index_t n_slack = 0, n_art = 0;
  for (RowKind k : kinds) {
    if (k != RowKind::eq) ++n_slack;
    if (k != RowKind::le) ++n_art;
  }
  const index_t n_structural = n + n_slack;
  const index_t ncols = n_structural + n_art;

  Tableau tb;
  tb.ncols = ncols;
  tb.n_structural = n_structural;
  tb.t = matrix_t::Zero(m, ncols + 1);
  tb.t.block(0, 0, m, n) = a;
  tb.t.col(ncols) = b;
  tb.basis.resize(m);

  index_t slack_at = n, art_at = n_structural;
  for (index_t i = 0; i < m; ++i) {
    switch (kinds[i]) {
      case RowKind::le:
        tb.t(i, slack_at) = 1;
        tb.basis[i] = slack_at++;
        break;
      case RowKind::ge:
        tb.t(i, slack_at) = -1;
        ++slack_at;
        tb.t(i, art_at) = 1;
        tb.basis[i] = art_at++;
        break;
      case RowKind::eq:
        tb.t(i, art_at) = 1;
        tb.basis[i] = art_at++;
        break;
    }
  }

  LpSolution sol;

  // Phase 1: minimize the artificial sum.
  if (n_art > 0) {
    tb.obj = vector_t::Zero(ncols + 1);
    for (index_t j = n_structural; j < ncols; ++j) tb.obj(j) = 1;
    for (index_t i = 0; i < m; ++i) {
      if (tb.basis[i] >= n_structural) tb.obj -= tb.t.row(i).transpose();
    }
    bool unbounded = false;
    while (tb.iterate(ncols, unbounded)) {
    }
    const scalar_t art_sum = -tb.obj(ncols);
    if (art_sum > 1e-7) {
      sol.status = LpStatus::infeasible;
      sol.iterations = tb.iterations;
      return sol;
    }
    // Drive leftover artificials out of the basis; rows that cannot pivot on
    // a structural column are redundant and dropped.
    for (index_t i = 0; i < tb.t.rows();) {
      if (tb.basis[i] >= n_structural) {
        index_t col = -1;
        for (index_t j = 0; j < n_structural; ++j) {
          if (std::abs(tb.t(i, j)) > kTol) {
            col = j;
            break;
          }
        }
        if (col >= 0) {
          tb.pivot(i, col);
          ++i;
        } else {
          const index_t last = tb.t.rows() - 1;
          tb.t.row(i) = tb.t.row(last);
          tb.basis[i] = tb.basis[last];
          tb.t.conservativeResize(last, Eigen::NoChange);
          tb.basis.resize(last);
        }
      } else {
        ++i;
      }
    }
  }

  // Phase 2 over structural columns only.
  tb.obj = vector_t::Zero(ncols + 1);
  tb.obj.head(n) = c;
  for (index_t i = 0; i < tb.t.rows(); ++i) {
    if (std::abs(tb.obj(tb.basis[i])) > 0)
      tb.obj -= tb.obj(tb.basis[i]) * tb.t.row(i).transpose();
  }
  bool unbounded = false;
  while (tb.iterate(n_structural, unbounded)) {
  }
  sol.iterations = tb.iterations;
  if (unbounded) {
    sol.status = LpStatus::unbounded;
    return sol;
  }

  sol.status = LpStatus::optimal;
  sol.x = vector_t::Zero(n);
  for (index_t i = 0; i < tb.t.rows(); ++i) {
    if (tb.basis[i] < n) sol.x(tb.basis[i]) = std::max<scalar_t>(0, tb.t(i, ncols));
  }
  scalar_t value = lp.objective.dot(sol.x);
  sol.objective = value;
  sol.reduced_costs = tb.obj.head(n_structural);
  return sol;
}

namespace {

void append_row(LpProblem& lp, const vector_t& row, RowKind kind, scalar_t rhs) {
  const index_t r = lp.lhs.rows();
  lp.lhs.conservativeResize(r + 1, Eigen::NoChange);
  lp.lhs.row(r) = row.transpose();
  lp.rhs.conservativeResize(r + 1);
  lp.rhs(r) = rhs;
  lp.kinds.push_back(kind);
}

LpProblem compile_inventory(const InventoryInstance& v,
                            const std::vector<AugmentedConstraint>& augs) {
  const int T = v.horizon;
  const index_t nv = 3 * T;  // o | I | s
  auto o_col = [&](int t) { return t - 1; };          // t in 1..T
  auto i_col = [&](int t) { return T + t - 1; };
  auto s_col = [&](int t) { return 2 * T + t - 1; };

  LpProblem lp;
  lp.sense = Sense::minimize;
  lp.objective = vector_t::Zero(nv);
  for (int t = 1; t <= T; ++t) {
    lp.objective(o_col(t)) = static_cast<scalar_t>(v.unit_price);
    lp.objective(i_col(t)) = static_cast<scalar_t>(v.holding_cost);
    lp.objective(s_col(t)) = static_cast<scalar_t>(v.shortage_cost);
  }
  lp.lhs = matrix_t::Zero(0, nv);
  lp.rhs = vector_t::Zero(0);
  lp.var_names.resize(nv);
  for (int t = 1; t <= T; ++t) {
    lp.var_names[o_col(t)] = "o[" + fmt_int(t) + "]";
    lp.var_names[i_col(t)] = "I[" + fmt_int(t) + "]";
    lp.var_names[s_col(t)] = "s[" + fmt_int(t) + "]";
  }

  // Order quantity rows.
  for (int t = 1; t <= T; ++t) {
    vector_t row = vector_t::Zero(nv);
    row(o_col(t)) = 1;
    append_row(lp, row, RowKind::le, static_cast<scalar_t>(v.order_max));
  }
  // Balance: I_t - I_{t-1} - o_{t-l} - s_t = -D_t (+ I_0 when t == 1).
  // Receipts a_t = o_{t-l} vanish for t <= l.
  for (int t = 1; t <= T; ++t) {
    vector_t row = vector_t::Zero(nv);
    row(i_col(t)) = 1;
    if (t >= 2) row(i_col(t - 1)) = -1;
    const int tr = t - v.lead_time;
    if (tr >= 1) row(o_col(tr)) = -1;
    row(s_col(t)) = -1;
    scalar_t rhs = -static_cast<scalar_t>(v.demands(t - 1));
    if (t == 1) rhs += static_cast<scalar_t>(v.initial_stock);
    append_row(lp, row, RowKind::eq, rhs);
  }
  // Warehouse: I_{t-1} + a_t <= C.
  for (int t = 1; t <= T; ++t) {
    vector_t row = vector_t::Zero(nv);
    if (t >= 2) row(i_col(t - 1)) = 1;
    const int tr = t - v.lead_time;
    if (tr >= 1) row(o_col(tr)) = 1;
    scalar_t rhs = static_cast<scalar_t>(v.warehouse_cap);
    if (t == 1) rhs -= static_cast<scalar_t>(v.initial_stock);
    append_row(lp, row, RowKind::le, rhs);
  }
  // Nonzero order floor (default ranges keep it at zero).
  if (v.order_min > 0) {
    for (int t = 1; t <= T; ++t) {
      vector_t row = vector_t::Zero(nv);
      row(o_col(t)) = 1;
      append_row(lp, row, RowKind::ge, static_cast<scalar_t>(v.order_min));
    }
  }

  for (const auto& aug : augs) {
    if (const auto* cap = std::get_if<InventoryOrderCap>(&aug)) {
      if (cap->day < 1 || cap->day > T)
        throw std::invalid_argument("order cap day out of range");
      vector_t row = vector_t::Zero(nv);
      row(o_col(cap->day)) = 1;
      append_row(lp, row, RowKind::le, static_cast<scalar_t>(cap->max_order));
    } else if (const auto* floor = std::get_if<InventoryMinStock>(&aug)) {
      if (floor->day < 1 || floor->day > T)
        throw std::invalid_argument("min stock day out of range");
      vector_t row = vector_t::Zero(nv);
      row(i_col(floor->day)) = 1;
      append_row(lp, row, RowKind::ge, static_cast<scalar_t>(floor->min_stock));
    } else {
      throw std::invalid_argument("augmentation undefined for class");
    }
  }
  return lp;
}

LpProblem compile_portfolio(const PortfolioInstance& p) {
  const index_t n = p.returns.size();
  LpProblem lp;
  lp.sense = Sense::maximize;
  lp.objective = p.returns;
  lp.lhs = matrix_t::Zero(0, n);
  lp.rhs = vector_t::Zero(0);
  for (index_t i = 0; i < n; ++i)
    lp.var_names.push_back("x[" + fmt_int(i) + "]");

  append_row(lp, vector_t::Ones(n), RowKind::eq, 1.0);     // budget
  append_row(lp, p.risks, RowKind::le, p.max_risk);        // risk
  append_row(lp, p.returns, RowKind::ge, p.min_return);    // return floor
  vector_t liq = vector_t::Zero(n);
  for (int i : p.liquid) liq(i) = 1;
  append_row(lp, liq, RowKind::ge, p.min_liquidity);       // liquidity
  for (index_t i = 0; i < n; ++i) {                        // box rows
    vector_t row = vector_t::Zero(n);
    row(i) = 1;
    append_row(lp, row, RowKind::ge, p.lower(i));
    append_row(lp, row, RowKind::le, p.upper(i));
  }
  return lp;
}

LpProblem compile_production(const ProductionInstance& p) {
  const index_t n = p.profits.size();
  const index_t m = p.op_capacities.size();
  LpProblem lp;
  lp.sense = Sense::maximize;
  lp.objective = p.profits;
  lp.lhs = matrix_t::Zero(m, n);
  lp.rhs = vector_t::Zero(m);
  for (index_t j = 0; j < m; ++j) {
    lp.lhs.row(j) = p.time_req.col(j).transpose();
    lp.rhs(j) = static_cast<scalar_t>(p.op_capacities(j));
    lp.kinds.push_back(RowKind::le);
  }
  for (index_t i = 0; i < n; ++i)
    lp.var_names.push_back("x[" + fmt_int(i) + "]");
  return lp;
}

LpProblem compile_transportation(const TransportationInstance& t) {
  const index_t n = t.supplies.size();
  const index_t m = t.demands.size();
  LpProblem lp;
  lp.sense = Sense::minimize;
  lp.objective = vector_t::Zero(n * m);
  lp.lhs = matrix_t::Zero(0, n * m);
  lp.rhs = vector_t::Zero(0);
  auto col = [&](index_t i, index_t j) { return i * m + j; };
  for (index_t i = 0; i < n; ++i) {
    for (index_t j = 0; j < m; ++j) {
      lp.objective(col(i, j)) = t.costs(i, j);
      lp.var_names.push_back("x[" + fmt_int(i) + "][" + fmt_int(j) + "]");
    }
  }
  for (index_t i = 0; i < n; ++i) {  // supply
    vector_t row = vector_t::Zero(n * m);
    for (index_t j = 0; j < m; ++j) row(col(i, j)) = 1;
    append_row(lp, row, RowKind::le, static_cast<scalar_t>(t.supplies(i)));
  }
  for (index_t j = 0; j < m; ++j) {  // demand
    vector_t row = vector_t::Zero(n * m);
    for (index_t i = 0; i < n; ++i) row(col(i, j)) = 1;
    append_row(lp, row, RowKind::eq, static_cast<scalar_t>(t.demands(j)));
  }
  return lp;
}

LpProblem compile_pollution(const PollutionInstance& p) {
  const index_t n = p.emission_rates.size();
  LpProblem lp;
  lp.sense = Sense::minimize;
  lp.objective = vector_t::Zero(n * n);
  lp.lhs = matrix_t::Zero(0, n * n);
  lp.rhs = vector_t::Zero(0);
  auto col = [&](index_t i, index_t j) { return i * n + j; };
  for (index_t i = 0; i < n; ++i) {
    for (index_t j = 0; j < n; ++j) {
      lp.objective(col(i, j)) = p.costs(i, j);
      lp.var_names.push_back("x[" + fmt_int(i) + "][" + fmt_int(j) + "]");
    }
  }
  for (index_t i = 0; i < n; ++i) {  // all output assigned to methods
    vector_t row = vector_t::Zero(n * n);
    for (index_t j = 0; j < n; ++j) row(col(i, j)) = 1;
    append_row(lp, row, RowKind::eq, static_cast<scalar_t>(p.outputs(i)));
  }
  // Removed mass must reach the target fraction of the untreated total.
  vector_t row = vector_t::Zero(n * n);
  scalar_t base = 0;
  for (index_t i = 0; i < n; ++i) {
    base += p.emission_rates(i) * static_cast<scalar_t>(p.outputs(i));
    for (index_t j = 0; j < n; ++j)
      row(col(i, j)) = p.emission_rates(i) * p.removal_eff(j);
  }
  append_row(lp, row, RowKind::ge, p.reduction_target * base);
  return lp;
}

LpProblem compile_flow(const MinCostFlowInstance& f) {
  const index_t n = f.supplies.size();
  const index_t m = f.demands.size();
  LpProblem lp;
  lp.sense = Sense::minimize;
  lp.objective = vector_t::Zero(n * m);
  lp.lhs = matrix_t::Zero(0, n * m);
  lp.rhs = vector_t::Zero(0);
  auto col = [&](index_t i, index_t j) { return i * m + j; };
  for (index_t i = 0; i < n; ++i) {
    for (index_t j = 0; j < m; ++j) {
      lp.objective(col(i, j)) = static_cast<scalar_t>(f.costs(i, j));
      lp.var_names.push_back("x[" + fmt_int(i) + "][" + fmt_int(j) + "]");
    }
  }
  for (index_t i = 0; i < n; ++i) {  // supply, equality
    vector_t row = vector_t::Zero(n * m);
    for (index_t j = 0; j < m; ++j) row(col(i, j)) = 1;
    append_row(lp, row, RowKind::eq, static_cast<scalar_t>(f.supplies(i)));
  }
  for (index_t j = 0; j < m; ++j) {  // demand, equality
    vector_t row = vector_t::Zero(n * m);
    for (index_t i = 0; i < n; ++i) row(col(i, j)) = 1;
    append_row(lp, row, RowKind::eq, static_cast<scalar_t>(f.demands(j)));
  }
  for (index_t i = 0; i < n; ++i) {  // arc capacities
    for (index_t j = 0; j < m; ++j) {
      vector_t row = vector_t::Zero(n * m);
      row(col(i, j)) = 1;
      append_row(lp, row, RowKind::le, static_cast<scalar_t>(f.capacities(i, j)));
    }
  }
  return lp;
}

}  // namespace

LpProblem compile_lp(const NumericInstance& instance,
                     const std::vector<AugmentedConstraint>& augs) {
  const ProblemClass cls = class_of(instance);
  if (!augs.empty() && cls != ProblemClass::inventory)
    throw std::invalid_argument("augmentation undefined for class");
  switch (cls) {
    case ProblemClass::inventory:
      return compile_inventory(std::get<InventoryInstance>(instance), augs);
    case ProblemClass::portfolio:
      return compile_portfolio(std::get<PortfolioInstance>(instance));
    case ProblemClass::production:
      return compile_production(std::get<ProductionInstance>(instance));
    case ProblemClass::transportation:
      return compile_transportation(std::get<TransportationInstance>(instance));
    case ProblemClass::pollution_control:
      return compile_pollution(std::get<PollutionInstance>(instance));
    case ProblemClass::min_cost_flow:
      // Not an LP-family class; compiled for the flow/LP cross-check suite.
      return compile_flow(std::get<MinCostFlowInstance>(instance));
    default:
      throw std::invalid_argument("class has no LP formulation");
  }
}

}  // namespace orbench
