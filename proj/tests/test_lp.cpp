#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "orbench/generate.hpp"
#include "orbench/lp.hpp"
#include "orbench/solve.hpp"

using namespace orbench;

namespace {

void check_certificate(const LpProblem& lp, const LpSolution& sol) {
  REQUIRE(sol.status == LpStatus::optimal);
  // Primal residuals within 1e-9.
  for (index_t r = 0; r < lp.lhs.rows(); ++r) {
    const scalar_t lhs = lp.lhs.row(r).dot(sol.x);
    switch (lp.kinds[r]) {
      case RowKind::le: CHECK(lhs <= lp.rhs(r) + 1e-9); break;
      case RowKind::ge: CHECK(lhs >= lp.rhs(r) - 1e-9); break;
      case RowKind::eq: CHECK(std::abs(lhs - lp.rhs(r)) <= 1e-9); break;
    }
  }
  CHECK((sol.x.array() >= -1e-9).all());
  // Reduced costs of the internal minimization are sign-consistent.
  CHECK(sol.reduced_costs.minCoeff() >= -1e-9);
}

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("single binding row: max 5x s.t. 2x <= 10") {
  ProductionInstance p;
  p.profits = vector_t::Constant(1, 5.0);
  p.time_req = matrix_t::Constant(1, 1, 2.0);
  p.op_capacities = ivector_t::Constant(1, 10);
  const SolveOutcome outcome = solve_lp(NumericInstance{p});
  REQUIRE(outcome.status == SolveStatus::optimal);
  CHECK(outcome.ground_truth->objective_value == doctest::Approx(25.0));
  const auto& x = std::get<VectorAssignment>(outcome.ground_truth->assignment);
  CHECK(x.x(0) == doctest::Approx(5.0));
}

TEST_CASE("classic two-variable polytope: optimum 36 at (2,6)") {
  LpProblem lp;
  lp.sense = Sense::maximize;
  lp.objective = vector_t(2);
  lp.objective << 3, 5;
  lp.lhs = matrix_t(3, 2);
  lp.lhs << 1, 0, 0, 2, 3, 2;
  lp.rhs = vector_t(3);
  lp.rhs << 4, 12, 18;
  lp.kinds = {RowKind::le, RowKind::le, RowKind::le};
  lp.var_names = {"x1", "x2"};

  const auto vertex_best = oracle::lp_vertex_best(lp);
  REQUIRE(vertex_best.has_value());
  CHECK(*vertex_best == doctest::Approx(36.0));

  const LpSolution sol = solve_simplex(lp);
  check_certificate(lp, sol);
  CHECK(sol.objective == doctest::Approx(36.0));
  CHECK(sol.x(0) == doctest::Approx(2.0));
  CHECK(sol.x(1) == doctest::Approx(6.0));
}

TEST_CASE("portfolio with unreachable return floor is infeasible") {
  PortfolioInstance p;
  p.returns = vector_t(2);
  p.returns << 0.05, 0.08;
  p.risks = vector_t(2);
  p.risks << 0.1, 0.1;
  p.lower = vector_t::Zero(2);
  p.upper = vector_t::Ones(2);
  p.liquid = {0};
  p.min_liquidity = 0.0;
  p.min_return = 0.2;  // above every asset's return
  p.max_risk = 1.0;
  CHECK(solve_lp(NumericInstance{p}).status == SolveStatus::infeasible);
}

TEST_CASE("compile_lp shapes") {
  SUBCASE("transportation n=2: 4 columns, 2 le supply + 2 eq demand rows") {
    TransportationInstance t;
    t.supplies = ivector_t::Constant(2, 10);
    t.demands = ivector_t::Constant(2, 8);
    t.costs = matrix_t::Constant(2, 2, 1.5);
    const LpProblem lp = compile_lp(NumericInstance{t});
    CHECK(lp.objective.size() == 4);
    REQUIRE(lp.kinds.size() == 4);
    CHECK(lp.kinds[0] == RowKind::le);
    CHECK(lp.kinds[1] == RowKind::le);
    CHECK(lp.kinds[2] == RowKind::eq);
    CHECK(lp.kinds[3] == RowKind::eq);
  }
  SUBCASE("inventory T=3, lead 1: receipts are the previous day's order") {
    InventoryInstance v;
    v.horizon = 3;
    v.initial_stock = 5;
    v.order_min = 0;
    v.order_max = 40;
    v.lead_time = 1;
    v.demands = ivector_t::Constant(3, 10);
    v.warehouse_cap = 100;
    v.unit_price = 2;
    v.holding_cost = 1;
    v.shortage_cost = 4;
    const LpProblem lp = compile_lp(NumericInstance{v});
    // Layout: o[1..3] I[1..3] s[1..3]; rows: 3 order, 3 balance, 3 warehouse.
    REQUIRE(lp.lhs.rows() == 9);
    REQUIRE(lp.objective.size() == 9);
    const int balance0 = 3;
    CHECK(lp.lhs(balance0, 0) == 0.0);      // a_1 = 0 when lead = 1
    CHECK(lp.lhs(balance0 + 1, 0) == -1.0);  // a_2 = o_1
    CHECK(lp.lhs(balance0 + 2, 1) == -1.0);  // a_3 = o_2
    CHECK(lp.rhs(balance0) == doctest::Approx(5.0 - 10.0));  // I_0 - D_1
    CHECK(lp.var_names[0] == "o[1]");
    CHECK(lp.var_names[3] == "I[1]");
    CHECK(lp.var_names[6] == "s[1]");
  }
  SUBCASE("pollution n=2: 2 production rows + 1 reduction row, 4 columns") {
    PollutionInstance p;
    p.emission_rates = vector_t::Constant(2, 2.0);
    p.outputs = ivector_t::Constant(2, 100);
    p.removal_eff = vector_t(2);
    p.removal_eff << 0.3, 0.8;
    p.costs = matrix_t::Constant(2, 2, 5.0);
    p.reduction_target = 0.5;
    const LpProblem lp = compile_lp(NumericInstance{p});
    CHECK(lp.objective.size() == 4);
    REQUIRE(lp.kinds.size() == 3);
    CHECK(lp.kinds[0] == RowKind::eq);
    CHECK(lp.kinds[1] == RowKind::eq);
    CHECK(lp.kinds[2] == RowKind::ge);
  }
}

TEST_CASE("inventory augmentations enter as rows and bind") {
  InventoryInstance v;
  v.horizon = 2;
  v.initial_stock = 0;
  v.order_min = 0;
  v.order_max = 20;
  v.lead_time = 0;
  v.demands = ivector_t(2);
  v.demands << 10, 0;
  v.warehouse_cap = 50;
  v.unit_price = 2;
  v.holding_cost = 1;
  v.shortage_cost = 5;

  const scalar_t base =
      solve_lp(NumericInstance{v}).ground_truth->objective_value;
  CHECK(base == doctest::Approx(20.0));  // order exactly the demand

  const std::vector<AugmentedConstraint> augs{InventoryOrderCap{1, 5}};
  const LpProblem lp = compile_lp(NumericInstance{v}, augs);
  CHECK(lp.lhs.rows() == 7);  // 6 canonical rows + 1 cap row
  const SolveOutcome capped = solve_lp(NumericInstance{v}, augs);
  REQUIRE(capped.status == SolveStatus::optimal);
  // Order 5 at cost 10, five units short at cost 25.
  CHECK(capped.ground_truth->objective_value == doctest::Approx(35.0));
  const auto& plan = std::get<InventoryPlan>(capped.ground_truth->assignment);
  CHECK(plan.orders(0) <= 5.0 + 1e-9);
}

TEST_CASE("inventory lead time: receipts lag orders, late orders never land") {
  SUBCASE("an order on day one arrives on day three") {
    InventoryInstance v;
    v.horizon = 3;
    v.initial_stock = 0;
    v.order_min = 0;
    v.order_max = 20;
    v.lead_time = 2;
    v.demands = ivector_t(3);
    v.demands << 0, 0, 8;
    v.warehouse_cap = 50;
    v.unit_price = 2;
    v.holding_cost = 1;
    v.shortage_cost = 5;
    const SolveOutcome outcome = solve_lp(NumericInstance{v});
    REQUIRE(outcome.status == SolveStatus::optimal);
    // Order 8 on day one (cost 16); shortages would cost 40.
    CHECK(outcome.ground_truth->objective_value == doctest::Approx(16.0));
    const auto& plan = std::get<InventoryPlan>(outcome.ground_truth->assignment);
    CHECK(plan.orders(0) == doctest::Approx(8.0));
    CHECK(oracle::lp_vertex_best(compile_lp(NumericInstance{v})) ==
          doctest::Approx(16.0));
  }
  SUBCASE("a horizon shorter than the lead time lives off initial stock") {
    InventoryInstance v;
    v.horizon = 2;
    v.initial_stock = 6;
    v.order_min = 0;
    v.order_max = 20;
    v.lead_time = 2;
    v.demands = ivector_t(2);
    v.demands << 5, 5;
    v.warehouse_cap = 50;
    v.unit_price = 2;
    v.holding_cost = 1;
    v.shortage_cost = 5;
    const SolveOutcome outcome = solve_lp(NumericInstance{v});
    REQUIRE(outcome.status == SolveStatus::optimal);
    // Hold one unit overnight, lose four units on day two: 1*1 + 5*4.
    CHECK(outcome.ground_truth->objective_value == doctest::Approx(21.0));
    const auto& plan = std::get<InventoryPlan>(outcome.ground_truth->assignment);
    CHECK(plan.orders.sum() == doctest::Approx(0.0));  // ordering never lands
  }
}

TEST_CASE("transportation with slack supply ships the cheap diagonal") {
  TransportationInstance t;
  t.supplies = ivector_t::Constant(2, 10);
  t.demands = ivector_t::Constant(2, 5);
  t.costs = matrix_t(2, 2);
  t.costs << 1.0, 10.0, 10.0, 1.0;
  const SolveOutcome outcome = solve_lp(NumericInstance{t});
  REQUIRE(outcome.status == SolveStatus::optimal);
  CHECK(outcome.ground_truth->objective_value == doctest::Approx(10.0));
  const auto& ship = std::get<MatrixAssignment>(outcome.ground_truth->assignment);
  CHECK(ship.x(0, 0) == doctest::Approx(5.0));
  CHECK(ship.x(1, 1) == doctest::Approx(5.0));
}

TEST_CASE("pollution removal accounting weights by source emission rate") {
  PollutionInstance p;
  p.emission_rates = vector_t(2);
  p.emission_rates << 2.0, 1.0;
  p.outputs = ivector_t::Constant(2, 10);
  p.removal_eff = vector_t(2);
  p.removal_eff << 0.2, 0.8;
  p.costs = matrix_t(2, 2);
  p.costs << 1.0, 4.0, 1.0, 4.0;
  p.reduction_target = 0.5;
  const SolveOutcome outcome = solve_lp(NumericInstance{p});
  REQUIRE(outcome.status == SolveStatus::optimal);
  // Treat 7.5 units of the dirty source with the strong method:
  // 20 + 3 * 7.5 = 42.5, the removal row binding at half of 30.
  CHECK(outcome.ground_truth->objective_value == doctest::Approx(42.5));
  CHECK(oracle::lp_vertex_best(compile_lp(NumericInstance{p})) ==
        doctest::Approx(42.5));
}

TEST_CASE("portfolio binds the risk cap and the liquidity floor together") {
  PortfolioInstance p;
  p.returns = vector_t(2);
  p.returns << 0.1, 0.2;
  p.risks = vector_t(2);
  p.risks << 0.1, 0.4;
  p.lower = vector_t::Zero(2);
  p.upper = vector_t::Ones(2);
  p.liquid = {0};
  p.min_liquidity = 0.3;
  p.min_return = 0.0;
  p.max_risk = 0.25;
  const SolveOutcome outcome = solve_lp(NumericInstance{p});
  REQUIRE(outcome.status == SolveStatus::optimal);
  // Risk cap allows at most half in the high-return asset.
  CHECK(outcome.ground_truth->objective_value == doctest::Approx(0.15));
  const auto& w = std::get<VectorAssignment>(outcome.ground_truth->assignment);
  CHECK(w.x(1) == doctest::Approx(0.5));
}

TEST_CASE("unbounded LPs are reported") {
  LpProblem lp;
  lp.sense = Sense::maximize;
  lp.objective = vector_t::Ones(1);
  lp.lhs = matrix_t::Zero(1, 1);
  lp.rhs = vector_t::Zero(1);
  lp.kinds = {RowKind::ge};  // 0 >= 0, no restraint on x
  lp.var_names = {"x"};
  CHECK(solve_simplex(lp).status == LpStatus::unbounded);
}

TEST_CASE("each LP class agrees with vertex enumeration at small theta") {
  GeneratorConfig cfg;
  const std::vector<std::pair<ProblemClass, int>> points = {
      {ProblemClass::inventory, 2},    {ProblemClass::portfolio, 2},
      {ProblemClass::portfolio, 3},    {ProblemClass::production, 2},
      {ProblemClass::transportation, 2}, {ProblemClass::pollution_control, 2},
  };
  for (const auto& [cls, size] : points) {
    CAPTURE(to_string(cls));
    for (int trial = 0; trial < 25; ++trial) {
      cfg.seed = derive_instance_seed(9000 + static_cast<int>(cls), trial);
      const auto inst = generate(cls, make_theta(cls, size), cfg);
      const LpProblem lp = compile_lp(inst);
      const auto vertex_best = oracle::lp_vertex_best(lp);
      REQUIRE(vertex_best.has_value());
      const SolveOutcome outcome = solve_lp(inst);
      REQUIRE(outcome.status == SolveStatus::optimal);
      const scalar_t got = outcome.ground_truth->objective_value;
      CHECK(std::abs(got - *vertex_best) <=
            1e-9 * std::max<scalar_t>(1.0, std::abs(*vertex_best)));
    }
  }
}

TEST_CASE("random row systems agree with vertex enumeration") {
  // Feasibility is pointed (x >= 0), so a nonempty region has a vertex and
  // the enumeration oracle returns a value exactly when the LP is feasible.
  int optimal_seen = 0, infeasible_seen = 0, unbounded_seen = 0;
  Rng rng(0xFEEDFACE);
  for (int trial = 0; trial < 300; ++trial) {
    const index_t n = 2 + trial % 2;
    const index_t m = 1 + static_cast<index_t>(rng.int_in(0, 4));
    LpProblem lp;
    lp.sense = rng.coin() ? Sense::minimize : Sense::maximize;
    lp.objective = vector_t(n);
    for (index_t j = 0; j < n; ++j)
      lp.objective(j) = static_cast<scalar_t>(rng.int_in(-5, 5));
    lp.lhs = matrix_t(m, n);
    lp.rhs = vector_t(m);
    for (index_t r = 0; r < m; ++r) {
      for (index_t j = 0; j < n; ++j)
        lp.lhs(r, j) = static_cast<scalar_t>(rng.int_in(-5, 5));
      lp.rhs(r) = static_cast<scalar_t>(rng.int_in(-10, 20));
      const int kind = static_cast<int>(rng.int_in(0, 2));
      lp.kinds.push_back(kind == 0 ? RowKind::le
                         : kind == 1 ? RowKind::ge : RowKind::eq);
    }
    for (index_t j = 0; j < n; ++j) lp.var_names.push_back("x");

    const auto vertex_best = oracle::lp_vertex_best(lp);
    const LpSolution sol = solve_simplex(lp);
    CAPTURE(trial);
    if (!vertex_best) {
      CHECK(sol.status == LpStatus::infeasible);
      ++infeasible_seen;
      continue;
    }
    REQUIRE(sol.status != LpStatus::infeasible);
    if (sol.status == LpStatus::optimal) {
      ++optimal_seen;
      CHECK(std::abs(sol.objective - *vertex_best) <=
            1e-7 * std::max<scalar_t>(1.0, std::abs(*vertex_best)));
    } else {
      ++unbounded_seen;
      // Boxing the variables must beat every vertex by a wide margin.
      LpProblem boxed = lp;
      for (index_t j = 0; j < n; ++j) {
        vector_t row = vector_t::Zero(n);
        row(j) = 1;
        const index_t r = boxed.lhs.rows();
        boxed.lhs.conservativeResize(r + 1, Eigen::NoChange);
        boxed.lhs.row(r) = row.transpose();
        boxed.rhs.conservativeResize(r + 1);
        boxed.rhs(r) = 1e6;
        boxed.kinds.push_back(RowKind::le);
      }
      const LpSolution capped = solve_simplex(boxed);
      REQUIRE(capped.status == LpStatus::optimal);
      const scalar_t gain = lp.sense == Sense::minimize
                                ? *vertex_best - capped.objective
                                : capped.objective - *vertex_best;
      CHECK(gain > 1e3);
    }
  }
  CHECK(optimal_seen > 0);
  CHECK(infeasible_seen > 0);
  CHECK(unbounded_seen > 0);
}

TEST_CASE("simplex certificate holds on generated instances") {
  GeneratorConfig cfg;
  for (ProblemClass cls : {ProblemClass::inventory, ProblemClass::portfolio,
                           ProblemClass::production, ProblemClass::transportation,
                           ProblemClass::pollution_control}) {
    for (int trial = 0; trial < 10; ++trial) {
      cfg.seed = derive_instance_seed(414, trial * 10 + static_cast<int>(cls));
      const auto inst = generate(cls, make_theta(cls, 3), cfg);
      const LpProblem lp = compile_lp(inst);
      check_certificate(lp, solve_simplex(lp));
    }
  }
}

}  // TEST_SUITE
