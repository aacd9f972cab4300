#include <random>

#include <gtest/gtest.h>

#include "railprice/railcost.hpp"
#include "test_util.hpp"

namespace railprice {
namespace {

using testing::code_of;

Route through(std::vector<std::string> yards) {
  Route r;
  r.nodes.push_back("O");
  for (const auto& y : yards) r.nodes.push_back(y);
  r.nodes.push_back("U");
  r.reclass_yards = std::move(yards);
  r.distance_km = 500;
  return r;
}

TEST(ReclassTimeSaving, EmptyRouteSavesNothing) {
  EXPECT_EQ(reclass_time_saving(through({}), {}, 15, 365), 0.0);
  EXPECT_EQ(reclass_cost_saving(through({}), {}, 15, 365), 0.0);
}

TEST(ReclassTimeSaving, TwoYards) {
  YardTable yards{{"Y1", {1.5, 2.5, 40}}, {"Y2", {1.5, 2.5, 40}}};
  EXPECT_DOUBLE_EQ(reclass_time_saving(through({"Y1", "Y2"}), yards, 15, 365), 43800.0);
}

TEST(ReclassTimeSaving, UnknownYard) {
  YardTable yards{{"Y1", {1.5, 2.5, 40}}};
  EXPECT_EQ(code_of([&] { reclass_time_saving(through({"Y1", "Y2"}), yards, 15, 365); }),
            ErrorCode::UnknownYard);
  EXPECT_EQ(code_of([&] { reclass_cost_saving(through({"Y2"}), yards, 15, 365); }),
            ErrorCode::UnknownYard);
}

TEST(ReclassCostSaving, WorkedExampleAveragingTwoAndAHalfYards) {
  // 2.5 reclassifications at 40 per car: per-car costs totalling 100.
  YardTable yards{{"Y1", {0, 0, 40}}, {"Y2", {0, 0, 40}}, {"Y3", {0, 0, 20}}};
  EXPECT_EQ(reclass_cost_saving(through({"Y1", "Y2", "Y3"}), yards, 15, 365), 547500.0);
}

TEST(ReclassCostSaving, MixedYardCosts) {
  YardTable yards{{"A", {0, 0, 30}}, {"B", {0, 0, 40}}, {"C", {0, 0, 50}}};
  EXPECT_DOUBLE_EQ(reclass_cost_saving(through({"A", "B", "C"}), yards, 10, 30), 36000.0);
}

TEST(CostBreakdown, NoDifferencesAnywhere) {
  auto b = cost_breakdown({}, through({}), {}, 15, 365);
  EXPECT_EQ(b.de_total, 0.0);
  EXPECT_EQ(b.de_car_miles, 0.0);
}

TEST(CostBreakdown, FullDecomposition) {
  RailCostParams params{.gamma = 10, .c_loading_extra = 5, .c_unloading_extra = 5};
  YardTable yards{{"Y1", {1.5, 2.5, 40}}, {"Y2", {1.0, 3.0, 40}}};
  auto b = cost_breakdown(params, through({"Y1", "Y2"}), yards, 15, 365);
  EXPECT_DOUBLE_EQ(b.dg_reclassification, 43800.0);
  EXPECT_DOUBLE_EQ(b.dc_reclassification, 438000.0);
  EXPECT_DOUBLE_EQ(b.de_reclassification, 876000.0);
  EXPECT_DOUBLE_EQ(b.de_loading, -27375.0);
  EXPECT_DOUBLE_EQ(b.de_unloading, -27375.0);
  EXPECT_EQ(b.de_car_miles, 0.0);
  EXPECT_DOUBLE_EQ(b.de_total, 821250.0);
}

TEST(CostBreakdown, LoadingTimeDifferenceEntersThroughGamma) {
  RailCostParams params{.gamma = 10, .dg_loading = 3, .dg_unloading = -2};
  auto b = cost_breakdown(params, through({}), {}, 15, 365);
  EXPECT_DOUBLE_EQ(b.de_loading, 30.0);
  EXPECT_DOUBLE_EQ(b.de_unloading, -20.0);
  EXPECT_DOUBLE_EQ(b.de_total, 10.0);
}

TEST(CostBreakdown, ExpensiveLoadingMakesRailroadLose) {
  RailCostParams params{.c_loading_extra = 1e6};
  EXPECT_LT(cost_breakdown(params, through({}), {}, 15, 365).de_total, 0.0);
}

TEST(CostBreakdown, RejectsInvalidParameters) {
  EXPECT_EQ(code_of([] { cost_breakdown({.gamma = -1}, through({}), {}, 15, 365); }),
            ErrorCode::InvalidCostParams);
  EXPECT_EQ(code_of([] { cost_breakdown({.c_unloading_extra = -1}, through({}), {}, 15, 365); }),
            ErrorCode::InvalidCostParams);
  EXPECT_EQ(code_of([] { cost_breakdown({}, through({}), {}, 0, 365); }),
            ErrorCode::InvalidProfile);
}

TEST(CostProperties, MonotoneAndBilinear) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0, 10), money(0, 100), cars(1, 30), days(1, 400);
  for (int i = 0; i < 200; ++i) {
    RailCostParams p{u(rng), money(rng), money(rng), 0, 0};
    YardTable yards{{"Y1", {u(rng), u(rng), money(rng)}}, {"Y2", {u(rng), u(rng), money(rng)}}};
    const auto route = through({"Y1", "Y2"});
    const double n = cars(rng), t = days(rng);
    const auto base = cost_breakdown(p, route, yards, n, t);

    EXPECT_LE(base.de_loading, 0.0);
    EXPECT_LE(base.de_unloading, 0.0);
    EXPECT_EQ(base.de_car_miles, 0.0);
    EXPECT_DOUBLE_EQ(base.de_total,
                     base.de_loading + base.de_unloading + base.de_reclassification);

    auto slower = yards;
    slower["Y1"].t_classified += u(rng);
    slower["Y2"].c_classified += money(rng);
    EXPECT_GE(cost_breakdown(p, route, slower, n, t).de_total, base.de_total);

    auto pricier = p;
    pricier.c_loading_extra += money(rng);
    pricier.c_unloading_extra += money(rng);
    EXPECT_LE(cost_breakdown(pricier, route, yards, n, t).de_total, base.de_total);

    const double scale = std::abs(base.de_total) + 1.0;
    EXPECT_NEAR(cost_breakdown(p, route, yards, n, 2 * t).de_total, 2 * base.de_total,
                1e-9 * scale);
    EXPECT_NEAR(cost_breakdown(p, route, yards, 2 * n, t).de_total, 2 * base.de_total,
                1e-9 * scale);
  }
}

}  // namespace
}  // namespace railprice
