#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "railprice/error.hpp"

namespace railprice {

struct TradeoffInputs {
  double de_total = 0.0;     // railroad saving from the entire train
  double price = 0.0;        // undiscounted rail charge, > 0
  double c_inventory = 0.0;  // customer's extra inventory cost, >= 0

  bool operator==(const TradeoffInputs&) const = default;
};

enum class TradeoffCase {
  Case1RailroadRefuses,
  Case2CustomerRefuses,
  Case3RailroadRefusesAtBeta,
  Case4WinWin,
};

constexpr std::string_view to_string(TradeoffCase c) {
  switch (c) {
    case TradeoffCase::Case1RailroadRefuses: return "CASE1_RAILROAD_REFUSES";
    case TradeoffCase::Case2CustomerRefuses: return "CASE2_CUSTOMER_REFUSES";
    case TradeoffCase::Case3RailroadRefusesAtBeta: return "CASE3_RAILROAD_REFUSES_AT_BETA";
    case TradeoffCase::Case4WinWin: return "CASE4_WIN_WIN";
  }
  return "UNKNOWN";
}

inline void validate(const TradeoffInputs& in) {
  detail::require(std::isfinite(in.de_total), ErrorCode::InvalidTradeoffInputs,
                  "de_total must be finite");
  detail::require(std::isfinite(in.price) && in.price > 0.0, ErrorCode::InvalidTradeoffInputs,
                  "price must be > 0");
  detail::require(std::isfinite(in.c_inventory) && in.c_inventory >= 0.0,
                  ErrorCode::InvalidTradeoffInputs, "c_inventory must be >= 0");
}

namespace detail {

inline void require_beta(double beta) {
  require(beta >= 0.0 && beta <= 1.0, ErrorCode::BetaOutOfRange,
          "beta must lie in [0, 1], got " + std::to_string(beta));
}

}  // namespace detail

/// Railroad surplus after rebating a fraction beta of the charge.
inline double dh(const TradeoffInputs& in, double beta) {
  validate(in);
  detail::require_beta(beta);
  return in.de_total - beta * in.price;
}

/// Customer surplus: rebate received minus extra inventory cost.
inline double dr(const TradeoffInputs& in, double beta) {
  validate(in);
  detail::require_beta(beta);
  return beta * in.price - in.c_inventory;
}

/// Zero surplus counts as acceptance on both sides.
inline TradeoffCase classify(const TradeoffInputs& in, double beta) {
  const double railroad = dh(in, beta);
  const double customer = dr(in, beta);
  if (in.de_total < 0.0) return TradeoffCase::Case1RailroadRefuses;
  if (railroad >= 0.0 && customer < 0.0) return TradeoffCase::Case2CustomerRefuses;
  // Includes the unnamed band where both surpluses are negative: the
  // railroad's refusal decides it.
  if (railroad < 0.0) return TradeoffCase::Case3RailroadRefusesAtBeta;
  return TradeoffCase::Case4WinWin;
}

/// True when neither party accepts at beta although the railroad saves
/// money. classify() reports these points as CASE3.
inline bool in_infeasible_band(const TradeoffInputs& in, double beta) {
  return in.de_total >= 0.0 && dh(in, beta) < 0.0 && dr(in, beta) < 0.0;
}

struct FeasibleInterval {
  double beta_min = 0.0;
  double beta_max = 0.0;
  bool feasible = false;

  bool operator==(const FeasibleInterval&) const = default;
};

/// beta_min solves dr = 0, beta_max solves dh = 0 (clamped to [0, 1]).
inline FeasibleInterval feasible_interval(const TradeoffInputs& in) {
  validate(in);
  FeasibleInterval out;
  out.beta_min = in.c_inventory / in.price;
  out.beta_max = std::clamp(in.de_total / in.price, 0.0, 1.0);
  out.feasible = in.de_total >= 0.0 && in.de_total >= in.c_inventory && out.beta_min <= 1.0;
  return out;
}

/// Equal split of the joint surplus, when a win-win discount exists.
inline std::optional<double> recommend_beta(const TradeoffInputs& in) {
  const FeasibleInterval band = feasible_interval(in);
  if (!band.feasible) return std::nullopt;
  const double split = (in.de_total + in.c_inventory) / (2.0 * in.price);
  return std::clamp(split, band.beta_min, band.beta_max);
}

struct TradeoffOutcome {
  TradeoffCase case_label = TradeoffCase::Case1RailroadRefuses;
  double beta_min = 0.0;
  double beta_max = 0.0;
  bool feasible = false;
  std::optional<double> beta_recommended;
  /// Discount the case label and surpluses refer to.
  double beta_evaluated = 0.0;
  double dh_at_recommended = 0.0;
  double dr_at_recommended = 0.0;
  bool infeasible_band = false;

  bool operator==(const TradeoffOutcome&) const = default;
};

/// Full decision for one shipment. Without a win-win discount the outcome
/// is evaluated at the largest discount the railroad could afford, so a
/// saving railroad yields CASE2 and a losing one CASE1.
inline TradeoffOutcome evaluate_tradeoff(const TradeoffInputs& in) {
  const FeasibleInterval band = feasible_interval(in);
  TradeoffOutcome out;
  out.beta_min = band.beta_min;
  out.beta_max = band.beta_max;
  out.feasible = band.feasible;
  out.beta_recommended = recommend_beta(in);
  out.beta_evaluated = out.beta_recommended.value_or(band.beta_max);
  out.case_label = classify(in, out.beta_evaluated);
  out.dh_at_recommended = dh(in, out.beta_evaluated);
  out.dr_at_recommended = dr(in, out.beta_evaluated);
  out.infeasible_band = in_infeasible_band(in, out.beta_evaluated);
  return out;
}

struct AdoptionPoint {
  double beta = 0.0;
  double offered_fraction = 0.0;
  double adopting_fraction = 0.0;
  double win_win_fraction = 0.0;

  bool operator==(const AdoptionPoint&) const = default;
};

/// Share of a portfolio the railroad would offer (dh >= 0), that would
/// adopt (dr >= 0), and both, at each discount on the grid.
inline std::vector<AdoptionPoint> adoption_curve(std::span<const TradeoffInputs> portfolio,
                                                 std::span<const double> betas) {
  detail::require(!portfolio.empty(), ErrorCode::EmptyPortfolio, "portfolio has no shipments");
  for (std::size_t i = 0; i < betas.size(); ++i) {
    detail::require_beta(betas[i]);
    if (i > 0) {
      detail::require(betas[i - 1] <= betas[i], ErrorCode::UnsortedGrid,
                      "beta grid must be sorted ascending");
    }
  }
  for (const auto& in : portfolio) validate(in);

  const auto total = static_cast<double>(portfolio.size());
  std::vector<AdoptionPoint> curve;
  curve.reserve(betas.size());
  for (double beta : betas) {
    std::size_t offered = 0, adopting = 0, both = 0;
    for (const auto& in : portfolio) {
      const bool railroad = dh(in, beta) >= 0.0;
      const bool customer = dr(in, beta) >= 0.0;
      offered += railroad;
      adopting += customer;
      both += railroad && customer;
    }
    curve.push_back({beta, static_cast<double>(offered) / total,
                     static_cast<double>(adopting) / total, static_cast<double>(both) / total});
  }
  return curve;
}

/// steps evenly spaced discounts from lo to hi inclusive.
inline std::vector<double> beta_grid(double lo, double hi, std::size_t steps) {
  detail::require(std::isfinite(lo) && std::isfinite(hi) && 0.0 <= lo && lo <= hi && hi <= 1.0,
                  ErrorCode::BadRange, "need 0 <= beta_min <= beta_max <= 1");
  detail::require(steps >= 2, ErrorCode::BadRange, "steps must be >= 2");
  std::vector<double> grid(steps);
  const auto last = static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / last;
  }
  grid.back() = hi;
  return grid;
}

}  // namespace railprice
