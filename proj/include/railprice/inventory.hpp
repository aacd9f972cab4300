#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "railprice/error.hpp"

namespace railprice {

/// Customer demand contract for one origin-destination pair.
struct DemandProfile {
  double q_car = 0.0;             // rated load per railcar, ton/car
  double n_ij = 0.0;              // daily railcar demand, car/day
  double m_ij = 0.0;              // entire-train size, car/train
  double q_safety = 0.0;          // safety stock, ton
  double t_days = 0.0;            // contract length, day
  double c_inventory_unit = 0.0;  // yuan/(ton*day)

  bool operator==(const DemandProfile&) const = default;
};

inline void validate(const DemandProfile& d) {
  auto finite = std::isfinite(d.q_car) && std::isfinite(d.n_ij) && std::isfinite(d.m_ij) &&
                std::isfinite(d.q_safety) && std::isfinite(d.t_days) &&
                std::isfinite(d.c_inventory_unit);
  detail::require(finite, ErrorCode::InvalidProfile, "demand fields must be finite");
  detail::require(d.q_car > 0.0, ErrorCode::InvalidProfile, "q_car must be > 0");
  detail::require(d.n_ij > 0.0, ErrorCode::InvalidProfile, "n_ij must be > 0");
  detail::require(d.m_ij > 0.0, ErrorCode::InvalidProfile, "m_ij must be > 0");
  detail::require(d.t_days > 0.0, ErrorCode::InvalidProfile, "t_days must be > 0");
  detail::require(d.m_ij >= d.n_ij, ErrorCode::InvalidProfile, "m_ij must be >= n_ij");
  detail::require(d.q_safety >= 0.0, ErrorCode::InvalidProfile, "q_safety must be >= 0");
  detail::require(d.c_inventory_unit >= 0.0, ErrorCode::InvalidProfile,
                  "c_inventory_unit must be >= 0");
}

struct StockReport {
  double q_train = 0.0;            // ton per entire train
  double q_daily = 0.0;            // ton per day of demand
  double interval_days = 0.0;      // days between entire trains
  double s_train_per_day = 0.0;    // average stock under entire-train delivery, ton
  double s_daily_per_day = 0.0;    // average stock under daily delivery, ton
  double delta_s = 0.0;            // extra average stock, ton
  double c_inventory_total = 0.0;  // yuan over the contract

  bool operator==(const StockReport&) const = default;
};

/// Closed-form stock levels. The train carries exactly interval_days of
/// demand; safety stock is common to both delivery modes and cancels in
/// delta_s.
inline StockReport stock_quantities(const DemandProfile& d) {
  validate(d);
  StockReport r;
  r.q_train = d.q_car * d.m_ij;
  r.q_daily = d.q_car * d.n_ij;
  r.interval_days = d.m_ij / d.n_ij;
  r.s_train_per_day = r.q_train / 2.0 + d.q_safety;
  r.s_daily_per_day = r.q_daily / 2.0 + d.q_safety;
  r.delta_s = 0.5 * d.q_car * (d.m_ij - d.n_ij);
  r.c_inventory_total = d.c_inventory_unit * d.t_days * r.delta_s;
  return r;
}

/// Accumulated stock (ton*day) over one observation period of the given
/// length, for both delivery modes, and the per-day difference.
struct PeriodStock {
  double s_train = 0.0;
  double s_daily = 0.0;
  double delta_s = 0.0;
};

inline PeriodStock period_stock(const DemandProfile& d, double period_days) {
  validate(d);
  detail::require(std::isfinite(period_days) && period_days > 0.0, ErrorCode::InvalidHorizon,
                  "period must be > 0");
  const double q_train = d.q_car * d.m_ij;
  const double q_daily = d.q_car * d.n_ij;
  PeriodStock p;
  p.s_train = period_days / 2.0 * q_train + period_days * d.q_safety;
  p.s_daily = period_days / 2.0 * q_daily + period_days * d.q_safety;
  p.delta_s = (p.s_train - p.s_daily) / period_days;
  return p;
}

/// Steps the sawtooth stock trajectory forward in time and returns its
/// time average (trapezoidal rule). An entire train arrives every
/// interval_days and stock depletes at the daily demand rate in between.
inline double simulate_stock(const DemandProfile& d, std::int64_t horizon_days,
                             std::int64_t steps_per_day) {
  validate(d);
  const double theta = d.m_ij / d.n_ij;
  const double theta_rounded = std::round(theta);
  detail::require(std::abs(theta - theta_rounded) <= 1e-9 * theta, ErrorCode::NonIntegerInterval,
                  "train interval m_ij/n_ij = " + std::to_string(theta) + " is not an integer");
  const auto interval = static_cast<std::int64_t>(theta_rounded);
  detail::require(steps_per_day >= 2, ErrorCode::InvalidHorizon, "steps_per_day must be >= 2");
  detail::require(horizon_days > 0 && horizon_days % interval == 0, ErrorCode::InvalidHorizon,
                  "horizon must be a positive multiple of the train interval");

  const double q_train = d.q_car * d.m_ij;
  const double depletion_per_step = d.q_car * d.n_ij / static_cast<double>(steps_per_day);
  const double dt = 1.0 / static_cast<double>(steps_per_day);
  const std::int64_t steps_per_interval = interval * steps_per_day;
  const std::int64_t total_steps = horizon_days * steps_per_day;

  double cycle_stock = 0.0;  // stock above the safety baseline
  double area = 0.0;
  for (std::int64_t step = 0; step < total_steps; ++step) {
    if (step % steps_per_interval == 0) cycle_stock += q_train;
    const double start = cycle_stock;
    cycle_stock -= depletion_per_step;
    area += 0.5 * (start + cycle_stock) * dt;
  }
  return area / static_cast<double>(horizon_days) + d.q_safety;
}

}  // namespace railprice
