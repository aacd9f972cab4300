#pragma once

#include <cmath>
#include <string>

#include "railprice/error.hpp"
#include "railprice/network.hpp"

namespace railprice {

struct RailCostParams {
  double gamma = 0.0;              // yuan per car-hour
  double c_loading_extra = 0.0;    // yuan per car
  double c_unloading_extra = 0.0;  // yuan per car
  double dg_loading = 0.0;         // car-hour
  double dg_unloading = 0.0;       // car-hour

  bool operator==(const RailCostParams&) const = default;
};

inline void validate(const RailCostParams& p) {
  auto ok = [](double v) { return std::isfinite(v) && v >= 0.0; };
  detail::require(ok(p.gamma), ErrorCode::InvalidCostParams, "gamma must be finite and >= 0");
  detail::require(ok(p.c_loading_extra), ErrorCode::InvalidCostParams,
                  "c_loading_extra must be finite and >= 0");
  detail::require(ok(p.c_unloading_extra), ErrorCode::InvalidCostParams,
                  "c_unloading_extra must be finite and >= 0");
  detail::require(std::isfinite(p.dg_loading) && std::isfinite(p.dg_unloading),
                  ErrorCode::InvalidCostParams, "loading/unloading time differences must be finite");
}

/// Railroad saving from running an entire train instead of transfer
/// service, split by where it arises. Positive means the entire train is
/// cheaper for the railroad.
struct CostBreakdown {
  double de_loading = 0.0;
  double de_unloading = 0.0;
  double de_reclassification = 0.0;
  double de_car_miles = 0.0;  // equal for both services, always 0
  double de_total = 0.0;
  double dg_reclassification = 0.0;  // car-hour
  double dc_reclassification = 0.0;

  bool operator==(const CostBreakdown&) const = default;
};

namespace detail {

inline void require_volume(double n_ij, double t_days) {
  require(std::isfinite(n_ij) && n_ij > 0.0, ErrorCode::InvalidProfile, "n_ij must be > 0");
  require(std::isfinite(t_days) && t_days > 0.0, ErrorCode::InvalidProfile, "t_days must be > 0");
}

inline const YardParams& lookup_yard(const YardTable& yards, const std::string& id) {
  auto it = yards.find(id);
  if (it == yards.end()) fail(ErrorCode::UnknownYard, "no yard parameters for " + id);
  return it->second;
}

}  // namespace detail

/// Car-hours of yard delay avoided over the contract.
inline double reclass_time_saving(const Route& route, const YardTable& yards, double n_ij,
                                  double t_days) {
  detail::require_volume(n_ij, t_days);
  double delay_per_car = 0.0;
  for (const auto& id : route.reclass_yards) delay_per_car += detail::lookup_yard(yards, id).t_delay();
  return t_days * n_ij * delay_per_car;
}

/// Yard handling cost avoided over the contract.
inline double reclass_cost_saving(const Route& route, const YardTable& yards, double n_ij,
                                  double t_days) {
  detail::require_volume(n_ij, t_days);
  double cost_per_car = 0.0;
  for (const auto& id : route.reclass_yards) cost_per_car += detail::lookup_yard(yards, id).c_classified;
  return t_days * n_ij * cost_per_car;
}

inline CostBreakdown cost_breakdown(const RailCostParams& params, const Route& route,
                                    const YardTable& yards, double n_ij, double t_days) {
  validate(params);
  detail::require_volume(n_ij, t_days);
  const double car_days = t_days * n_ij;
  CostBreakdown b;
  b.de_loading = params.gamma * params.dg_loading - params.c_loading_extra * car_days;
  b.de_unloading = params.gamma * params.dg_unloading - params.c_unloading_extra * car_days;
  b.dg_reclassification = reclass_time_saving(route, yards, n_ij, t_days);
  b.dc_reclassification = reclass_cost_saving(route, yards, n_ij, t_days);
  b.de_reclassification = params.gamma * b.dg_reclassification + b.dc_reclassification;
  b.de_car_miles = 0.0;
  b.de_total = b.de_loading + b.de_unloading + b.de_reclassification + b.de_car_miles;
  return b;
}

}  // namespace railprice
