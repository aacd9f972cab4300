#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "railprice/error.hpp"
#include "railprice/inventory.hpp"

namespace railprice {

// Two-part rate for one commodity category.
struct TariffCategory {
  std::string category_id;
  double p1 = 0.0;  // terminal charge, yuan/ton
  double r2 = 0.0;  // distance charge, yuan/(ton*km)

  bool operator==(const TariffCategory&) const = default;
};

class TariffTable {
 public:
  TariffTable() = default;

  explicit TariffTable(const std::vector<TariffCategory>& categories) {
    detail::require(!categories.empty(), ErrorCode::InvalidTariff, "tariff table is empty");
    for (const auto& c : categories) {
      detail::require(std::isfinite(c.p1) && c.p1 >= 0.0 && std::isfinite(c.r2) && c.r2 >= 0.0,
                      ErrorCode::InvalidTariff,
                      "category " + c.category_id + ": base prices must be finite and >= 0");
      auto [it, inserted] = categories_.emplace(c.category_id, c);
      detail::require(inserted, ErrorCode::InvalidTariff,
                      "duplicate tariff category " + c.category_id);
    }
  }

  bool contains(std::string_view id) const { return categories_.find(id) != categories_.end(); }

  const TariffCategory& at(std::string_view id) const {
    auto it = categories_.find(id);
    if (it == categories_.end()) {
      detail::fail(ErrorCode::UnknownCategory, "unknown tariff category " + std::string(id));
    }
    return it->second;
  }

  std::size_t size() const { return categories_.size(); }
  const std::map<std::string, TariffCategory, std::less<>>& categories() const { return categories_; }

  bool operator==(const TariffTable&) const = default;

 private:
  std::map<std::string, TariffCategory, std::less<>> categories_;
};

/// Tonnage shipped over the whole contract.
inline double contract_tonnage(const DemandProfile& d) {
  validate(d);
  return d.q_car * d.n_ij * d.t_days;
}

/// Rail charge (terminal + distance rate) for the given tonnage.
inline double rail_charge(const TariffTable& table, std::string_view category, double distance_km,
                          double tonnage) {
  const TariffCategory& c = table.at(category);
  detail::require(std::isfinite(distance_km) && distance_km >= 0.0, ErrorCode::NegativeInput,
                  "distance must be >= 0");
  detail::require(std::isfinite(tonnage) && tonnage >= 0.0, ErrorCode::NegativeInput,
                  "tonnage must be >= 0");
  return (c.p1 + c.r2 * distance_km) * tonnage;
}

}  // namespace railprice
