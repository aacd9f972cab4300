#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "railprice/error.hpp"
#include "railprice/inventory.hpp"
#include "railprice/network.hpp"
#include "railprice/railcost.hpp"
#include "railprice/tariff.hpp"
#include "railprice/tradeoff.hpp"

namespace railprice {

using json = nlohmann::json;

struct Shipment {
  std::string id;
  std::string origin;
  std::string destination;
  DemandProfile demand;
  std::string category;
  std::optional<ServiceChain> service_chain;

  bool operator==(const Shipment&) const = default;
};

struct Scenario {
  Network network;
  TariffTable tariff;
  RailCostParams cost_params;
  std::vector<Shipment> shipments;  // sorted by id

  const Shipment* find_shipment(std::string_view id) const {
    auto it = std::find_if(shipments.begin(), shipments.end(),
                           [&](const Shipment& s) { return s.id == id; });
    return it == shipments.end() ? nullptr : &*it;
  }
};

inline bool operator==(const Scenario& a, const Scenario& b) {
  return a.network.nodes() == b.network.nodes() && a.network.links() == b.network.links() &&
         a.tariff == b.tariff && a.cost_params == b.cost_params && a.shipments == b.shipments;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class JsonReader {
 public:
  static const json& field(const json& obj, const std::string& path, const char* key) {
    expect_object(obj, path);
    auto it = obj.find(key);
    if (it == obj.end()) fail(ErrorCode::ParseError, join(path, key) + ": missing field");
    return *it;
  }

  static double number(const json& obj, const std::string& path, const char* key) {
    const json& v = field(obj, path, key);
    if (!v.is_number()) fail(ErrorCode::ParseError, join(path, key) + ": expected a number");
    return v.get<double>();
  }

  static double number_or(const json& obj, const std::string& path, const char* key,
                          double fallback) {
    expect_object(obj, path);
    if (!obj.contains(key)) return fallback;
    return number(obj, path, key);
  }

  static std::string string(const json& obj, const std::string& path, const char* key) {
    const json& v = field(obj, path, key);
    if (!v.is_string()) fail(ErrorCode::ParseError, join(path, key) + ": expected a string");
    return v.get<std::string>();
  }

  static const json& array(const json& obj, const std::string& path, const char* key) {
    const json& v = field(obj, path, key);
    if (!v.is_array()) fail(ErrorCode::ParseError, join(path, key) + ": expected an array");
    return v;
  }

  static void expect_object(const json& v, const std::string& path) {
    if (!v.is_object()) {
      fail(ErrorCode::ParseError, (path.empty() ? std::string("document") : path) +
                                      ": expected an object");
    }
  }

  static std::string join(const std::string& path, const char* key) {
    return path.empty() ? std::string(key) : path + "." + key;
  }

  static std::string at(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
  }
};

/// Re-raises library validation failures as ValidationError tagged with the
/// scenario location that caused them.
template <class F>
auto validated(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    fail(ErrorCode::ValidationError, where + ": " + e.what());
  }
}

inline std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace detail

inline Scenario parse_scenario(const json& doc) {
  using R = detail::JsonReader;
  R::expect_object(doc, "");
  Scenario sc;

  const json& network = R::field(doc, "", "network");
  const json& node_list = R::array(network, "network", "nodes");
  const json& link_list = R::array(network, "network", "links");

  std::vector<Node> nodes;
  for (std::size_t i = 0; i < node_list.size(); ++i) {
    const std::string path = R::at("network.nodes", i);
    Node n;
    n.id = R::string(node_list[i], path, "id");
    const std::string kind = R::string(node_list[i], path, "kind");
    auto parsed = node_kind_from_string(kind);
    if (!parsed) detail::fail(ErrorCode::ParseError, path + ".kind: unknown kind '" + kind + "'");
    n.kind = *parsed;
    nodes.push_back(std::move(n));
  }

  const json& yard_list = R::array(doc, "", "yards");
  for (std::size_t i = 0; i < yard_list.size(); ++i) {
    const std::string path = R::at("yards", i);
    const std::string id = R::string(yard_list[i], path, "id");
    YardParams p;
    p.t_broken_up = R::number(yard_list[i], path, "t_broken_up");
    p.t_classified = R::number(yard_list[i], path, "t_classified");
    p.c_classified = R::number(yard_list[i], path, "c_classified");
    auto it = std::find_if(nodes.begin(), nodes.end(), [&](const Node& n) { return n.id == id; });
    if (it == nodes.end()) detail::fail(ErrorCode::ValidationError, path + ": unknown node " + id);
    if (!it->is_yard()) {
      detail::fail(ErrorCode::ValidationError, path + ": node " + id + " is not a classification yard");
    }
    if (it->yard_params) detail::fail(ErrorCode::ValidationError, path + ": duplicate yard " + id);
    it->yard_params = p;
  }
  for (const Node& n : nodes) {
    if (n.is_yard() && !n.yard_params) {
      detail::fail(ErrorCode::ValidationError, "yards: missing parameters for yard " + n.id);
    }
  }

  std::vector<Link> links;
  for (std::size_t i = 0; i < link_list.size(); ++i) {
    const std::string path = R::at("network.links", i);
    links.push_back({R::string(link_list[i], path, "from"), R::string(link_list[i], path, "to"),
                     R::number(link_list[i], path, "length_km")});
  }
  sc.network = detail::validated("network", [&] { return build_network(nodes, links); });

  const json& tariff_list = R::array(doc, "", "tariff");
  std::vector<TariffCategory> categories;
  for (std::size_t i = 0; i < tariff_list.size(); ++i) {
    const std::string path = R::at("tariff", i);
    categories.push_back({R::string(tariff_list[i], path, "category"),
                          R::number(tariff_list[i], path, "p1"),
                          R::number(tariff_list[i], path, "r2")});
  }
  sc.tariff = detail::validated("tariff", [&] { return TariffTable(categories); });

  const json& cost = R::field(doc, "", "cost_params");
  sc.cost_params.gamma = R::number(cost, "cost_params", "gamma");
  sc.cost_params.c_loading_extra = R::number(cost, "cost_params", "c_loading_extra");
  sc.cost_params.c_unloading_extra = R::number(cost, "cost_params", "c_unloading_extra");
  sc.cost_params.dg_loading = R::number_or(cost, "cost_params", "dg_loading", 0.0);
  sc.cost_params.dg_unloading = R::number_or(cost, "cost_params", "dg_unloading", 0.0);
  detail::validated("cost_params", [&] { validate(sc.cost_params); });

  const json& shipment_list = R::array(doc, "", "shipments");
  for (std::size_t i = 0; i < shipment_list.size(); ++i) {
    const std::string path = R::at("shipments", i);
    const json& s = shipment_list[i];
    Shipment sh;
    sh.id = R::string(s, path, "id");
    sh.origin = R::string(s, path, "origin");
    sh.destination = R::string(s, path, "destination");
    sh.category = R::string(s, path, "category");
    const std::string dpath = path + ".demand";
    const json& d = R::field(s, path, "demand");
    sh.demand.q_car = R::number(d, dpath, "q_car");
    sh.demand.n_ij = R::number(d, dpath, "n_ij");
    sh.demand.m_ij = R::number(d, dpath, "m_ij");
    sh.demand.q_safety = R::number_or(d, dpath, "q_safety", 0.0);
    sh.demand.t_days = R::number(d, dpath, "t_days");
    sh.demand.c_inventory_unit = R::number(d, dpath, "c_inventory_unit");
    if (s.contains("service_chain") && !s["service_chain"].is_null()) {
      const json& legs = R::array(s, path, "service_chain");
      ServiceChain chain;
      for (std::size_t k = 0; k < legs.size(); ++k) {
        const std::string lpath = R::at(path + ".service_chain", k);
        chain.legs.push_back({R::string(legs[k], lpath, "from"), R::string(legs[k], lpath, "to")});
      }
      sh.service_chain = std::move(chain);
    }

    auto invalid = [&](const std::string& what) {
      detail::fail(ErrorCode::ValidationError, path + " (" + sh.id + "): " + what);
    };
    if (!sc.network.contains(sh.origin)) invalid("unknown node " + sh.origin);
    if (!sc.network.contains(sh.destination)) invalid("unknown node " + sh.destination);
    if (sh.origin == sh.destination) invalid("origin and destination must differ");
    if (!sc.tariff.contains(sh.category)) invalid("unknown tariff category " + sh.category);
    if (sh.service_chain) {
      for (const auto& leg : sh.service_chain->legs) {
        if (!sc.network.contains(leg.from)) invalid("unknown node " + leg.from);
        if (!sc.network.contains(leg.to)) invalid("unknown node " + leg.to);
      }
    }
    detail::validated(dpath, [&] { validate(sh.demand); });
    if (sc.find_shipment(sh.id)) invalid("duplicate shipment id");
    sc.shipments.push_back(std::move(sh));
  }
  std::sort(sc.shipments.begin(), sc.shipments.end(),
            [](const Shipment& a, const Shipment& b) { return a.id < b.id; });
  return sc;
}

inline Scenario parse_scenario_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    detail::fail(ErrorCode::ParseError,
                 detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  return parse_scenario(doc);
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) detail::fail(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) detail::fail(ErrorCode::IoError, "cannot read " + path);
  return parse_scenario_text(buffer.str());
}

inline json to_json(const Scenario& sc) {
  json nodes = json::array(), links = json::array(), yards = json::array();
  for (const Node& n : sc.network.nodes()) {
    nodes.push_back({{"id", n.id}, {"kind", std::string(to_string(n.kind))}});
    if (n.yard_params) {
      yards.push_back({{"id", n.id},
                       {"t_broken_up", n.yard_params->t_broken_up},
                       {"t_classified", n.yard_params->t_classified},
                       {"c_classified", n.yard_params->c_classified}});
    }
  }
  for (const Link& l : sc.network.links()) {
    links.push_back({{"from", l.from}, {"to", l.to}, {"length_km", l.length_km}});
  }
  json tariff = json::array();
  for (const auto& [id, c] : sc.tariff.categories()) {
    tariff.push_back({{"category", id}, {"p1", c.p1}, {"r2", c.r2}});
  }
  json shipments = json::array();
  for (const Shipment& s : sc.shipments) {
    json entry = {{"id", s.id},
                  {"origin", s.origin},
                  {"destination", s.destination},
                  {"category", s.category},
                  {"demand",
                   {{"q_car", s.demand.q_car},
                    {"n_ij", s.demand.n_ij},
                    {"m_ij", s.demand.m_ij},
                    {"q_safety", s.demand.q_safety},
                    {"t_days", s.demand.t_days},
                    {"c_inventory_unit", s.demand.c_inventory_unit}}}};
    if (s.service_chain) {
      json legs = json::array();
      for (const auto& leg : s.service_chain->legs) legs.push_back({{"from", leg.from}, {"to", leg.to}});
      entry["service_chain"] = legs;
    }
    shipments.push_back(entry);
  }
  return {{"network", {{"nodes", nodes}, {"links", links}}},
          {"yards", yards},
          {"tariff", tariff},
          {"cost_params",
           {{"gamma", sc.cost_params.gamma},
            {"c_loading_extra", sc.cost_params.c_loading_extra},
            {"c_unloading_extra", sc.cost_params.c_unloading_extra},
            {"dg_loading", sc.cost_params.dg_loading},
            {"dg_unloading", sc.cost_params.dg_unloading}}},
          {"shipments", shipments}};
}

// ---------------------------------------------------------------------------
// Pipeline

struct ShipmentAnalysis {
  Route route;
  CostBreakdown cost;
  StockReport stock;
  double tonnage = 0.0;
  double price = 0.0;
  TradeoffInputs inputs;
  TradeoffOutcome outcome;
};

struct ShipmentReport {
  std::string shipment_id;
  std::optional<ShipmentAnalysis> analysis;
  // Set instead of analysis when this shipment could not be evaluated.
  std::optional<ErrorCode> error_code;
  std::string error_message;

  bool ok() const { return analysis.has_value(); }
};

inline ShipmentAnalysis analyze_shipment(const Scenario& sc, const Shipment& s) {
  ShipmentAnalysis a;
  a.route = shortest_path(sc.network, s.origin, s.destination);
  a.route = reclassification_set(sc.network, a.route, s.service_chain);
  a.cost = cost_breakdown(sc.cost_params, a.route, sc.network.yard_table(), s.demand.n_ij,
                          s.demand.t_days);
  a.stock = stock_quantities(s.demand);
  a.tonnage = contract_tonnage(s.demand);
  a.price = rail_charge(sc.tariff, s.category, a.route.distance_km, a.tonnage);
  a.inputs = {a.cost.de_total, a.price, a.stock.c_inventory_total};
  a.outcome = evaluate_tradeoff(a.inputs);
  return a;
}

/// One report per shipment in id order. A shipment that fails (no route,
/// bad service chain, zero charge) gets an error entry; the rest still run.
inline std::vector<ShipmentReport> analyze(const Scenario& sc) {
  std::vector<ShipmentReport> reports;
  reports.reserve(sc.shipments.size());
  for (const Shipment& s : sc.shipments) {
    ShipmentReport r;
    r.shipment_id = s.id;
    try {
      r.analysis = analyze_shipment(sc, s);
    } catch (const Error& e) {
      r.error_code = e.code();
      r.error_message = e.what();
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

namespace detail {

inline double money(double value) { return std::round(value * 100.0) / 100.0; }

inline std::string shortest(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  return std::string(buf, end);
}

}  // namespace detail

/// Machine-readable report. Money is rounded to cents; everything else is
/// written at full precision.
inline json report_to_json(const std::vector<ShipmentReport>& reports) {
  using detail::money;
  json list = json::array();
  for (const auto& r : reports) {
    json entry = {{"id", r.shipment_id}};
    if (!r.ok()) {
      entry["error"] = {{"code", std::string(to_string(*r.error_code))},
                        {"message", r.error_message}};
      list.push_back(entry);
      continue;
    }
    const ShipmentAnalysis& a = *r.analysis;
    entry["route"] = {{"nodes", a.route.nodes},
                      {"distance_km", a.route.distance_km},
                      {"q", a.route.q()},
                      {"reclass_yards", a.route.reclass_yards}};
    entry["cost"] = {{"de_loading", money(a.cost.de_loading)},
                     {"de_unloading", money(a.cost.de_unloading)},
                     {"de_reclassification", money(a.cost.de_reclassification)},
                     {"de_car_miles", money(a.cost.de_car_miles)},
                     {"de_total", money(a.cost.de_total)},
                     {"dg_reclassification", a.cost.dg_reclassification},
                     {"dc_reclassification", money(a.cost.dc_reclassification)}};
    entry["stock"] = {{"q_train", a.stock.q_train},
                      {"q_daily", a.stock.q_daily},
                      {"interval_days", a.stock.interval_days},
                      {"s_train_per_day", a.stock.s_train_per_day},
                      {"s_daily_per_day", a.stock.s_daily_per_day},
                      {"delta_s", a.stock.delta_s},
                      {"c_inventory_total", money(a.stock.c_inventory_total)}};
    entry["tonnage"] = a.tonnage;
    entry["price"] = money(a.price);
    const TradeoffOutcome& o = a.outcome;
    entry["tradeoff"] = {{"case", std::string(to_string(o.case_label))},
                         {"beta_min", o.beta_min},
                         {"beta_max", o.beta_max},
                         {"feasible", o.feasible},
                         {"beta_recommended",
                          o.beta_recommended ? json(*o.beta_recommended) : json(nullptr)},
                         {"beta_evaluated", o.beta_evaluated},
                         {"dh_at_recommended", money(o.dh_at_recommended)},
                         {"dr_at_recommended", money(o.dr_at_recommended)},
                         {"infeasible_band", o.infeasible_band}};
    list.push_back(entry);
  }
  return {{"shipments", list}};
}

inline void print_table(std::ostream& out, const std::vector<ShipmentReport>& reports) {
  const auto flags = out.flags();
  out << std::left << std::setw(10) << "shipment" << std::right << std::setw(10) << "L_km"
      << std::setw(4) << "q" << std::setw(16) << "dE" << std::setw(16) << "P" << std::setw(14)
      << "C_inv" << std::setw(10) << "beta_min" << std::setw(10) << "beta_max" << std::setw(10)
      << "beta*" << "  case\n";
  out << std::fixed;
  for (const auto& r : reports) {
    out << std::left << std::setw(10) << r.shipment_id << std::right;
    if (!r.ok()) {
      out << "  error: " << r.error_message << '\n';
      continue;
    }
    const ShipmentAnalysis& a = *r.analysis;
    const TradeoffOutcome& o = a.outcome;
    out << std::setprecision(1) << std::setw(10) << a.route.distance_km << std::setw(4)
        << a.route.q() << std::setprecision(2) << std::setw(16) << a.cost.de_total
        << std::setw(16) << a.price << std::setw(14) << a.stock.c_inventory_total
        << std::setprecision(5) << std::setw(10) << o.beta_min << std::setw(10) << o.beta_max;
    if (o.beta_recommended) {
      out << std::setw(10) << *o.beta_recommended;
    } else {
      out << std::setw(10) << "-";
    }
    out << "  " << to_string(o.case_label) << (o.infeasible_band ? " (infeasible band)" : "")
        << '\n';
  }
  out.flags(flags);
}

struct Quote {
  std::string shipment_id;
  double beta = 0.0;
  double dh = 0.0;
  double dr = 0.0;
  TradeoffCase case_label = TradeoffCase::Case1RailroadRefuses;
  bool infeasible_band = false;
  ShipmentAnalysis analysis;
};

/// Surpluses and decision for one shipment at a caller-chosen discount.
inline Quote quote(const Scenario& sc, std::string_view shipment_id, double beta) {
  const Shipment* s = sc.find_shipment(shipment_id);
  if (!s) detail::fail(ErrorCode::ValidationError, "unknown shipment " + std::string(shipment_id));
  Quote q;
  q.shipment_id = s->id;
  q.beta = beta;
  q.analysis = analyze_shipment(sc, *s);
  q.dh = dh(q.analysis.inputs, beta);
  q.dr = dr(q.analysis.inputs, beta);
  q.case_label = classify(q.analysis.inputs, beta);
  q.infeasible_band = in_infeasible_band(q.analysis.inputs, beta);
  return q;
}

inline constexpr std::string_view kAdoptionCsvHeader =
    "beta,offered_fraction,adopting_fraction,win_win_fraction";

inline void write_adoption_csv(std::ostream& out, const std::vector<AdoptionPoint>& curve) {
  out << kAdoptionCsvHeader << '\n';
  for (const auto& p : curve) {
    out << detail::shortest(p.beta) << ',' << detail::shortest(p.offered_fraction) << ','
        << detail::shortest(p.adopting_fraction) << ',' << detail::shortest(p.win_win_fraction)
        << '\n';
  }
}

/// Adoption curve over every shipment that could be analyzed.
inline std::vector<AdoptionPoint> scenario_adoption_curve(const Scenario& sc, double beta_min,
                                                          double beta_max, std::size_t steps) {
  const std::vector<double> grid = beta_grid(beta_min, beta_max, steps);
  std::vector<TradeoffInputs> portfolio;
  for (const auto& r : analyze(sc)) {
    if (r.ok()) portfolio.push_back(r.analysis->inputs);
  }
  return adoption_curve(portfolio, grid);
}

inline void emit_adoption_csv(const Scenario& sc, double beta_min, double beta_max,
                              std::size_t steps, const std::string& out_path) {
  const auto curve = scenario_adoption_curve(sc, beta_min, beta_max, steps);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) detail::fail(ErrorCode::IoError, "cannot open " + out_path + " for writing");
  write_adoption_csv(out, curve);
  out.flush();
  if (!out) detail::fail(ErrorCode::IoError, "cannot write " + out_path);
}

}  // namespace railprice
