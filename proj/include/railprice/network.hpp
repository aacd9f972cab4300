#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "railprice/error.hpp"

namespace railprice {

enum class NodeKind { LoadingStation, UnloadingStation, ClassificationYard };

constexpr std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::LoadingStation: return "loading_station";
    case NodeKind::UnloadingStation: return "unloading_station";
    case NodeKind::ClassificationYard: return "classification_yard";
  }
  return "unknown";
}

inline std::optional<NodeKind> node_kind_from_string(std::string_view name) {
  if (name == "loading_station") return NodeKind::LoadingStation;
  if (name == "unloading_station") return NodeKind::UnloadingStation;
  if (name == "classification_yard") return NodeKind::ClassificationYard;
  return std::nullopt;
}

// Per-yard handling parameters. Times in hours, cost per car.
struct YardParams {
  double t_broken_up = 0.0;
  double t_classified = 0.0;
  double c_classified = 0.0;

  /// Intermediate delay a car suffers at the yard.
  double t_delay() const { return t_broken_up + t_classified; }

  bool operator==(const YardParams&) const = default;
};

struct Node {
  std::string id;
  NodeKind kind = NodeKind::LoadingStation;
  std::optional<YardParams> yard_params;

  bool is_yard() const { return kind == NodeKind::ClassificationYard; }

  bool operator==(const Node&) const = default;
};

/// Undirected track section between two nodes.
struct Link {
  std::string from;
  std::string to;
  double length_km = 0.0;

  bool operator==(const Link&) const = default;
};

struct Route {
  std::vector<std::string> nodes;
  double distance_km = 0.0;
  /// Intermediate classification yards where the shipment is re-sorted.
  std::vector<std::string> reclass_yards;

  const std::string& origin() const { return nodes.front(); }
  const std::string& destination() const { return nodes.back(); }
  std::size_t q() const { return reclass_yards.size(); }

  bool operator==(const Route&) const = default;
};

struct ServiceLeg {
  std::string from;
  std::string to;

  bool operator==(const ServiceLeg&) const = default;
};

/// Ordered train-service legs a transfer shipment rides. Cars are re-sorted
/// only where two legs meet.
struct ServiceChain {
  std::vector<ServiceLeg> legs;

  bool operator==(const ServiceChain&) const = default;
};

using YardTable = std::map<std::string, YardParams, std::less<>>;

inline void validate(const YardParams& p, std::string_view yard_id) {
  auto ok = [](double v) { return std::isfinite(v) && v >= 0.0; };
  detail::require(ok(p.t_broken_up) && ok(p.t_classified) && ok(p.c_classified),
                  ErrorCode::InvalidYardParams,
                  "yard " + std::string(yard_id) + " parameters must be finite and >= 0");
}

/// Immutable rail network. Nodes are held sorted by id so that index order
/// coincides with lexicographic id order.
class Network {
 public:
  struct Edge {
    std::size_t to;
    double length_km;
  };

  static Network build(std::vector<Node> nodes, const std::vector<Link>& links) {
    Network net;
    std::sort(nodes.begin(), nodes.end(),
              [](const Node& a, const Node& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Node& n = nodes[i];
      if (i > 0 && nodes[i - 1].id == n.id) {
        detail::fail(ErrorCode::DuplicateNodeId, "duplicate node id " + n.id);
      }
      detail::require(n.is_yard() == n.yard_params.has_value(), ErrorCode::InvalidYardParams,
                      "node " + n.id + ": yard parameters must be present exactly for "
                      "classification yards");
      if (n.yard_params) validate(*n.yard_params, n.id);
      net.index_.emplace(n.id, i);
    }
    net.nodes_ = std::move(nodes);
    net.adjacency_.resize(net.nodes_.size());
    for (const Link& link : links) {
      auto from = net.index_of(link.from);
      auto to = net.index_of(link.to);
      if (!from) detail::fail(ErrorCode::DanglingLinkEndpoint, "unknown node " + link.from);
      if (!to) detail::fail(ErrorCode::DanglingLinkEndpoint, "unknown node " + link.to);
      detail::require(std::isfinite(link.length_km) && link.length_km > 0.0,
                      ErrorCode::NonPositiveLength,
                      "link " + link.from + "-" + link.to + ": length must be > 0");
      detail::require(*from != *to, ErrorCode::ValidationError,
                      "link endpoints must be distinct (" + link.from + ")");
      net.adjacency_[*from].push_back({*to, link.length_km});
      net.adjacency_[*to].push_back({*from, link.length_km});
      net.links_.push_back(link);
    }
    return net;
  }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t link_count() const { return links_.size(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Link>& links() const { return links_; }

  bool contains(std::string_view id) const { return index_.find(id) != index_.end(); }

  std::optional<std::size_t> index_of(std::string_view id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const Node& node(std::string_view id) const {
    auto idx = index_of(id);
    if (!idx) detail::fail(ErrorCode::UnknownNode, "unknown node " + std::string(id));
    return nodes_[*idx];
  }

  const Node& node_at(std::size_t index) const { return nodes_[index]; }
  const std::vector<Edge>& neighbors(std::size_t index) const { return adjacency_[index]; }

  YardTable yard_table() const {
    YardTable table;
    for (const Node& n : nodes_) {
      if (n.yard_params) table.emplace(n.id, *n.yard_params);
    }
    return table;
  }

 private:
  std::vector<Node> nodes_;
  std::vector<Link> links_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::vector<Edge>> adjacency_;
};

inline Network build_network(std::vector<Node> nodes, const std::vector<Link>& links) {
  return Network::build(std::move(nodes), links);
}

namespace detail {

inline std::vector<std::string> intermediate_yards(const Network& net,
                                                   const std::vector<std::string>& path) {
  std::vector<std::string> yards;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    if (net.node(path[i]).is_yard()) yards.push_back(path[i]);
  }
  return yards;
}

}  // namespace detail

/// Minimum-length route between two nodes. Among equal-length routes the one
/// with the lexicographically smallest node-id sequence wins. Every
/// intermediate classification yard is marked for reclassification.
inline Route shortest_path(const Network& net, std::string_view origin, std::string_view dest) {
  auto src = net.index_of(origin);
  auto dst = net.index_of(dest);
  if (!src) detail::fail(ErrorCode::UnknownNode, "unknown node " + std::string(origin));
  if (!dst) detail::fail(ErrorCode::UnknownNode, "unknown node " + std::string(dest));

  // Labels are ordered by (distance, index path); index order is id order.
  using Label = std::pair<double, std::vector<std::size_t>>;
  std::vector<std::optional<Label>> best(net.node_count());
  std::vector<bool> settled(net.node_count(), false);
  std::priority_queue<Label, std::vector<Label>, std::greater<>> frontier;

  best[*src] = Label{0.0, {*src}};
  frontier.push(*best[*src]);
  while (!frontier.empty()) {
    Label current = frontier.top();
    frontier.pop();
    std::size_t u = current.second.back();
    if (settled[u]) continue;
    settled[u] = true;
    if (u == *dst) break;
    for (const auto& edge : net.neighbors(u)) {
      if (settled[edge.to]) continue;
      Label candidate{current.first + edge.length_km, current.second};
      candidate.second.push_back(edge.to);
      if (!best[edge.to] || candidate < *best[edge.to]) {
        best[edge.to] = candidate;
        frontier.push(std::move(candidate));
      }
    }
  }

  if (!best[*dst]) {
    detail::fail(ErrorCode::Unreachable,
                 "no path from " + std::string(origin) + " to " + std::string(dest));
  }
  Route route;
  route.distance_km = best[*dst]->first;
  for (std::size_t idx : best[*dst]->second) route.nodes.push_back(net.node_at(idx).id);
  route.reclass_yards = detail::intermediate_yards(net, route.nodes);
  return route;
}

/// Recomputes which yards re-sort the shipment. Without a chain every
/// intermediate yard does; with a chain only yards where consecutive legs
/// meet do, and yards passed by a through service are bypassed.
inline Route reclassification_set(const Network& net, Route route,
                                  const std::optional<ServiceChain>& chain = std::nullopt) {
  if (!chain) {
    route.reclass_yards = detail::intermediate_yards(net, route.nodes);
    return route;
  }
  const auto& legs = chain->legs;
  detail::require(!legs.empty(), ErrorCode::InvalidChain, "service chain has no legs");
  for (std::size_t i = 1; i < legs.size(); ++i) {
    detail::require(legs[i].from == legs[i - 1].to, ErrorCode::InvalidChain,
                    "service legs are not contiguous at " + legs[i - 1].to + " / " + legs[i].from);
  }
  detail::require(legs.front().from == route.origin(), ErrorCode::ChainNotOnRoute,
                  "first leg must start at route origin " + route.origin());
  detail::require(legs.back().to == route.destination(), ErrorCode::ChainNotOnRoute,
                  "last leg must end at route destination " + route.destination());

  // Leg endpoints must appear along the route in strictly increasing order.
  // The first leg starts at the origin, i.e. position 0.
  std::size_t cursor = 0;
  std::vector<std::string> yards;
  for (std::size_t i = 0; i < legs.size(); ++i) {
    const ServiceLeg& leg = legs[i];
    detail::require(leg.from != leg.to, ErrorCode::InvalidChain,
                    "leg " + leg.from + "->" + leg.to + " has no extent");
    auto it = std::find(route.nodes.begin() + static_cast<std::ptrdiff_t>(cursor) + 1,
                        route.nodes.end(), leg.to);
    detail::require(it != route.nodes.end(), ErrorCode::ChainNotOnRoute,
                    "leg " + leg.from + "->" + leg.to + " does not follow the route");
    cursor = static_cast<std::size_t>(it - route.nodes.begin());
    bool junction = i + 1 < legs.size();
    if (junction && net.node(leg.to).is_yard()) yards.push_back(leg.to);
  }
  route.reclass_yards = std::move(yards);
  return route;
}

}  // namespace railprice
