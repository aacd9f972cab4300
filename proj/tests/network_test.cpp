#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_util.hpp"
#include "railprice/network.hpp"

namespace railprice {
namespace {

using testing::code_of;

Node station(std::string id, NodeKind kind = NodeKind::LoadingStation) {
  return {std::move(id), kind, std::nullopt};
}

Node yard(std::string id, YardParams p = {1.5, 2.5, 40.0}) {
  return {std::move(id), NodeKind::ClassificationYard, p};
}

// O - Y1 - Y2 - Y3 - U
Network corridor() {
  return build_network({station("O"), yard("Y1"), yard("Y2"), yard("Y3"),
                        station("U", NodeKind::UnloadingStation)},
                       {{"O", "Y1", 100}, {"Y1", "Y2", 100}, {"Y2", "Y3", 100}, {"Y3", "U", 100}});
}

TEST(Network, BuildsMinimalGraph) {
  auto net = build_network({station("O"), station("U", NodeKind::UnloadingStation)},
                           {{"O", "U", 500}});
  EXPECT_EQ(net.node_count(), 2u);
  EXPECT_EQ(net.link_count(), 1u);
  EXPECT_EQ(net.neighbors(*net.index_of("O")).size(), 1u);
  EXPECT_EQ(net.neighbors(*net.index_of("U")).size(), 1u);
}

TEST(Network, RejectsMalformedInput) {
  EXPECT_EQ(code_of([] { build_network({yard("Y1"), yard("Y1")}, {}); }),
            ErrorCode::DuplicateNodeId);
  EXPECT_EQ(code_of([] { build_network({yard("Y1")}, {{"Y1", "Y9", 10}}); }),
            ErrorCode::DanglingLinkEndpoint);
  EXPECT_EQ(code_of([] { build_network({yard("Y1"), yard("Y2")}, {{"Y1", "Y2", 0}}); }),
            ErrorCode::NonPositiveLength);
  EXPECT_EQ(code_of([] { build_network({yard("Y1"), yard("Y2")}, {{"Y1", "Y2", -3}}); }),
            ErrorCode::NonPositiveLength);
  EXPECT_EQ(code_of([] { build_network({yard("Y1")}, {{"Y1", "Y1", 3}}); }),
            ErrorCode::ValidationError);
  EXPECT_EQ(code_of([] { build_network({station("Y1", NodeKind::ClassificationYard)}, {}); }),
            ErrorCode::InvalidYardParams);
  EXPECT_EQ(code_of([] {
              Node s = station("O");
              s.yard_params = YardParams{};
              build_network({s}, {});
            }),
            ErrorCode::InvalidYardParams);
  EXPECT_EQ(code_of([] { build_network({yard("Y1", {-1.0, 0.0, 0.0})}, {}); }),
            ErrorCode::InvalidYardParams);
}

TEST(ShortestPath, TriangleTakesTwoHopDetour) {
  std::vector<Node> nodes{station("O"), yard("A"), station("D", NodeKind::UnloadingStation)};
  std::vector<Link> links{{"O", "A", 3}, {"A", "D", 4}, {"O", "D", 10}};
  auto route = shortest_path(build_network(nodes, links), "O", "D");
  EXPECT_EQ(route.nodes, (std::vector<std::string>{"O", "A", "D"}));
  EXPECT_DOUBLE_EQ(route.distance_km, 7.0);
  EXPECT_DOUBLE_EQ(route.distance_km, testing::brute_force_shortest(nodes, links, "O", "D"));
  EXPECT_EQ(route.reclass_yards, (std::vector<std::string>{"A"}));
}

TEST(ShortestPath, IdentityRoute) {
  auto route = shortest_path(corridor(), "O", "O");
  EXPECT_EQ(route.nodes, (std::vector<std::string>{"O"}));
  EXPECT_EQ(route.distance_km, 0.0);
  EXPECT_EQ(route.q(), 0u);
}

TEST(ShortestPath, Errors) {
  auto net = build_network({station("O"), station("P"), station("Q"), station("R")},
                           {{"O", "P", 1}, {"Q", "R", 1}});
  EXPECT_EQ(code_of([&] { shortest_path(net, "O", "R"); }), ErrorCode::Unreachable);
  EXPECT_EQ(code_of([&] { shortest_path(net, "O", "Z"); }), ErrorCode::UnknownNode);
  EXPECT_EQ(code_of([&] { shortest_path(net, "Z", "O"); }), ErrorCode::UnknownNode);
}

TEST(ShortestPath, TiesBreakToSmallestIdSequence) {
  // Two 10 km routes O-B-D and O-A-D; O-A-D sorts first.
  auto net = build_network({station("O"), yard("B"), yard("A"), station("D")},
                           {{"O", "B", 5}, {"B", "D", 5}, {"O", "A", 6}, {"A", "D", 4}});
  auto route = shortest_path(net, "O", "D");
  EXPECT_EQ(route.nodes, (std::vector<std::string>{"O", "A", "D"}));
  EXPECT_DOUBLE_EQ(route.distance_km, 10.0);
}

TEST(ReclassificationSet, DefaultMarksEveryIntermediateYard) {
  auto net = corridor();
  auto route = reclassification_set(net, shortest_path(net, "O", "U"));
  EXPECT_EQ(route.reclass_yards, (std::vector<std::string>{"Y1", "Y2", "Y3"}));
  EXPECT_EQ(route.q(), 3u);
}

TEST(ReclassificationSet, ChainBypassesThroughYards) {
  auto net = corridor();
  ServiceChain chain{{{"O", "Y1"}, {"Y1", "Y3"}, {"Y3", "U"}}};
  auto route = reclassification_set(net, shortest_path(net, "O", "U"), chain);
  EXPECT_EQ(route.reclass_yards, (std::vector<std::string>{"Y1", "Y3"}));
  EXPECT_EQ(route.q(), 2u);
  EXPECT_DOUBLE_EQ(route.distance_km, 400.0);

  auto direct = reclassification_set(net, route, ServiceChain{{{"O", "U"}}});
  EXPECT_EQ(direct.q(), 0u);
}

TEST(ReclassificationSet, RejectsChainsOffTheRoute) {
  auto net = corridor();
  auto route = shortest_path(net, "O", "U");
  EXPECT_EQ(code_of([&] {
              reclassification_set(net, route, ServiceChain{{{"O", "Y9"}, {"Y9", "U"}}});
            }),
            ErrorCode::ChainNotOnRoute);
  // Backwards along the route.
  EXPECT_EQ(code_of([&] {
              reclassification_set(net, route,
                                   ServiceChain{{{"O", "Y2"}, {"Y2", "Y1"}, {"Y1", "U"}}});
            }),
            ErrorCode::ChainNotOnRoute);
  EXPECT_EQ(code_of([&] {
              reclassification_set(net, route, ServiceChain{{{"Y1", "U"}}});
            }),
            ErrorCode::ChainNotOnRoute);
  EXPECT_EQ(code_of([&] {
              reclassification_set(net, route, ServiceChain{{{"O", "Y1"}, {"Y2", "U"}}});
            }),
            ErrorCode::InvalidChain);
  EXPECT_EQ(code_of([&] { reclassification_set(net, route, ServiceChain{}); }),
            ErrorCode::InvalidChain);
}

TEST(NetworkProperties, RandomGraphsAgreeWithOracleAndChainsNeverAddYards) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = testing::random_connected_graph(rng, 8);
    auto net = build_network(g.nodes, g.links);
    std::uniform_int_distribution<std::size_t> pick(0, g.nodes.size() - 1);
    const auto& origin = g.nodes[pick(rng)].id;
    const auto& dest = g.nodes[pick(rng)].id;

    auto route = shortest_path(net, origin, dest);
    EXPECT_EQ(route.distance_km, testing::brute_force_shortest(g.nodes, g.links, origin, dest));

    std::size_t intermediate_yards = 0;
    for (std::size_t i = 1; i + 1 < route.nodes.size(); ++i) {
      intermediate_yards += net.node(route.nodes[i]).is_yard();
    }
    EXPECT_EQ(reclassification_set(net, route).q(), intermediate_yards);
    if (route.nodes.size() < 2) continue;

    // Random chain: keep each interior node as a junction with prob 1/2.
    ServiceChain chain;
    std::string from = route.origin();
    std::bernoulli_distribution keep(0.5);
    for (std::size_t i = 1; i < route.nodes.size(); ++i) {
      if (i + 1 == route.nodes.size() || keep(rng)) {
        chain.legs.push_back({from, route.nodes[i]});
        from = route.nodes[i];
      }
    }
    auto chained = reclassification_set(net, route, chain);
    EXPECT_LE(chained.q(), intermediate_yards);
    EXPECT_EQ(chained.distance_km, route.distance_km);
    EXPECT_EQ(chained.nodes, route.nodes);
  }
}

}  // namespace
}  // namespace railprice
