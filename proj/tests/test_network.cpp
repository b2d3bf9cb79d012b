#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <doctest.h>

#include "fnc/network.hpp"
#include "testutil.hpp"

using fnc::network;

TEST_CASE("the relay network validates cleanly") {
  CHECK(fnc::validate_network(testutil::net_relay()).empty());
}

TEST_CASE("structural problems are each reported") {
  network base = testutil::net_relay();

  SUBCASE("duplicate node id") {
    base.nodes.push_back("1");
    auto v = fnc::validate_network(base);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().find("duplicate node") != std::string::npos);
  }
  SUBCASE("edge to unknown node") {
    base.edges.push_back({"bad", "1", "ghost"});
    auto v = fnc::validate_network(base);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().find("unknown node ghost") != std::string::npos);
  }
  SUBCASE("duplicate edge id") {
    base.edges.push_back({"e1", "1", "4'"});  // clashes with an input id
    auto v = fnc::validate_network(base);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().find("duplicate edge id e1") != std::string::npos);
  }
  SUBCASE("demand for a message nobody generates") {
    base.demands["d1_1"] = {9};
    auto v = fnc::validate_network(base);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().find("nonexistent message x9") != std::string::npos);
  }
  SUBCASE("input dimension below one") {
    base.inputs[0].k = 0;
    auto v = fnc::validate_network(base);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().find("dimension < 1") != std::string::npos);
  }
  SUBCASE("message indices must cover 1..m") {
    base.inputs[2].msg = 7;
    auto v = fnc::validate_network(base);
    REQUIRE_FALSE(v.empty());
  }
  SUBCASE("cycles are reported with a witness path") {
    base.edges.push_back({"back", "4", "4'"});
    auto v = fnc::validate_network(base);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front().rfind("cycle: ", 0) == 0);
    CHECK(v.front().find("4'") != std::string::npos);
  }
}

TEST_CASE("incoming edges stack inputs by message then edges by id") {
  network net = testutil::net_relay();
  CHECK(fnc::in_edges(net, "4'") ==
        std::vector<std::string>{"1>4'", "2>4'", "3>4'"});
  CHECK(fnc::in_edges(net, "1") == std::vector<std::string>{"e1"});
  CHECK(fnc::in_edges(net, "d2_1") ==
        std::vector<std::string>{"3>d2_1", "4>d2_1"});
  CHECK(fnc::in_edges(net, "4") == std::vector<std::string>{"4'>4"});
  CHECK_THROWS(fnc::in_edges(net, "ghost"));

  // a node holding several messages stacks them in message order regardless
  // of input-edge id spelling
  network two;
  two.nodes = {"a", "b"};
  two.inputs = {{"zz", "a", 1, 1}, {"aa", "a", 2, 1}};
  two.edges = {{"a>b", "a", "b"}};
  two.demands = {{"b", {1, 2}}};
  CHECK(fnc::in_edges(two, "a") == std::vector<std::string>{"zz", "aa"});
}

TEST_CASE("outgoing set lists edges then demanded inputs") {
  network net = testutil::net_relay();
  CHECK(fnc::out_set(net, "4") ==
        std::vector<std::string>{"4>d1_1", "4>d2_1", "4>d3_1"});
  CHECK(fnc::out_set(net, "d2_1") == std::vector<std::string>{"e2"});
  CHECK(fnc::out_set(net, "2") ==
        std::vector<std::string>{"2>4'", "2>d3_1"});
}

TEST_CASE("ancestral order puts origins before their dependents") {
  network net = testutil::net_relay();
  auto order = fnc::ancestral_order(net);
  REQUIRE(order.size() == net.inputs.size() + net.edges.size());

  std::map<std::string, size_t> pos;
  for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  // inputs come first
  for (const auto& e : net.inputs) CHECK(pos.at(e.id) < net.inputs.size());
  // every edge appears after all edges entering its origin node
  for (const auto& e : net.edges)
    for (const auto& in : fnc::in_edges(net, e.from))
      CHECK(pos.at(in) < pos.at(e.id));

  network cyc = net;
  cyc.edges.push_back({"back", "4", "4'"});
  CHECK_THROWS(fnc::ancestral_order(cyc));
}

TEST_CASE("dot rendering contains nodes, edges, and demand labels") {
  std::string dot = fnc::to_dot(testutil::net_relay());
  CHECK(dot.find("digraph network") != std::string::npos);
  CHECK(dot.find("\"4'\" -> \"4\"") != std::string::npos);
  CHECK(dot.find("wants x2") != std::string::npos);
  CHECK(dot.find("x1 (k=1)") != std::string::npos);
  CHECK(dot.find("shape=box") != std::string::npos);
}
