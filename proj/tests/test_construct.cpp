#include <string>
#include <vector>

#include <doctest.h>

#include "fnc/construct.hpp"
#include "fnc/json_io.hpp"
#include "fnc/polymatroid.hpp"
#include "fnc/solution.hpp"
#include "testutil.hpp"

using fnc::demand_choice;
using fnc::demand_policy;
using fnc::intvec;

TEST_CASE("eligible bases require singleton rank equal to the component") {
  auto d = fnc::polymatroid_of(testutil::rep_r4());
  CHECK(fnc::eligible_bases(d) ==
        std::vector<intvec>{{0, 0, 1, 2}, {0, 1, 0, 2}, {1, 1, 1, 0}});

  auto d5 = fnc::polymatroid_of(testutil::rep_r5());
  auto eb5 = fnc::eligible_bases(d5);
  CHECK(std::find(eb5.begin(), eb5.end(), intvec{2, 1, 1, 0, 0}) != eb5.end());

  // rank-0 polymatroid: the empty basis spans no sources
  CHECK(fnc::eligible_bases(fnc::polymatroid_of(1, {0, 0})).empty());
}

TEST_CASE("building from the rank-4 example reproduces the relay network") {
  auto d = fnc::polymatroid_of(testutil::rep_r4());
  auto built = fnc::build_network(d, {1, 1, 1, 0});

  auto want = testutil::net_relay();
  CHECK(built.net.nodes == want.nodes);
  CHECK(built.net.demands == want.demands);
  REQUIRE(built.net.edges.size() == want.edges.size());
  for (size_t i = 0; i < want.edges.size(); ++i) {
    CHECK(built.net.edges[i].id == want.edges[i].id);
    CHECK(built.net.edges[i].from == want.edges[i].from);
    CHECK(built.net.edges[i].to == want.edges[i].to);
  }
  REQUIRE(built.net.inputs.size() == 3);
  for (const auto& e : built.net.inputs) CHECK(e.k == 1);

  // the carried elements: inputs and direct copies keep their element, the
  // relay chain carries element 4
  fnc::edge_map want_map;
  want_map.f = {{"e1", 1},     {"e2", 2},     {"e3", 3},     {"1>4'", 1},
                {"2>4'", 2},   {"3>4'", 3},   {"4'>4", 4},   {"4>d1_1", 4},
                {"3>d2_1", 3}, {"4>d2_1", 4}, {"2>d3_1", 2}, {"4>d3_1", 4}};
  CHECK(built.f.f == want_map.f);

  CHECK(built.state.sources == 0b0111);
  CHECK(built.state.covered == 0b1111);
  REQUIRE(built.state.log.size() == 4);
  CHECK(built.state.log[0].step == 2);
  CHECK(built.state.log[0].element == 4);
  CHECK(built.state.log[0].chosen == intvec{1, 1, 1, 1});
  CHECK(built.state.log[0].node == "4'");
  CHECK(built.state.log[1].chosen == intvec{1, 0, 0, 2});
  CHECK(built.state.log[2].chosen == intvec{0, 1, 1, 2});
  CHECK(built.state.log[3].node == "d3_1");
}

TEST_CASE("building from the rank-5 example matches the frozen fixture") {
  auto d = fnc::polymatroid_of(testutil::rep_r5());
  auto built = fnc::build_network(d, {2, 1, 1, 0, 0});
  auto want = fnc::network_from_json(
      fnc::load_json_file(testutil::data_path("net_two_relays.json")));
  CHECK(fnc::to_json(built.net) == fnc::to_json(want));
  auto want_map = fnc::edge_map_from_json(
      fnc::load_json_file(testutil::data_path("map_two_relays.json")));
  CHECK(built.f.f == want_map.f);

  // the second relay is fed by sources 2, 3 and the first carrier
  CHECK(fnc::in_edges(built.net, "5'") ==
        std::vector<std::string>{"2>5'", "3>5'", "4>5'"});
}

TEST_CASE("replaying a construction log reproduces the network") {
  auto d = fnc::polymatroid_of(testutil::rep_r5());
  auto built = fnc::build_network(d, {2, 1, 1, 0, 0});
  auto redo = fnc::replay(d, {2, 1, 1, 0, 0}, built.state.log);
  CHECK(fnc::to_json(redo.net) == fnc::to_json(built.net));
  CHECK(redo.f.f == built.f.f);
  CHECK(redo.state.covered == built.state.covered);
}

TEST_CASE("selective demand placement") {
  auto d = fnc::polymatroid_of(testutil::rep_r4());
  auto built =
      fnc::build_network(d, {1, 1, 1, 0}, demand_policy::select,
                         {demand_choice{1, {1, 0, 0, 2}}});
  REQUIRE(built.net.demands.size() == 1);
  CHECK(built.net.demands.count("d1_1") == 1);
  CHECK(fnc::validate_network(built.net).empty());

  // vectors outside the candidate family are rejected
  CHECK_THROWS(fnc::build_network(d, {1, 1, 1, 0}, demand_policy::select,
                                  {demand_choice{1, {1, 1, 1, 1}}}));
  // demands must sit on source elements
  CHECK_THROWS(fnc::build_network(d, {1, 1, 1, 0}, demand_policy::select,
                                  {demand_choice{4, {1, 1, 1, 1}}}));
}

TEST_CASE("only eligible bases are accepted") {
  auto d = fnc::polymatroid_of(testutil::rep_r4());
  CHECK_THROWS(fnc::build_network(d, {0, 1, 1, 1}));  // basis, not eligible
  CHECK_THROWS(fnc::build_network(d, {1, 0, 0, 0}));  // not even a basis
}

TEST_CASE("construction and extraction on the rank-4 example") {
  auto res = fnc::construct_and_solve(testutil::rep_r4(), {1, 1, 1, 0});
  CHECK(fnc::verify_solution(res.built.net, res.solution).empty());
  CHECK(res.solution.k == std::vector<int>{1, 1, 1});
  CHECK(res.solution.n == 2);
  CHECK(res.rates.symmetric);
  CHECK(res.rates.average == fnc::fraction(1, 2));
  CHECK(res.solution.global.at("4'>4") ==
        fnc::mat::from_rows(res.solution.f, {{1, 0}, {0, 1}, {0, 1}}));
}

TEST_CASE("construction and extraction on the rank-5 example") {
  auto res = fnc::construct_and_solve(testutil::rep_r5(), {2, 1, 1, 0, 0});
  CHECK(fnc::verify_solution(res.built.net, res.solution).empty());
  CHECK(res.solution.k == std::vector<int>{2, 1, 1});
  CHECK(res.solution.n == 2);
  CHECK_FALSE(res.rates.symmetric);
  CHECK(res.rates.average == fnc::fraction(2, 3));
  CHECK(res.rates.rate[0] == fnc::fraction(1, 1));
}

TEST_CASE("other eligible bases of the rank-4 example also solve") {
  for (intvec b : {intvec{0, 0, 1, 2}, intvec{0, 1, 0, 2}}) {
    auto res = fnc::construct_and_solve(testutil::rep_r4(), b);
    CHECK(fnc::verify_solution(res.built.net, res.solution).empty());
    CHECK(res.solution.k == std::vector<int>{1, 2});
    CHECK(res.solution.n == 1);
  }
}

TEST_CASE("construction succeeds where extraction cannot fit the demands") {
  auto rep = fnc::representation_from_json(
      fnc::load_json_file(testutil::data_path("rep_cross.json")));
  auto d = fnc::polymatroid_of(rep);
  // the network itself is fine and satisfies the carried-rank conditions...
  auto built = fnc::build_network(d, {2, 2, 0, 0});
  CHECK(fnc::validate_network(built.net).empty());
  CHECK(fnc::check_dpn(built.net, fnc::oracle_of(d), built.f, {2, 2}, 1)
            .empty());
  // ...but the width-1 edges cannot carry the two columns the demands need
  CHECK_THROWS_AS(fnc::construct_and_solve(rep, {2, 2, 0, 0}),
                  fnc::extraction_error);
}
