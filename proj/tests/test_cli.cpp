#include <string>

#include <doctest.h>

#include "testutil.hpp"

using testutil::data_path;
using testutil::run_tool;

namespace {

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("rank queries print bare integers") {
  auto empty = run_tool("dpm rank --rep " + data_path("rep_r4.json") +
                        " --subset \"\"");
  CHECK(empty.code == 0);
  CHECK(empty.out == "0\n");

  auto pair = run_tool("dpm rank --rep " + data_path("rep_r4.json") +
                       " --subset 1,4");
  CHECK(pair.code == 0);
  CHECK(pair.out == "2\n");
}

TEST_CASE("the full rank table appears without a subset argument") {
  auto r = run_tool("dpm rank --rep " + data_path("rep_r4.json"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"r\":4"));
  CHECK(contains(r.out, "\"15\":3"));

  auto pretty = run_tool("dpm rank --rep " + data_path("rep_r4.json") +
                         " --pretty");
  CHECK(pretty.code == 0);
  CHECK(pretty.out.substr(0, 2) == "{\n");
  CHECK(contains(pretty.out, "\"r\": 4"));
}

TEST_CASE("basis listing is exact") {
  auto r = run_tool("dpm bases --rep " + data_path("rep_r4.json"));
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"rank\":3,\"bases\":[[0,0,1,2],[0,1,0,2],[0,1,1,1],[1,0,1,1],"
        "[1,1,0,1],[1,1,1,0]]}\n");
}

TEST_CASE("minimal excluded vectors for one element") {
  auto r = run_tool("dpm csets --rep " + data_path("rep_r4.json") +
                    " --index 4");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"i\":4,\"c\":[[1,1,1,1]]}\n");
}

TEST_CASE("excluded vectors for one element") {
  auto r = run_tool("dpm csets --rep " + data_path("rep_r4.json") +
                    " --excluded --index 1");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"i\":1,\"d\":[[1,0,0,2],[1,0,1,2],[1,1,0,2],[1,1,1,1],"
        "[1,1,1,2]]}\n");
}

TEST_CASE("axiom check reports validity") {
  auto r = run_tool("dpm axioms --rep " + data_path("rep_r4.json"));
  CHECK(r.code == 0);
  CHECK(r.out == "{\"valid\":true}\n");
}

TEST_CASE("matroid check and conversion") {
  auto ok = run_tool("matroid check --matroid " + data_path("matroid_u23.json"));
  CHECK(ok.code == 0);
  CHECK(ok.out == "{\"valid\":true}\n");

  auto conv = run_tool("matroid convert --matroid " +
                       data_path("matroid_u23.json") +
                       " --out /tmp/cli_u23_poly.json");
  CHECK(conv.code == 0);
  auto rank = run_tool("dpm rank --poly /tmp/cli_u23_poly.json --subset 1,2,3");
  CHECK(rank.code == 0);
  CHECK(rank.out == "2\n");
}

TEST_CASE("network validation exit codes") {
  auto ok = run_tool("net validate --net " + data_path("net_relay.json"));
  CHECK(ok.code == 0);
  CHECK(ok.out == "{\"valid\":true}\n");

  auto cyc = run_tool("net validate --net " + data_path("net_cycle.json"));
  CHECK(cyc.code == 1);
  CHECK(contains(cyc.out, "cycle: a -> b -> a"));
}

TEST_CASE("malformed input exits with the input-error code") {
  auto r = run_tool("dpm rank --rep " + data_path("malformed.json"));
  CHECK(r.code == 2);
  auto missing = run_tool("dpm rank --rep /nonexistent/nope.json");
  CHECK(missing.code == 2);
}

TEST_CASE("usage errors exit with the input-error code") {
  CHECK(run_tool("").code == 2);            // a subcommand is required
  CHECK(run_tool("frobnicate").code == 2);  // unknown subcommand
  // --poly and --rep are mutually exclusive inputs
  CHECK(run_tool("dpm rank --rep " + data_path("rep_r4.json") + " --poly " +
                 data_path("rep_r4.json"))
            .code == 2);
}

TEST_CASE("dot output renders the network") {
  auto r = run_tool("net dot --net " + data_path("net_relay.json"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "digraph network"));
  CHECK(contains(r.out, "\"4'\" -> \"4\""));
  CHECK(contains(r.out, "wants x3"));
}

TEST_CASE("solution verification against fixtures") {
  auto r = run_tool("fnc verify --net " + data_path("net_relay.json") +
                    " --sol " + data_path("sol_relay.json"));
  CHECK(r.code == 0);
  CHECK(r.out == "{\"verified\":true}\n");

  auto rates = run_tool("fnc rates --net " + data_path("net_relay.json") +
                        " --sol " + data_path("sol_relay.json"));
  CHECK(rates.code == 0);
  CHECK(rates.out ==
        "{\"rate\":[\"1/2\",\"1/2\",\"1/2\"],\"average\":\"1/2\","
        "\"symmetric\":true}\n");
}

TEST_CASE("search exit codes distinguish the three verdicts") {
  std::string base = "fnc search --net " + data_path("net_relay.json");

  auto none = run_tool(base + " --dims 1,1,1 --edge-dim 1 --q 2");
  CHECK(none.code == 3);
  CHECK(none.out ==
        "{\"verdict\":\"exhausted-none\",\"candidates\":8,"
        "\"budget\":67108864}\n");

  auto found = run_tool(base + " --dims 1,1,1 --edge-dim 2 --q 2");
  CHECK(found.code == 0);
  CHECK(contains(found.out, "\"verdict\":\"found\",\"candidates\":27"));
  CHECK(contains(found.out, "\"solution\":{\"q\":2"));

  auto over = run_tool(base + " --dims 2,2,2 --edge-dim 3 --q 2 --budget 100");
  CHECK(over.code == 4);
  CHECK(contains(over.out, "\"verdict\":\"budget-exceeded\""));

  // several workers leave the report unchanged
  auto par = run_tool(base + " --dims 1,1,1 --edge-dim 1 --q 2 --jobs 3");
  CHECK(par.code == 3);
  CHECK(par.out == none.out);
}

TEST_CASE("a found search solution written to a file verifies") {
  auto found = run_tool("fnc search --net " + data_path("net_relay.json") +
                        " --dims 1,1,1 --edge-dim 2 --q 2 --out "
                        "/tmp/cli_found_sol.json");
  CHECK(found.code == 0);
  auto check = run_tool("fnc verify --net " + data_path("net_relay.json") +
                        " --sol /tmp/cli_found_sol.json");
  CHECK(check.code == 0);
  CHECK(check.out == "{\"verified\":true}\n");
}

TEST_CASE("capacity sweep prints the best achievable ratio") {
  auto r = run_tool("fnc capacity --net " + data_path("net_relay.json") +
                    " --q 2 --k-max 1 --n-max 2");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"mode\":\"symmetric\",\"table\":[{\"k\":1,\"n\":1,\"verdict\":"
        "\"exhausted-none\",\"candidates\":8},{\"k\":1,\"n\":2,\"verdict\":"
        "\"found\",\"candidates\":27}],\"best\":\"1/2\"}\n");
}

TEST_CASE("construct, extract, verify round trip through files") {
  auto con = run_tool("net construct --rep " + data_path("rep_r4.json") +
                      " --basis 1,1,1,0 --out /tmp/cli_rt_net.json --map "
                      "/tmp/cli_rt_map.json");
  CHECK(con.code == 0);
  auto ext = run_tool("fnc extract --net /tmp/cli_rt_net.json --rep " +
                      data_path("rep_r4.json") +
                      " --map /tmp/cli_rt_map.json --out /tmp/cli_rt_sol.json");
  CHECK(ext.code == 0);
  auto ver = run_tool(
      "fnc verify --net /tmp/cli_rt_net.json --sol /tmp/cli_rt_sol.json");
  CHECK(ver.code == 0);
  CHECK(ver.out == "{\"verified\":true}\n");
}

TEST_CASE("extraction failure reports the blocking edge") {
  auto r = run_tool("fnc extract --net " + data_path("net_cross.json") +
                    " --rep " + data_path("rep_cross.json") + " --map " +
                    data_path("map_cross.json"));
  CHECK(r.code == 1);
  CHECK(contains(r.out, "\"extracted\":false"));
  CHECK(contains(r.out, "independent columns"));
}

TEST_CASE("map search solves tiny networks and refuses big ones") {
  auto small = run_tool("fnc extract --net " + data_path("net_path.json") +
                        " --rep " + data_path("rep_path.json") +
                        " --find-map");
  CHECK(small.code == 0);
  CHECK(small.out ==
        "{\"q\":2,\"k\":[1],\"n\":1,\"global\":{\"e1\":[[1]],"
        "\"s>t\":[[1]]}}\n");

  auto big = run_tool("fnc extract --net " + data_path("net_relay.json") +
                      " --rep " + data_path("rep_r4.json") + " --find-map");
  CHECK(big.code == 2);
}

TEST_CASE("a verified code converts to a representation and map") {
  auto r = run_tool("fnc frompoly --net " + data_path("net_relay.json") +
                    " --sol " + data_path("sol_relay.json"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"representation\":{\"q\":2,\"ambient\":3"));
  CHECK(contains(r.out, "\"map\":{\"f\":{"));
}
