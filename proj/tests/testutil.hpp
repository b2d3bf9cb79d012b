#pragma once

// Shared helpers for the unit-test suite: canonical example objects built
// directly in code (independent of the JSON fixtures), fixture paths, and a
// small subprocess runner for exercising the command-line tool.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "fnc/gf.hpp"
#include "fnc/matroid.hpp"
#include "fnc/network.hpp"
#include "fnc/polymatroid.hpp"
#include "fnc/solution.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
  return std::string(FNC_TEST_DATA) + "/" + name;
}

// Rank-4 representation over GF(2), ambient dimension 3: three coordinate
// lines plus one rank-2 subspace spanned by e1 and e2+e3.
inline fnc::representation rep_r4() {
  fnc::field f(2);
  fnc::representation rep{f, 3, {}};
  rep.generators.push_back(fnc::mat::from_rows(f, {{1}, {0}, {0}}));
  rep.generators.push_back(fnc::mat::from_rows(f, {{0}, {1}, {0}}));
  rep.generators.push_back(fnc::mat::from_rows(f, {{0}, {0}, {1}}));
  rep.generators.push_back(fnc::mat::from_rows(f, {{1, 0}, {0, 1}, {0, 1}}));
  return rep;
}

// Rank-5 representation over GF(2), ambient dimension 4: one plane, two
// coordinate lines, and two more planes in general position.
inline fnc::representation rep_r5() {
  fnc::field f(2);
  fnc::representation rep{f, 4, {}};
  rep.generators.push_back(
      fnc::mat::from_rows(f, {{1, 0}, {0, 1}, {0, 0}, {0, 0}}));
  rep.generators.push_back(fnc::mat::from_rows(f, {{0}, {0}, {1}, {0}}));
  rep.generators.push_back(fnc::mat::from_rows(f, {{0}, {0}, {0}, {1}}));
  rep.generators.push_back(
      fnc::mat::from_rows(f, {{1, 1}, {1, 0}, {1, 1}, {1, 0}}));
  rep.generators.push_back(
      fnc::mat::from_rows(f, {{0, 0}, {0, 1}, {0, 1}, {1, 0}}));
  return rep;
}

// Representation over GF(2), ambient dimension 4, with two planes and two
// crossing lines.  Its basis (2,2,0,0) is eligible with singleton ranks
// exceeding the largest rank outside the basis support, which exercises the
// regime where a network built from it admits no matching linear solution.
inline fnc::representation rep_cross() {
  fnc::field f(2);
  fnc::representation rep{f, 4, {}};
  rep.generators.push_back(
      fnc::mat::from_rows(f, {{1, 0}, {0, 1}, {0, 0}, {0, 0}}));
  rep.generators.push_back(
      fnc::mat::from_rows(f, {{0, 0}, {0, 0}, {1, 0}, {0, 1}}));
  rep.generators.push_back(fnc::mat::from_rows(f, {{1}, {0}, {1}, {0}}));
  rep.generators.push_back(fnc::mat::from_rows(f, {{0}, {1}, {0}, {1}}));
  return rep;
}

// The butterfly-style relay network: three sources, one relay pair (4', 4),
// and one demand node per message.
inline fnc::network net_relay() {
  fnc::network net;
  net.nodes = {"1", "2", "3", "4'", "4", "d1_1", "d2_1", "d3_1"};
  net.inputs = {{"e1", "1", 1, 1}, {"e2", "2", 2, 1}, {"e3", "3", 3, 1}};
  net.edges = {{"1>4'", "1", "4'"},    {"2>4'", "2", "4'"},
               {"3>4'", "3", "4'"},    {"4'>4", "4'", "4"},
               {"4>d1_1", "4", "d1_1"}, {"3>d2_1", "3", "d2_1"},
               {"4>d2_1", "4", "d2_1"}, {"2>d3_1", "2", "d3_1"},
               {"4>d3_1", "4", "d3_1"}};
  net.demands = {{"d1_1", {1}}, {"d2_1", {2}}, {"d3_1", {3}}};
  return net;
}

struct tool_result {
  int code = -1;
  std::string out;
};

// Runs the command-line tool with the given argument string, capturing stdout.
// stderr is discarded so error-path tests only observe the exit code.
inline tool_result run_tool(const std::string& args) {
  std::string cmd = std::string(FNCTOOL_PATH) + " " + args + " 2>/dev/null";
  tool_result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  return r;
}

}  // namespace testutil
