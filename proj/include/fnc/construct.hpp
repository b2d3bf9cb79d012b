#pragma once

#include <string>
#include <vector>

#include "fnc/bridge.hpp"
#include "fnc/network.hpp"
#include "fnc/polymatroid.hpp"
#include "fnc/solution.hpp"

namespace fnc {

// bases whose support components equal the singleton ranks (the all-zero
// basis of a rank-0 polymatroid is excluded: it spans no sources)
std::vector<intvec> eligible_bases(const discrete_polymatroid& d);

struct construction_step {
  int step = 0;        // 2 or 3
  int element = 0;     // the ground element i driving the step
  intvec chosen;       // the vector u picked from its candidate set
  std::string node;    // node added ("<i>'" for step 2, "d<i>_<seq>" for step 3)
};

struct construction_state {
  subset sources = 0;  // M, the support of the chosen basis
  subset covered = 0;  // T
  std::vector<construction_step> log;
};

enum class demand_policy { exhaustive, select };

// explicit step-3 choices for demand_policy::select
struct demand_choice {
  int element = 0;
  intvec u;
};

struct built_network {
  network net;
  edge_map f;
  construction_state state;
};

// deterministic construction: sources for the support of b; then a fixpoint
// that, scanning ground elements in ascending order, adds a relay/carrier
// node pair for the first uncovered element with a candidate vector whose
// off-element support is covered (lexicographically least candidate); then
// one demand node per (source element, candidate with covered support) --
// all of them under demand_policy::exhaustive, the given list under select.
// naming: sources and carriers use the element index, relays add a prime,
// demand nodes are d<i>_<seq>; input edges are e<i>, intermediate edges
// "<from>><to>"
built_network build_network(const discrete_polymatroid& d, const intvec& b,
                            demand_policy policy = demand_policy::exhaustive,
                            const std::vector<demand_choice>& choices = {});

// replays a construction log step by step, asserting it reproduces the state
built_network replay(const discrete_polymatroid& d, const intvec& b,
                     const std::vector<construction_step>& log);

struct construct_result {
  built_network built;
  fnc_solution solution;
  rate_report rates;
};

// build_network on polymatroid_of(rep), then extract the carried solution;
// the returned solution is verified
construct_result construct_and_solve(const representation& rep, const intvec& b,
                                     demand_policy policy = demand_policy::exhaustive,
                                     const std::vector<demand_choice>& choices = {});

}  // namespace fnc
