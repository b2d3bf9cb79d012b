#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fnc/network.hpp"
#include "fnc/solution.hpp"

namespace fnc {

enum class search_verdict { found, exhausted_none, budget_exceeded };

struct search_outcome {
  search_verdict verdict = search_verdict::exhausted_none;
  std::optional<fnc_solution> solution;  // set when found
  uint64_t candidates = 0;               // payload assignments examined
  uint64_t budget = 0;
};

// exhaustive search for a linear solution with the given message dimensions
// and edge dimension over F_q.  Edges are processed in ancestral order; an
// edge whose origin's incoming stack has rank <= n is forced to carry the
// whole stack column space (padding to n columns), which subsumes any other
// choice; an edge whose origin offers rank r_v > n enumerates all q^(r_v * n)
// coordinate matrices in base-q order.  Demands are checked as soon as every
// incoming edge of the demanding node is determined, pruning the subtree.
// The forced-maximal reduction preserves the verdict because downstream
// feasibility is monotone in the carried column space.  A found solution is
// the first in enumeration order and is re-verified before being returned;
// exhausted_none certifies that the reduced space holds no solution, and is
// never emitted when the budget interrupts the enumeration.
search_outcome search_linear(const network& net, const std::vector<int>& k, int n,
                             uint32_t q, uint64_t budget = uint64_t(1) << 26,
                             int jobs = 1);

struct symmetric_cell {
  int k = 0, n = 0;
  search_verdict verdict = search_verdict::exhausted_none;
  uint64_t candidates = 0;
};

struct symmetric_rate_result {
  std::vector<symmetric_cell> table;      // all reduced ratios, descending
  std::optional<fraction> best;           // largest k/n found
  std::optional<fnc_solution> witness;    // solution achieving best
};

// searches every gcd-reduced ratio k/n with k <= k_max, n <= n_max in
// descending ratio order; per-cell budget overruns are recorded, not fatal
symmetric_rate_result max_symmetric_rate(const network& net, uint32_t q, int k_max,
                                         int n_max, uint64_t budget = uint64_t(1) << 26,
                                         int jobs = 1);

struct average_cell {
  std::vector<int> k;
  int n = 0;
  fraction average;
  search_verdict verdict = search_verdict::exhausted_none;
  uint64_t candidates = 0;
};

struct average_rate_result {
  std::vector<average_cell> tried;       // cells searched, in search order
  std::optional<average_cell> best;      // first found cell
  std::optional<fnc_solution> witness;
};

// searches dimension tuples k_i <= dim_max, n <= n_max in descending average
// order (ties: ascending n, then ascending k lexicographically) and stops at
// the first found solution
average_rate_result best_average_rate(const network& net, uint32_t q, int dim_max,
                                      int n_max, uint64_t budget = uint64_t(1) << 26,
                                      int jobs = 1);

}  // namespace fnc
