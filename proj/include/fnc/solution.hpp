#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "fnc/gf.hpp"
#include "fnc/network.hpp"

namespace fnc {

// exact rational with reduced representation, non-negative denominators
struct fraction {
  long long num = 0;
  long long den = 1;
  fraction() = default;
  fraction(long long n, long long d);
  fraction operator+(const fraction& o) const;
  bool operator==(const fraction& o) const { return num == o.num && den == o.den; }
  bool operator<(const fraction& o) const { return num * o.den < o.num * den; }
  std::string to_string() const;
};

// linear code as one global encoding matrix per edge; rows are the stacked
// message coordinates x_1..x_m (sum(k) rows), input edge i has k_i columns,
// intermediate edges have n columns
struct fnc_solution {
  field f;
  std::vector<int> k;  // message dimensions, index i-1 for x_i
  int n = 1;           // intermediate edge dimension
  std::map<std::string, mat> global;

  int total_k() const { return std::accumulate(k.begin(), k.end(), 0); }
};

// the sum(k) x k_i block of the identity picking message i's coordinates
mat selector(const field& f, const std::vector<int>& k, int i);

struct verify_failure {
  std::string kind;    // "shape", "N1", "N2" or "N3"
  std::string where;   // edge id, or node/message for N2
  std::string detail;
};

// empty result means verified: N1 input matrices are selectors, N3 every
// intermediate edge is computable from its origin's incoming stack, N2 every
// demand is decodable from the demanding node's incoming stack
std::vector<verify_failure> verify_solution(const network& net, const fnc_solution& sol);

struct rate_report {
  std::vector<fraction> rate;  // k_i / n
  fraction average;            // (1/m) sum k_i/n
  bool symmetric = false;      // all k_i equal
};

rate_report rates(const network& net, const fnc_solution& sol);

// the incoming stack at v: global matrices of in_edges(v) concatenated; a
// node with no incoming edges yields a sum(k) x 0 matrix
mat in_stack(const network& net, const fnc_solution& sol, const std::string& v);

}  // namespace fnc
