#pragma once

#include <map>
#include <string>
#include <vector>

#include "fnc/matroid.hpp"
#include "fnc/network.hpp"
#include "fnc/polymatroid.hpp"
#include "fnc/solution.hpp"

namespace fnc {

// map from edge ids to ground-set elements, total on the network's edges
struct edge_map {
  std::map<std::string, int> f;
};

struct dpn_violation {
  std::string condition;  // "DN1".."DN4"
  std::string witness;
};

// checks DN1 (injective on input edges), DN2 (source dimension vector is a
// member), DN3 (source singleton ranks equal the message dimensions; the max
// singleton rank over elements carried only by intermediate edges equals n,
// vacuous when no such element exists) and DN4 (rank of f(In(x)) stable under
// adding f(Out(x))) at every node
std::vector<dpn_violation> check_dpn(const network& net, const rank_oracle& d,
                                     const edge_map& f, const std::vector<int>& k,
                                     int n);

// check_dpn with k_i = n = rho_max(d)
bool is_discrete_polymatroidal(const network& net, const discrete_polymatroid& d,
                               const edge_map& f);
// check_dpn on the matroid's polymatroid with all dimensions 1
bool is_matroidal(const network& net, const matroid& m, const edge_map& f);

struct extraction_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// builds the linear solution carried by a representation on a network whose
// edge map satisfies the DN conditions: message dimensions are the singleton
// ranks of the source elements, n is the max singleton rank carried only by
// intermediate edges; generators are restricted to the image of f, compressed
// to ambient dimension sum(k) and normalized so the stacked source generators
// are the identity; every edge then carries the generator of its element,
// zero-padded to n columns.  When an edge's element has rank above n the
// columns actually needed downstream are selected instead; if more than n
// columns are needed the extraction fails with extraction_error.
fnc_solution extract_solution(const network& net, const representation& rep,
                              const edge_map& f);

// one ground element per edge, generator = that edge's global matrix, f the
// identity on edge ids; check_dpn holds on the result with the solution dims
std::pair<representation, edge_map> polymatroid_from_solution(const network& net,
                                                              const fnc_solution& sol);

// identity edge map on a network's own edges (ground element per edge,
// numbered by ancestral order); helper for polymatroid_from_solution users
edge_map identity_edge_map(const network& net);

}  // namespace fnc
