#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fnc/gf.hpp"
#include "fnc/intvec.hpp"

namespace fnc {

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// rank table over all subsets of the ground set, indexed by bitmask
struct discrete_polymatroid {
  int r = 0;                 // ground-set size, 1..20
  std::vector<int64_t> rho;  // size 1 << r
};

// subspaces V_1..V_r of F_q^ambient given by generator matrices (column spans)
struct representation {
  field f;
  size_t ambient_dim = 0;
  std::vector<mat> generators;  // one per ground element, ambient_dim rows each
};

// rank function access that also works for ground sets too large for a table
struct rank_oracle {
  int r = 0;
  std::function<int64_t(subset)> rho;
};

int64_t rank_from_representation(const representation& rep, subset x);
discrete_polymatroid polymatroid_of(const representation& rep);  // r <= 20
// explicit rank table; checks shape and non-negative values only
discrete_polymatroid polymatroid_of(int r, std::vector<int64_t> rho);
rank_oracle oracle_of(const discrete_polymatroid& d);
rank_oracle oracle_of(const representation& rep);  // memoized

struct axiom_violation {
  std::string axiom;  // "D1", "D2" or "D3"
  subset a = 0, b = 0;
  std::string to_string() const;
};

// empty result means valid; D1/D2 are checked in their local single-element
// form, which is equivalent to the subset-pair form by induction
std::vector<axiom_violation> validate_axioms(const discrete_polymatroid& d);

// membership test |u(A)| <= rho(A) over every subset A
bool contains(const discrete_polymatroid& d, const intvec& u);
// same test over subsets of support(u) only; equivalent for monotone ranks
bool contains(const rank_oracle& d, const intvec& u);

// all members, lexicographically sorted; componentwise bounded enumeration
// with budget prod(rho({i})+1) <= 2^24
std::vector<intvec> members(const discrete_polymatroid& d);

struct exchange_report {
  bool closed_under_subvectors = false;
  std::vector<std::pair<intvec, intvec>> closure_missing;  // (member, missing sub-vector)
  bool exchange_holds = false;
  std::vector<std::pair<intvec, intvec>> exchange_failures;  // (u, v) without w
  bool ok() const { return closed_under_subvectors && exchange_holds; }
};

// checks closure under integral sub-vectors and the exchange property on an
// explicit member set
exchange_report validate_exchange(const std::vector<intvec>& ms);

std::vector<intvec> bases(const discrete_polymatroid& d);  // maximal members, lex
int64_t rank_of(const discrete_polymatroid& d);            // common basis weight
int64_t rho_max(const discrete_polymatroid& d);            // max singleton rank

// vectors u with u_i <= rho({i}) for all i that are not members, lex sorted
std::vector<intvec> excluded_vectors(const discrete_polymatroid& d);
// excluded vectors whose i-th component is exactly 1
std::vector<intvec> excluded_at(const discrete_polymatroid& d, int i);
// excluded_at(i) filtered to u with u - e_i a member, minimal among
// excluded_at(i) both componentwise and by support inclusion
std::vector<intvec> c_set(const discrete_polymatroid& d, int i);

// max singleton rank outside support(b); b must be a basis with support a
// proper subset of the ground set
int64_t phi(const discrete_polymatroid& d, const intvec& b);

}  // namespace fnc
