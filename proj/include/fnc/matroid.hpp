#pragma once

#include <string>
#include <vector>

#include "fnc/intvec.hpp"
#include "fnc/polymatroid.hpp"

namespace fnc {

// matroid as an explicit family of independent sets, r <= 16
struct matroid {
  int r = 0;
  std::vector<subset> independent;  // sorted, deduplicated on validation
};

struct matroid_violation {
  int axiom = 0;  // 1: empty set, 2: downward closure, 3: augmentation
  subset a = 0, b = 0;
  std::string to_string() const;
};

// empty result means valid
std::vector<matroid_violation> validate_matroid(const matroid& m);

// max size of an independent subset of a
int64_t matroid_rank(const matroid& m, subset a);

// rank table equals the matroid rank; members are the indicator vectors of
// the independent sets
discrete_polymatroid to_polymatroid(const matroid& m);

matroid uniform_matroid(int k, int r);  // all subsets of size <= k

}  // namespace fnc
