#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fnc {

// non-negative integer vector on a 1-based ground set; subsets of the ground
// set are bitmasks with element i on bit i-1
using intvec = std::vector<int>;
using subset = uint64_t;

intvec unit(int i, int r);                       // epsilon_{i,r}, 1-based i
intvec restrict_to(const intvec& v, subset a);   // components of a, ascending
int64_t weight(const intvec& v);                 // |v|
int64_t weight_on(const intvec& v, subset a);    // |v(A)|
intvec join(const intvec& u, const intvec& v);   // componentwise max
bool leq(const intvec& u, const intvec& v);      // u <= v componentwise
bool lt(const intvec& u, const intvec& v);       // u <= v and u != v
subset support(const intvec& v);                 // (v)_{>0}
bool lex_less(const intvec& u, const intvec& v);

std::vector<int> subset_elements(subset a);      // ascending 1-based elements
std::string subset_to_string(subset a);          // "{1,3,4}"
subset subset_from_elements(const std::vector<int>& elems, int r);

}  // namespace fnc
