#include "fnc/intvec.hpp"

#include <sstream>
#include <stdexcept>

namespace fnc {

intvec unit(int i, int r) {
  if (i < 1 || i > r) throw std::out_of_range("unit: element out of range");
  intvec v(r, 0);
  v[i - 1] = 1;
  return v;
}

intvec restrict_to(const intvec& v, subset a) {
  intvec out;
  for (size_t i = 0; i < v.size(); ++i)
    if (a >> i & 1) out.push_back(v[i]);
  return out;
}

int64_t weight(const intvec& v) {
  int64_t s = 0;
  for (int x : v) s += x;
  return s;
}

int64_t weight_on(const intvec& v, subset a) {
  int64_t s = 0;
  for (size_t i = 0; i < v.size(); ++i)
    if (a >> i & 1) s += v[i];
  return s;
}

intvec join(const intvec& u, const intvec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("join: length mismatch");
  intvec out(u.size());
  for (size_t i = 0; i < u.size(); ++i) out[i] = std::max(u[i], v[i]);
  return out;
}

bool leq(const intvec& u, const intvec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("leq: length mismatch");
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

bool lt(const intvec& u, const intvec& v) { return leq(u, v) && u != v; }

subset support(const intvec& v) {
  subset s = 0;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] > 0) s |= subset(1) << i;
  return s;
}

bool lex_less(const intvec& u, const intvec& v) {
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

std::vector<int> subset_elements(subset a) {
  std::vector<int> out;
  for (int i = 0; a >> i; ++i)
    if (a >> i & 1) out.push_back(i + 1);
  return out;
}

std::string subset_to_string(subset a) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int e : subset_elements(a)) {
    if (!first) os << ",";
    os << e;
    first = false;
  }
  os << "}";
  return os.str();
}

subset subset_from_elements(const std::vector<int>& elems, int r) {
  subset s = 0;
  for (int e : elems) {
    if (e < 1 || e > r) throw std::out_of_range("subset: element out of range");
    s |= subset(1) << (e - 1);
  }
  return s;
}

}  // namespace fnc
