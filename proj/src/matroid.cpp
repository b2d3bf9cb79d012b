#include "fnc/matroid.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace fnc {

std::string matroid_violation::to_string() const {
  std::ostringstream os;
  switch (axiom) {
    case 1: return "axiom 1 violated: empty set not independent";
    case 2:
      os << "axiom 2 violated: " << subset_to_string(a) << " independent but "
         << subset_to_string(b) << " is not";
      break;
    case 3:
      os << "axiom 3 violated: no augmentation of " << subset_to_string(a)
         << " from " << subset_to_string(b);
      break;
  }
  return os.str();
}

std::vector<matroid_violation> validate_matroid(const matroid& m) {
  std::vector<matroid_violation> out;
  if (m.r < 1 || m.r > 16)
    throw std::invalid_argument("validate_matroid: ground-set size must be 1..16");
  std::set<subset> fam(m.independent.begin(), m.independent.end());
  if (!fam.count(0)) out.push_back({1, 0, 0});
  for (subset a : fam)
    for (int i = 0; i < m.r; ++i) {
      if (!(a >> i & 1)) continue;
      subset b = a & ~(subset(1) << i);
      if (!fam.count(b)) {
        out.push_back({2, a, b});
        break;
      }
    }
  for (subset a : fam)
    for (subset b : fam) {
      if (std::popcount(a) >= std::popcount(b)) continue;
      bool augmented = false;
      for (int i = 0; i < m.r && !augmented; ++i)
        if ((b >> i & 1) && !(a >> i & 1) && fam.count(a | subset(1) << i))
          augmented = true;
      if (!augmented) out.push_back({3, a, b});
    }
  return out;
}

int64_t matroid_rank(const matroid& m, subset a) {
  int64_t best = 0;
  for (subset x : m.independent)
    if ((x & a) == x) best = std::max<int64_t>(best, std::popcount(x));
  return best;
}

discrete_polymatroid to_polymatroid(const matroid& m) {
  if (!validate_matroid(m).empty())
    throw std::invalid_argument("to_polymatroid: not a matroid");
  discrete_polymatroid d;
  d.r = m.r;
  d.rho.resize(size_t(1) << m.r);
  for (subset a = 0; a < d.rho.size(); ++a) d.rho[a] = matroid_rank(m, a);
  return d;
}

matroid uniform_matroid(int k, int r) {
  matroid m;
  m.r = r;
  for (subset a = 0; a < (subset(1) << r); ++a)
    if (std::popcount(a) <= k) m.independent.push_back(a);
  return m;
}

}  // namespace fnc
