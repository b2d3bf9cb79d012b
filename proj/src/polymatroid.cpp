#include "fnc/polymatroid.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <sstream>

namespace fnc {

int64_t rank_from_representation(const representation& rep, subset x) {
  std::vector<mat> picked;
  for (size_t i = 0; i < rep.generators.size(); ++i)
    if (x >> i & 1) picked.push_back(rep.generators[i]);
  if (picked.empty()) return 0;
  return static_cast<int64_t>(rank(hconcat(picked)));
}

discrete_polymatroid polymatroid_of(const representation& rep) {
  size_t r = rep.generators.size();
  if (r < 1 || r > 20)
    throw std::invalid_argument("polymatroid_of: ground-set size must be 1..20");
  for (const mat& g : rep.generators)
    if (g.rows() != rep.ambient_dim || g.f() != rep.f)
      throw std::invalid_argument("polymatroid_of: generator shape/field mismatch");
  discrete_polymatroid d;
  d.r = static_cast<int>(r);
  d.rho.resize(size_t(1) << r);
  for (subset x = 0; x < d.rho.size(); ++x)
    d.rho[x] = rank_from_representation(rep, x);
  return d;
}

discrete_polymatroid polymatroid_of(int r, std::vector<int64_t> rho) {
  if (r < 1 || r > 20)
    throw std::invalid_argument("polymatroid_of: ground-set size must be 1..20");
  if (rho.size() != size_t(1) << r)
    throw std::invalid_argument("polymatroid_of: rank table size must be 2^r");
  for (int64_t v : rho)
    if (v < 0) throw std::invalid_argument("polymatroid_of: ranks must be non-negative");
  return discrete_polymatroid{r, std::move(rho)};
}

rank_oracle oracle_of(const discrete_polymatroid& d) {
  auto table = std::make_shared<std::vector<int64_t>>(d.rho);
  return {d.r, [table](subset x) { return table->at(x); }};
}

rank_oracle oracle_of(const representation& rep) {
  auto memo = std::make_shared<std::map<subset, int64_t>>();
  auto r = std::make_shared<representation>(rep);
  return {static_cast<int>(rep.generators.size()), [memo, r](subset x) {
            auto it = memo->find(x);
            if (it != memo->end()) return it->second;
            int64_t v = rank_from_representation(*r, x);
            memo->emplace(x, v);
            return v;
          }};
}

std::string axiom_violation::to_string() const {
  std::ostringstream os;
  os << axiom << " violated at " << subset_to_string(a);
  if (axiom != "D3") os << ", " << subset_to_string(b);
  return os.str();
}

std::vector<axiom_violation> validate_axioms(const discrete_polymatroid& d) {
  std::vector<axiom_violation> out;
  const subset full = (subset(1) << d.r) - 1;
  if (d.rho.size() != (size_t(1) << d.r))
    throw std::invalid_argument("validate_axioms: rank table size mismatch");
  if (d.rho[0] != 0) out.push_back({"D3", 0, 0});
  for (subset a = 0; a <= full; ++a) {
    for (int i = 0; i < d.r; ++i) {
      if (a >> i & 1) continue;
      subset ai = a | subset(1) << i;
      if (d.rho[ai] < d.rho[a]) out.push_back({"D1", a, ai});
      for (int j = i + 1; j < d.r; ++j) {
        if (a >> j & 1) continue;
        subset aj = a | subset(1) << j;
        if (d.rho[ai] + d.rho[aj] < d.rho[ai | aj] + d.rho[a])
          out.push_back({"D2", ai, aj});
      }
    }
  }
  return out;
}

bool contains(const discrete_polymatroid& d, const intvec& u) {
  if (static_cast<int>(u.size()) != d.r)
    throw std::invalid_argument("contains: vector length != ground-set size");
  const subset full = (subset(1) << d.r) - 1;
  for (subset a = 1; a <= full; ++a)
    if (weight_on(u, a) > d.rho[a]) return false;
  return true;
}

bool contains(const rank_oracle& d, const intvec& u) {
  if (static_cast<int>(u.size()) != d.r)
    throw std::invalid_argument("contains: vector length != ground-set size");
  subset s = support(u);
  for (subset a = s;; a = (a - 1) & s) {
    if (a != 0 && weight_on(u, a) > d.rho(a)) return false;
    if (a == 0) break;
  }
  return true;
}

namespace {

std::vector<int64_t> singleton_bounds(const discrete_polymatroid& d) {
  std::vector<int64_t> b(d.r);
  for (int i = 0; i < d.r; ++i) b[i] = d.rho[subset(1) << i];
  return b;
}

// enumerate all vectors 0 <= u <= bound in lexicographic order
template <typename Fn>
void enumerate_box(const std::vector<int64_t>& bound, Fn&& fn) {
  int64_t count = 1;
  for (int64_t b : bound) {
    count *= b + 1;
    if (count > (int64_t(1) << 24))
      throw budget_error("enumeration budget exceeded: prod(rho({i})+1) > 2^24");
  }
  intvec u(bound.size(), 0);
  for (;;) {
    fn(u);
    int i = static_cast<int>(u.size()) - 1;
    while (i >= 0 && u[i] == bound[i]) u[i--] = 0;
    if (i < 0) break;
    ++u[i];
  }
}

}  // namespace

std::vector<intvec> members(const discrete_polymatroid& d) {
  std::vector<intvec> out;
  enumerate_box(singleton_bounds(d), [&](const intvec& u) {
    if (contains(d, u)) out.push_back(u);
  });
  return out;
}

exchange_report validate_exchange(const std::vector<intvec>& ms) {
  exchange_report rep;
  std::set<intvec> pool(ms.begin(), ms.end());
  rep.closed_under_subvectors = true;
  for (const intvec& u : ms)
    for (size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) continue;
      intvec v = u;
      --v[i];
      if (!pool.count(v)) {
        rep.closed_under_subvectors = false;
        rep.closure_missing.emplace_back(u, v);
      }
    }
  rep.exchange_holds = true;
  for (const intvec& u : ms)
    for (const intvec& v : ms) {
      if (weight(u) >= weight(v)) continue;
      intvec uv = join(u, v);
      bool found = false;
      for (const intvec& w : ms)
        if (lt(u, w) && leq(w, uv)) {
          found = true;
          break;
        }
      if (!found) {
        rep.exchange_holds = false;
        rep.exchange_failures.emplace_back(u, v);
      }
    }
  return rep;
}

std::vector<intvec> bases(const discrete_polymatroid& d) {
  std::vector<intvec> ms = members(d);
  std::set<intvec> pool(ms.begin(), ms.end());
  std::vector<intvec> out;
  for (const intvec& u : ms) {
    bool maximal = true;
    for (int i = 0; i < d.r && maximal; ++i) {
      intvec v = u;
      ++v[i];
      if (pool.count(v)) maximal = false;
    }
    if (maximal) out.push_back(u);
  }
  return out;  // members() is already lex sorted
}

int64_t rank_of(const discrete_polymatroid& d) {
  std::vector<intvec> bs = bases(d);
  int64_t w = weight(bs.front());
  for (const intvec& b : bs)
    if (weight(b) != w)
      throw std::logic_error("rank_of: bases of unequal weight");
  return w;
}

int64_t rho_max(const discrete_polymatroid& d) {
  int64_t m = 0;
  for (int64_t b : singleton_bounds(d)) m = std::max(m, b);
  return m;
}

std::vector<intvec> excluded_vectors(const discrete_polymatroid& d) {
  std::vector<intvec> out;
  enumerate_box(singleton_bounds(d), [&](const intvec& u) {
    if (!contains(d, u)) out.push_back(u);
  });
  return out;
}

std::vector<intvec> excluded_at(const discrete_polymatroid& d, int i) {
  if (i < 1 || i > d.r) throw std::out_of_range("excluded_at: element out of range");
  std::vector<intvec> out;
  for (intvec& u : excluded_vectors(d))
    if (u[i - 1] == 1) out.push_back(std::move(u));
  return out;
}

std::vector<intvec> c_set(const discrete_polymatroid& d, int i) {
  std::vector<intvec> di = excluded_at(d, i);
  std::vector<intvec> out;
  for (const intvec& u : di) {
    intvec u_minus = u;
    --u_minus[i - 1];
    if (!contains(d, u_minus)) continue;  // condition 1
    bool minimal = true;
    subset su = support(u);
    for (const intvec& v : di) {
      if (v == u) continue;
      if (lt(v, u)) {  // condition 2
        minimal = false;
        break;
      }
      subset sv = support(v);
      if (sv != su && (sv & su) == sv) {  // condition 3: strict support inclusion
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(u);
  }
  return out;
}

int64_t phi(const discrete_polymatroid& d, const intvec& b) {
  if (static_cast<int>(b.size()) != d.r)
    throw std::invalid_argument("phi: vector size does not match ground set");
  if (!contains(d, b) || weight(b) != d.rho.back())
    throw std::invalid_argument("phi: not a basis vector");
  subset s = support(b);
  const subset full = (subset(1) << d.r) - 1;
  if (s == full)
    throw std::invalid_argument("phi: basis support covers the whole ground set");
  int64_t m = 0;
  for (int i = 0; i < d.r; ++i)
    if (!(s >> i & 1)) m = std::max(m, d.rho[subset(1) << i]);
  return m;
}

}  // namespace fnc
