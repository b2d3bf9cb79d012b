#include "fnc/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

#include "fnc/gf.hpp"

namespace fnc {

namespace {

uint64_t saturating_pow(uint64_t base, uint64_t exp) {
  const uint64_t cap = uint64_t(1) << 62;
  uint64_t r = 1;
  for (uint64_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap;
    r *= base;
  }
  return r;
}

// z is read as a base-q integer whose most significant digit lands at
// entry (0, 0), scanning row-major
mat payload_matrix(const field& f, uint64_t z, size_t rows, size_t cols) {
  mat p(f, rows, cols);
  for (size_t idx = rows * cols; idx-- > 0;) {
    p.set(idx / cols, idx % cols, uint32_t(z % f.modulus()));
    z /= f.modulus();
  }
  return p;
}

struct demand_check {
  std::string node;
  std::vector<int> msgs;
};

struct search_plan {
  const network* net = nullptr;
  field f{2};
  std::vector<int> k;
  int n = 0;
  std::vector<const inter_edge*> inter;                  // ancestral order
  std::map<std::string, std::vector<std::string>> ins;    // node -> in-edge ids
  std::vector<std::vector<demand_check>> due;             // per inter position
  std::vector<demand_check> due_upfront;                  // inputs-only demands
  std::map<std::string, mat> fixed;                       // input edge globals
};

search_plan make_plan(const network& net, const std::vector<int>& k, int n, uint32_t q) {
  auto errors = validate_network(net);
  if (!errors.empty()) throw std::invalid_argument("invalid network: " + errors.front());
  if (k.size() != size_t(net.message_count()))
    throw std::invalid_argument("dimension vector length does not match message count");
  for (int ki : k)
    if (ki < 1) throw std::invalid_argument("message dimensions must be positive");
  if (n < 1) throw std::invalid_argument("edge dimension must be positive");

  search_plan plan;
  plan.net = &net;
  plan.f = field(q);
  plan.k = k;
  plan.n = n;

  std::map<std::string, size_t> pos;  // intermediate edge id -> position
  for (const auto& id : ancestral_order(net)) {
    for (const auto& e : net.edges) {
      if (e.id == id) {
        pos[id] = plan.inter.size();
        plan.inter.push_back(&e);
      }
    }
  }
  plan.due.resize(plan.inter.size());

  for (const auto& node : net.nodes) plan.ins[node] = in_edges(net, node);

  for (const auto& in : net.inputs) plan.fixed.emplace(in.id, selector(plan.f, k, in.msg));

  for (const auto& [node, msgs] : net.demands) {
    demand_check chk{node, msgs};
    size_t last = 0;
    bool any_inter = false;
    for (const auto& id : plan.ins.at(node)) {
      auto it = pos.find(id);
      if (it != pos.end()) {
        any_inter = true;
        last = std::max(last, it->second);
      }
    }
    if (any_inter)
      plan.due[last].push_back(chk);
    else
      plan.due_upfront.push_back(chk);
  }
  return plan;
}

// one enumeration worker; jobs > 1 splits the first branching edge's payload
// range into contiguous chunks, one worker each, merged in chunk order so the
// result is identical to a single sequential pass
struct worker {
  const search_plan& plan;
  uint64_t limit;                      // global budget, used as local stop
  std::map<std::string, mat> g;        // determined edge globals
  uint64_t visited = 0;
  bool complete = true;                // chunk fully enumerated
  std::optional<uint64_t> found_at;    // visit count when a solution appeared
  std::map<std::string, mat> found_g;

  worker(const search_plan& p, std::map<std::string, mat> base, uint64_t budget)
      : plan(p), limit(budget), g(std::move(base)) {}

  mat stack_of(const std::string& node) const {
    std::vector<mat> parts;
    for (const auto& id : plan.ins.at(node)) parts.push_back(g.at(id));
    if (parts.empty()) {
      int total = std::accumulate(plan.k.begin(), plan.k.end(), 0);
      return mat(plan.f, size_t(total), 0);
    }
    return hconcat(parts);
  }

  bool demands_ok(const std::vector<demand_check>& checks) const {
    for (const auto& chk : checks) {
      mat st = stack_of(chk.node);
      for (int m : chk.msgs)
        if (!solve_right(st, selector(plan.f, plan.k, m))) return false;
    }
    return true;
  }

  // returns true when a solution was found (recorded in found_g)
  bool dfs(size_t p) {
    if (p == plan.inter.size()) {
      found_at = visited;
      found_g = g;
      return true;
    }
    const inter_edge& e = *plan.inter[p];
    mat basis = column_basis(stack_of(e.from));
    size_t r_v = basis.cols();
    if (r_v <= size_t(plan.n)) {
      // carrying the whole available column space dominates every other
      // choice, so this edge never branches
      g.emplace(e.id, pad_cols(basis, size_t(plan.n)));
      bool hit = demands_ok(plan.due[p]) && dfs(p + 1);
      if (!hit) g.erase(e.id);
      return hit;
    }
    uint64_t count = saturating_pow(plan.f.modulus(), r_v * uint64_t(plan.n));
    for (uint64_t z = 0; z < count; ++z) {
      if (visited == limit) {
        complete = false;
        return false;
      }
      ++visited;
      g.emplace(e.id, basis.mul(payload_matrix(plan.f, z, r_v, size_t(plan.n))));
      if (demands_ok(plan.due[p]) && dfs(p + 1)) return true;
      g.erase(e.id);
      if (!complete) return false;
    }
    return false;
  }

  // enumerate a z-subrange of the branching edge at position p, then recurse
  bool run_chunk(size_t p, const mat& basis, uint64_t lo, uint64_t hi) {
    const inter_edge& e = *plan.inter[p];
    for (uint64_t z = lo; z < hi; ++z) {
      if (visited == limit) {
        complete = false;
        return false;
      }
      ++visited;
      g.emplace(e.id, basis.mul(payload_matrix(plan.f, z, basis.cols(), size_t(plan.n))));
      if (demands_ok(plan.due[p]) && dfs(p + 1)) return true;
      g.erase(e.id);
      if (!complete) return false;
    }
    return true;
  }
};

fnc_solution assemble(const search_plan& plan, const std::map<std::string, mat>& g) {
  fnc_solution sol{plan.f, plan.k, plan.n, g};
  auto failures = verify_solution(*plan.net, sol);
  if (!failures.empty())
    throw std::logic_error("search produced a non-verifying solution: " +
                           failures.front().kind + " at " + failures.front().where);
  return sol;
}

}  // namespace

search_outcome search_linear(const network& net, const std::vector<int>& k, int n,
                             uint32_t q, uint64_t budget, int jobs) {
  search_plan plan = make_plan(net, k, n, q);
  search_outcome out;
  out.budget = budget;

  // demands fed by input edges alone are independent of every choice
  {
    worker probe(plan, plan.fixed, budget);
    if (!probe.demands_ok(plan.due_upfront)) {
      out.verdict = search_verdict::exhausted_none;
      return out;
    }
  }

  // run the forced prefix once: edges whose origin stack fits in n columns
  std::map<std::string, mat> base = plan.fixed;
  size_t p0 = 0;
  std::optional<mat> branch_basis;
  {
    worker prefix(plan, base, budget);
    while (p0 < plan.inter.size()) {
      const inter_edge& e = *plan.inter[p0];
      mat basis = column_basis(prefix.stack_of(e.from));
      if (basis.cols() > size_t(n)) {
        branch_basis = basis;
        break;
      }
      prefix.g.emplace(e.id, pad_cols(basis, size_t(n)));
      if (!prefix.demands_ok(plan.due[p0])) {
        out.verdict = search_verdict::exhausted_none;
        return out;
      }
      ++p0;
    }
    base = prefix.g;
  }

  if (!branch_basis) {  // no branching edge anywhere: the forced assignment decides
    out.verdict = search_verdict::found;
    out.solution = assemble(plan, base);
    return out;
  }

  uint64_t range = saturating_pow(q, branch_basis->cols() * uint64_t(n));
  uint64_t chunks = std::max<uint64_t>(1, std::min<uint64_t>(uint64_t(std::max(jobs, 1)), range));

  std::vector<worker> workers;
  workers.reserve(chunks);
  for (uint64_t w = 0; w < chunks; ++w) workers.emplace_back(plan, base, budget);

  auto run = [&](uint64_t w) {
    uint64_t lo = range / chunks * w + std::min(w, range % chunks);
    uint64_t hi = range / chunks * (w + 1) + std::min(w + 1, range % chunks);
    workers[size_t(w)].run_chunk(p0, *branch_basis, lo, hi);
  };

  if (chunks == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (uint64_t w = 0; w < chunks; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  // merge in chunk order, reproducing the verdict of a sequential pass
  uint64_t cum = 0;
  for (const auto& w : workers) {
    if (w.found_at) {
      if (cum + *w.found_at <= budget) {
        out.verdict = search_verdict::found;
        out.candidates = cum + *w.found_at;
        out.solution = assemble(plan, w.found_g);
      } else {
        out.verdict = search_verdict::budget_exceeded;
        out.candidates = budget;
      }
      return out;
    }
    if (!w.complete) {
      out.verdict = search_verdict::budget_exceeded;
      out.candidates = budget;
      return out;
    }
    cum += w.visited;
  }
  if (cum > budget) {
    out.verdict = search_verdict::budget_exceeded;
    out.candidates = budget;
  } else {
    out.verdict = search_verdict::exhausted_none;
    out.candidates = cum;
  }
  return out;
}

symmetric_rate_result max_symmetric_rate(const network& net, uint32_t q, int k_max,
                                         int n_max, uint64_t budget, int jobs) {
  if (k_max < 1 || n_max < 1) throw std::invalid_argument("rate bounds must be positive");
  std::vector<std::pair<int, int>> ratios;
  for (int k = 1; k <= k_max; ++k)
    for (int n = 1; n <= n_max; ++n)
      if (std::gcd(k, n) == 1) ratios.emplace_back(k, n);
  std::sort(ratios.begin(), ratios.end(), [](auto a, auto b) {
    return fraction{b.first, b.second} < fraction{a.first, a.second};
  });

  symmetric_rate_result res;
  for (auto [k, n] : ratios) {
    std::vector<int> dims(size_t(net.message_count()), k);
    auto out = search_linear(net, dims, n, q, budget, jobs);
    res.table.push_back({k, n, out.verdict, out.candidates});
    if (out.verdict == search_verdict::found && !res.best) {
      res.best = fraction{k, n};
      res.witness = std::move(out.solution);
    }
  }
  return res;
}

average_rate_result best_average_rate(const network& net, uint32_t q, int dim_max,
                                      int n_max, uint64_t budget, int jobs) {
  if (dim_max < 1 || n_max < 1) throw std::invalid_argument("rate bounds must be positive");
  int m = net.message_count();
  if (m == 0) throw std::invalid_argument("network has no messages");

  struct cell {
    std::vector<int> k;
    int n;
    fraction avg;
  };
  std::vector<cell> cells;
  std::vector<int> dims(size_t(m), 1);
  bool more = true;
  while (more) {
    int sum = std::accumulate(dims.begin(), dims.end(), 0);
    for (int n = 1; n <= n_max; ++n) cells.push_back({dims, n, fraction{sum, m * n}});
    more = false;
    for (size_t i = dims.size(); i-- > 0;) {
      if (dims[i] < dim_max) {
        ++dims[i];
        std::fill(dims.begin() + ptrdiff_t(i) + 1, dims.end(), 1);
        more = true;
        break;
      }
    }
  }
  std::sort(cells.begin(), cells.end(), [](const cell& a, const cell& b) {
    if (!(a.avg == b.avg)) return b.avg < a.avg;
    if (a.n != b.n) return a.n < b.n;
    return a.k < b.k;
  });

  average_rate_result res;
  for (const auto& c : cells) {
    auto out = search_linear(net, c.k, c.n, q, budget, jobs);
    average_cell rec{c.k, c.n, c.avg, out.verdict, out.candidates};
    res.tried.push_back(rec);
    if (out.verdict == search_verdict::found) {
      res.best = rec;
      res.witness = std::move(out.solution);
      break;
    }
  }
  return res;
}

}  // namespace fnc
