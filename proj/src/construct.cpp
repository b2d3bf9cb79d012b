#include "fnc/construct.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fnc {

std::vector<intvec> eligible_bases(const discrete_polymatroid& d) {
  std::vector<intvec> out;
  for (const intvec& b : bases(d)) {
    if (weight(b) == 0) continue;
    bool ok = true;
    for (int i = 0; i < d.r && ok; ++i)
      if (b[i] > 0 && d.rho[subset(1) << i] != b[i]) ok = false;
    if (ok) out.push_back(b);
  }
  return out;
}

namespace {

std::string node_name(int i) { return std::to_string(i); }
std::string relay_name(int i) { return std::to_string(i) + "'"; }
std::string edge_name(const std::string& from, const std::string& to) {
  return from + ">" + to;
}

struct builder {
  const discrete_polymatroid& d;
  built_network out;

  void add_node(const std::string& v) { out.net.nodes.push_back(v); }

  void add_edge(const std::string& from, const std::string& to, int element) {
    inter_edge e{edge_name(from, to), from, to};
    out.f.f[e.id] = element;
    out.net.edges.push_back(e);
  }

  // step 1: one source node per support element, carrying its own message
  void sources(const intvec& b) {
    int msg = 0;
    for (int i = 1; i <= d.r; ++i) {
      if (b[i - 1] == 0) continue;
      ++msg;
      add_node(node_name(i));
      input_edge e{"e" + std::to_string(i), node_name(i), msg, b[i - 1]};
      out.f.f[e.id] = i;
      out.net.inputs.push_back(e);
    }
    out.state.sources = out.state.covered = support(b);
  }

  // step 2 body: add relay i' fed by the covered support of u - e_i, plus the
  // carrier node i behind it
  void relay(int i, const intvec& u) {
    intvec rest = u;
    --rest[i - 1];
    add_node(relay_name(i));
    for (int j : subset_elements(support(rest)))
      add_edge(node_name(j), relay_name(i), j);
    add_node(node_name(i));
    add_edge(relay_name(i), node_name(i), i);
    out.state.covered |= subset(1) << (i - 1);
    out.state.log.push_back({2, i, u, relay_name(i)});
  }

  // step 3 body: add one demand node for message x_i fed by support(u - e_i)
  void demand(int i, const intvec& u, int seq) {
    intvec rest = u;
    --rest[i - 1];
    std::string h = "d" + std::to_string(i) + "_" + std::to_string(seq);
    add_node(h);
    for (int j : subset_elements(support(rest)))
      add_edge(node_name(j), h, j);
    int msg = 0;
    for (const input_edge& e : out.net.inputs)
      if (out.f.f.at(e.id) == i) msg = e.msg;
    out.net.demands[h].push_back(msg);
    out.state.log.push_back({3, i, u, h});
  }
};

}  // namespace

built_network build_network(const discrete_polymatroid& d, const intvec& b,
                            demand_policy policy,
                            const std::vector<demand_choice>& choices) {
  std::vector<intvec> eb = eligible_bases(d);
  if (std::find(eb.begin(), eb.end(), b) == eb.end())
    throw std::invalid_argument("build_network: basis is not eligible");

  builder bld{d, {}};
  bld.sources(b);

  // step 2 fixpoint: rescan from the lowest uncovered element after each add
  std::vector<std::vector<intvec>> csets(d.r + 1);
  for (int i = 1; i <= d.r; ++i) csets[i] = c_set(d, i);
  for (;;) {
    bool added = false;
    for (int i = 1; i <= d.r && !added; ++i) {
      if (bld.out.state.covered >> (i - 1) & 1) continue;
      for (const intvec& u : csets[i]) {  // c_set output is lex sorted
        intvec rest = u;
        --rest[i - 1];
        if ((support(rest) | bld.out.state.covered) == bld.out.state.covered) {
          bld.relay(i, u);
          added = true;
          break;
        }
      }
    }
    if (!added) break;
  }

  // step 3
  if (policy == demand_policy::exhaustive) {
    for (int i = 1; i <= d.r; ++i) {
      if (!(bld.out.state.sources >> (i - 1) & 1)) continue;
      int seq = 0;
      for (const intvec& u : csets[i])
        if ((support(u) | bld.out.state.covered) == bld.out.state.covered)
          bld.demand(i, u, ++seq);
    }
  } else {
    std::map<int, int> seq;
    for (const demand_choice& c : choices) {
      int i = c.element;
      if (i < 1 || i > d.r || !(bld.out.state.sources >> (i - 1) & 1))
        throw std::invalid_argument("build_network: demand for a non-source element");
      if (std::find(csets[i].begin(), csets[i].end(), c.u) == csets[i].end())
        throw std::invalid_argument("build_network: chosen vector is not a candidate");
      if ((support(c.u) | bld.out.state.covered) != bld.out.state.covered)
        throw std::invalid_argument("build_network: chosen vector is not covered");
      bld.demand(i, c.u, ++seq[i]);
    }
  }

  std::vector<std::string> bad = validate_network(bld.out.net);
  if (!bad.empty())
    throw std::logic_error("build_network: invalid output: " + bad.front());
  return bld.out;
}

built_network replay(const discrete_polymatroid& d, const intvec& b,
                     const std::vector<construction_step>& log) {
  builder bld{d, {}};
  bld.sources(b);
  std::map<int, int> seq;
  for (const construction_step& s : log) {
    if (s.step == 2)
      bld.relay(s.element, s.chosen);
    else
      bld.demand(s.element, s.chosen, ++seq[s.element]);
  }
  return bld.out;
}

construct_result construct_and_solve(const representation& rep, const intvec& b,
                                     demand_policy policy,
                                     const std::vector<demand_choice>& choices) {
  discrete_polymatroid d = polymatroid_of(rep);
  built_network built = build_network(d, b, policy, choices);
  fnc_solution sol = extract_solution(built.net, rep, built.f);
  rate_report rr = rates(built.net, sol);
  return {std::move(built), std::move(sol), rr};
}

}  // namespace fnc
