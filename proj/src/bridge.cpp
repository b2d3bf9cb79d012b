#include "fnc/bridge.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace fnc {

namespace {

int map_of(const edge_map& f, const std::string& edge, int r) {
  auto it = f.f.find(edge);
  if (it == f.f.end())
    throw std::invalid_argument("edge map: no entry for edge " + edge);
  if (it->second < 1 || it->second > r)
    throw std::invalid_argument("edge map: element out of range for edge " + edge);
  return it->second;
}

subset image_of(const edge_map& f, const std::vector<std::string>& edges, int r) {
  subset s = 0;
  for (const std::string& e : edges) s |= subset(1) << (map_of(f, e, r) - 1);
  return s;
}

std::vector<std::string> all_edge_ids(const network& net) {
  std::vector<std::string> ids;
  for (const input_edge& e : net.inputs) ids.push_back(e.id);
  for (const inter_edge& e : net.edges) ids.push_back(e.id);
  return ids;
}

}  // namespace

std::vector<dpn_violation> check_dpn(const network& net, const rank_oracle& d,
                                     const edge_map& f, const std::vector<int>& k,
                                     int n) {
  if (k.size() != net.inputs.size())
    throw std::invalid_argument("check_dpn: dimension count != message count");
  for (const std::string& id : all_edge_ids(net)) map_of(f, id, d.r);  // totality

  std::vector<dpn_violation> out;
  // DN1: one-to-one on input edges
  std::map<int, std::string> seen;
  for (const input_edge& e : net.inputs) {
    int i = map_of(f, e.id, d.r);
    auto [it, fresh] = seen.emplace(i, e.id);
    if (!fresh)
      out.push_back({"DN1", "edges " + it->second + " and " + e.id +
                                " both map to element " + std::to_string(i)});
  }
  // DN2: sum of k_i eps_{f(e_i)} is a member
  intvec u(d.r, 0);
  for (const input_edge& e : net.inputs) u[map_of(f, e.id, d.r) - 1] += k[e.msg - 1];
  if (!contains(d, u)) out.push_back({"DN2", "source dimension vector is not a member"});
  // DN3: source ranks match dims; max rank of purely-intermediate elements is n
  subset src_img = 0;
  for (const input_edge& e : net.inputs) {
    int i = map_of(f, e.id, d.r);
    src_img |= subset(1) << (i - 1);
    int64_t rho_i = d.rho(subset(1) << (i - 1));
    if (rho_i != k[e.msg - 1])
      out.push_back({"DN3", "rho({" + std::to_string(i) + "}) = " +
                                std::to_string(rho_i) + " != k" +
                                std::to_string(e.msg) + " = " +
                                std::to_string(k[e.msg - 1])});
  }
  std::vector<std::string> inter_ids;
  for (const inter_edge& e : net.edges) inter_ids.push_back(e.id);
  subset inter_only = image_of(f, inter_ids, d.r) & ~src_img;
  if (inter_only != 0) {
    int64_t mx = 0;
    for (int i = 0; i < d.r; ++i)
      if (inter_only >> i & 1) mx = std::max(mx, d.rho(subset(1) << i));
    if (mx != n)
      out.push_back({"DN3", "max singleton rank outside the source image is " +
                                std::to_string(mx) + " != n = " + std::to_string(n)});
  }
  // DN4 at every node
  for (const std::string& v : net.nodes) {
    subset in_img = image_of(f, in_edges(net, v), d.r);
    subset both = in_img | image_of(f, out_set(net, v), d.r);
    int64_t ri = d.rho(in_img), rb = d.rho(both);
    if (ri != rb)
      out.push_back({"DN4", "node " + v + ": rho(f(In)) = " + std::to_string(ri) +
                                " but rho(f(In u Out)) = " + std::to_string(rb)});
  }
  return out;
}

bool is_discrete_polymatroidal(const network& net, const discrete_polymatroid& d,
                               const edge_map& f) {
  int k = static_cast<int>(rho_max(d));
  std::vector<int> dims(net.inputs.size(), k);
  return check_dpn(net, oracle_of(d), f, dims, k).empty();
}

bool is_matroidal(const network& net, const matroid& m, const edge_map& f) {
  std::vector<int> dims(net.inputs.size(), 1);
  return check_dpn(net, oracle_of(to_polymatroid(m)), f, dims, 1).empty();
}

namespace {

// realized edge dimension: max singleton rank over elements carried only by
// intermediate edges; falls back to the max over all intermediate edges, then 1
int realized_n(const network& net, const rank_oracle& d, const edge_map& f) {
  subset src = 0;
  for (const input_edge& e : net.inputs)
    src |= subset(1) << (map_of(f, e.id, d.r) - 1);
  int64_t mx = -1;
  for (const inter_edge& e : net.edges) {
    int i = map_of(f, e.id, d.r);
    if (!(src >> (i - 1) & 1))
      mx = std::max(mx, d.rho(subset(1) << (i - 1)));
  }
  if (mx >= 0) return static_cast<int>(std::max<int64_t>(mx, 1));
  for (const inter_edge& e : net.edges) {
    int i = map_of(f, e.id, d.r);
    mx = std::max(mx, d.rho(subset(1) << (i - 1)));
  }
  return mx >= 1 ? static_cast<int>(mx) : 1;
}

}  // namespace

fnc_solution extract_solution(const network& net, const representation& rep,
                              const edge_map& f) {
  std::vector<std::string> bad = validate_network(net);
  if (!bad.empty()) throw extraction_error("invalid network: " + bad.front());
  const int r = static_cast<int>(rep.generators.size());
  rank_oracle d = oracle_of(rep);

  std::vector<int> k(net.inputs.size());
  for (const input_edge& e : net.inputs)
    k[e.msg - 1] = static_cast<int>(d.rho(subset(1) << (map_of(f, e.id, r) - 1)));
  const int n = realized_n(net, d, f);

  std::vector<dpn_violation> viol = check_dpn(net, d, f, k, n);
  if (!viol.empty())
    throw extraction_error("network is not (k;n)-discrete polymatroidal: " +
                           viol.front().condition + " " + viol.front().witness);

  // restrict to the image of f
  std::set<int> img;
  for (const std::string& id : all_edge_ids(net)) img.insert(map_of(f, id, r));
  const int total = std::accumulate(k.begin(), k.end(), 0);
  std::vector<mat> img_gens;
  for (int i : img) img_gens.push_back(rep.generators[i - 1]);
  mat everything = hconcat(img_gens);
  if (static_cast<int>(rank(everything)) != total)
    throw extraction_error("representation inconsistent with the map: dim(sum V_i) = " +
                           std::to_string(rank(everything)) + " != sum k_i = " +
                           std::to_string(total));

  // compress the ambient space to sum(k) dimensions
  mat basis = column_basis(everything);
  std::map<int, mat> comp;  // element -> total x rank(V_i), full column rank
  for (int i : img) {
    auto x = solve_right(basis, rep.generators[i - 1]);
    if (!x) throw extraction_error("generator outside the joint column space");
    comp.emplace(i, column_basis(*x));
  }
  // normalize so the stacked source generators become the identity
  std::vector<mat> source_blocks;
  for (size_t j = 1; j <= net.inputs.size(); ++j) {
    for (const input_edge& e : net.inputs)
      if (e.msg == static_cast<int>(j)) source_blocks.push_back(comp.at(map_of(f, e.id, r)));
  }
  auto binv = invert(hconcat(source_blocks));
  if (!binv) throw extraction_error("stacked source generators are singular");
  for (auto& [i, g] : comp) g = binv->mul(g);

  fnc_solution sol{rep.f, k, n, {}};
  for (const input_edge& e : net.inputs) {
    mat sel = selector(rep.f, k, e.msg);
    if (comp.at(map_of(f, e.id, r)) != sel)
      throw extraction_error("normalized source generator is not a selector");
    sol.global.emplace(e.id, sel);
  }
  std::vector<std::string> fat;  // edges whose element rank exceeds n
  for (const inter_edge& e : net.edges) {
    const mat& g = comp.at(map_of(f, e.id, r));
    if (g.cols() <= size_t(n))
      sol.global.emplace(e.id, pad_cols(g, n));
    else
      fat.push_back(e.id);
  }

  // width compression: a fat edge cannot carry its whole subspace, so keep
  // only the columns its destination needs for its own out-edges and demands;
  // destinations are visited downstream-first so those needs are final
  if (!fat.empty()) {
    std::set<std::string> fat_set(fat.begin(), fat.end());
    std::vector<std::string> order = ancestral_order(net);
    std::map<std::string, const inter_edge*> by_id;
    for (const inter_edge& e : net.edges) by_id.emplace(e.id, &e);
    std::set<std::string> done;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (!fat_set.count(*it) || done.count(*it)) continue;
      const std::string& t = by_id.at(*it)->to;
      std::vector<std::string> thin_in, fat_in;
      for (const std::string& id : in_edges(net, t))
        (fat_set.count(id) ? fat_in : thin_in).push_back(id);
      // targets: final out-edge matrices, then demanded selectors
      std::vector<mat> targets;
      for (const inter_edge& e : net.edges)
        if (e.from == t) targets.push_back(sol.global.at(e.id));
      if (auto dm = net.demands.find(t); dm != net.demands.end()) {
        std::vector<int> ms = dm->second;
        std::sort(ms.begin(), ms.end());
        for (int m : ms) targets.push_back(selector(rep.f, k, m));
      }
      std::vector<mat> stack_parts;
      std::vector<size_t> fat_offsets;
      size_t off = 0;
      for (const std::string& id : thin_in) {
        stack_parts.push_back(sol.global.at(id));
        off += stack_parts.back().cols();
      }
      for (const std::string& id : fat_in) {
        fat_offsets.push_back(off);
        stack_parts.push_back(comp.at(map_of(f, id, r)));
        off += stack_parts.back().cols();
      }
      std::optional<mat> x;
      if (!targets.empty()) {
        x = solve_right(hconcat(stack_parts), hconcat(targets));
        if (!x)
          throw extraction_error("node " + t + ": downstream requirement not computable");
      }
      for (size_t fi = 0; fi < fat_in.size(); ++fi) {
        const std::string& id = fat_in[fi];
        const mat& full = comp.at(map_of(f, id, r));
        mat needed(rep.f, total, 0);
        if (x) {
          // contribution of this edge's block to the targets
          mat xb(rep.f, full.cols(), x->cols());
          for (size_t rr = 0; rr < full.cols(); ++rr)
            for (size_t cc = 0; cc < x->cols(); ++cc)
              xb.set(rr, cc, x->at(fat_offsets[fi] + rr, cc));
          needed = column_basis(full.mul(xb));
        }
        if (needed.cols() > size_t(n))
          throw extraction_error(
              "edge " + id + " needs " + std::to_string(needed.cols()) +
              " independent columns downstream but carries only " + std::to_string(n));
        sol.global.emplace(id, pad_cols(needed, n));
        done.insert(id);
      }
    }
  }

  std::vector<verify_failure> fails = verify_solution(net, sol);
  if (!fails.empty())
    throw extraction_error("extracted solution failed verification: " +
                           fails.front().kind + " at " + fails.front().where + ": " +
                           fails.front().detail);
  return sol;
}

edge_map identity_edge_map(const network& net) {
  edge_map f;
  int i = 1;
  for (const std::string& id : ancestral_order(net)) f.f[id] = i++;
  return f;
}

std::pair<representation, edge_map> polymatroid_from_solution(const network& net,
                                                              const fnc_solution& sol) {
  std::vector<verify_failure> fails = verify_solution(net, sol);
  if (!fails.empty())
    throw std::invalid_argument("polymatroid_from_solution: solution failed " +
                                fails.front().kind + " at " + fails.front().where);
  std::vector<std::string> order = ancestral_order(net);
  if (order.size() > 64)
    throw std::invalid_argument("polymatroid_from_solution: more than 64 edges");
  representation rep{sol.f, size_t(sol.total_k()), {}};
  for (const std::string& id : order) rep.generators.push_back(sol.global.at(id));
  return {rep, identity_edge_map(net)};
}

}  // namespace fnc
