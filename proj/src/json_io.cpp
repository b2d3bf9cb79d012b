#include "fnc/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace fnc {

namespace {

const json& member(const json& j, const char* key, const std::string& what) {
  if (!j.is_object()) throw std::runtime_error(what + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw std::runtime_error(what + ": missing field '" + key + "'");
  return *it;
}

int64_t as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw std::runtime_error(what + ": expected an integer");
  return j.get<int64_t>();
}

std::string as_str(const json& j, const std::string& what) {
  if (!j.is_string()) throw std::runtime_error(what + ": expected a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& what) {
  if (!j.is_array()) throw std::runtime_error(what + ": expected an array");
  return j;
}

}  // namespace

json mat_to_json(const mat& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

mat mat_from_json(const field& f, const json& j, const std::string& what) {
  const json& rows = as_array(j, what);
  if (rows.empty()) throw std::runtime_error(what + ": matrix needs at least one row");
  size_t nrows = rows.size();
  size_t ncols = as_array(rows.at(0), what + " row").size();
  mat m(f, nrows, ncols);
  for (size_t i = 0; i < nrows; ++i) {
    const json& row = as_array(rows.at(i), what + " row");
    if (row.size() != ncols) throw std::runtime_error(what + ": rows differ in length");
    for (size_t c = 0; c < ncols; ++c) {
      int64_t v = as_int(row.at(c), what + " entry");
      int64_t q = int64_t(f.modulus());
      m.set(i, c, uint32_t(((v % q) + q) % q));
    }
  }
  return m;
}

json to_json(const discrete_polymatroid& d) {
  json out;
  out["r"] = d.r;
  json rank = json::object();
  for (subset a = 0; a < (subset(1) << d.r); ++a)
    rank[std::to_string(a)] = d.rho[size_t(a)];
  out["rank"] = std::move(rank);
  return out;
}

discrete_polymatroid polymatroid_from_json(const json& j) {
  int r = int(as_int(member(j, "r", "polymatroid"), "polymatroid r"));
  if (r < 1 || r > 20) throw std::runtime_error("polymatroid: r must be between 1 and 20");
  const json& rank = member(j, "rank", "polymatroid");
  if (!rank.is_object()) throw std::runtime_error("polymatroid: rank must be an object");
  std::vector<int64_t> rho(size_t(1) << r, 0);
  for (subset a = 0; a < (subset(1) << r); ++a) {
    auto it = rank.find(std::to_string(a));
    if (it == rank.end())
      throw std::runtime_error("polymatroid: missing rank of subset " + std::to_string(a));
    rho[size_t(a)] = as_int(*it, "polymatroid rank value");
  }
  return polymatroid_of(r, std::move(rho));
}

json to_json(const representation& rep) {
  json out;
  out["q"] = rep.f.modulus();
  out["ambient"] = rep.ambient_dim;
  json gens = json::array();
  for (const auto& g : rep.generators) gens.push_back(mat_to_json(g));
  out["generators"] = std::move(gens);
  return out;
}

representation representation_from_json(const json& j) {
  int64_t q = as_int(member(j, "q", "representation"), "representation q");
  if (q < 2 || q > 0xffffffffll) throw std::runtime_error("representation: bad field order");
  field f{uint32_t(q)};
  int64_t ambient = as_int(member(j, "ambient", "representation"), "representation ambient");
  if (ambient < 1 || ambient > 64)
    throw std::runtime_error("representation: ambient dimension must be between 1 and 64");
  const json& gens = as_array(member(j, "generators", "representation"), "generators");
  if (gens.empty() || gens.size() > 64)
    throw std::runtime_error("representation: needs between 1 and 64 generators");
  representation rep{f, size_t(ambient), {}};
  for (size_t i = 0; i < gens.size(); ++i) {
    mat g = mat_from_json(f, gens.at(i), "generator " + std::to_string(i + 1));
    if (g.rows() != size_t(ambient))
      throw std::runtime_error("generator " + std::to_string(i + 1) +
                               ": row count differs from ambient dimension");
    rep.generators.push_back(std::move(g));
  }
  return rep;
}

json to_json(const matroid& m) {
  json out;
  out["r"] = m.r;
  out["independent"] = m.independent;
  return out;
}

matroid matroid_from_json(const json& j) {
  matroid m;
  m.r = int(as_int(member(j, "r", "matroid"), "matroid r"));
  if (m.r < 1 || m.r > 16) throw std::runtime_error("matroid: r must be between 1 and 16");
  for (const json& s : as_array(member(j, "independent", "matroid"), "independent sets")) {
    int64_t v = as_int(s, "independent set");
    if (v < 0 || v >= (int64_t(1) << m.r))
      throw std::runtime_error("matroid: independent set out of range");
    m.independent.push_back(subset(v));
  }
  return m;
}

json to_json(const network& net) {
  json out;
  out["nodes"] = net.nodes;
  json inputs = json::array();
  for (const auto& in : net.inputs)
    inputs.push_back({{"id", in.id}, {"at", in.at}, {"msg", in.msg}, {"k", in.k}});
  out["inputs"] = std::move(inputs);
  json edges = json::array();
  for (const auto& e : net.edges)
    edges.push_back({{"id", e.id}, {"from", e.from}, {"to", e.to}});
  out["edges"] = std::move(edges);
  json demands = json::array();
  for (const auto& [node, msgs] : net.demands)
    demands.push_back({{"node", node}, {"msgs", msgs}});
  out["demands"] = std::move(demands);
  return out;
}

network network_from_json(const json& j) {
  network net;
  for (const json& n : as_array(member(j, "nodes", "network"), "nodes"))
    net.nodes.push_back(as_str(n, "node name"));
  for (const json& in : as_array(member(j, "inputs", "network"), "inputs")) {
    input_edge e;
    e.id = as_str(member(in, "id", "input edge"), "input id");
    e.at = as_str(member(in, "at", "input edge"), "input at");
    e.msg = int(as_int(member(in, "msg", "input edge"), "input msg"));
    e.k = int(as_int(member(in, "k", "input edge"), "input k"));
    net.inputs.push_back(std::move(e));
  }
  for (const json& ed : as_array(member(j, "edges", "network"), "edges")) {
    inter_edge e;
    e.id = as_str(member(ed, "id", "edge"), "edge id");
    e.from = as_str(member(ed, "from", "edge"), "edge from");
    e.to = as_str(member(ed, "to", "edge"), "edge to");
    net.edges.push_back(std::move(e));
  }
  for (const json& d : as_array(member(j, "demands", "network"), "demands")) {
    std::string node = as_str(member(d, "node", "demand"), "demand node");
    if (net.demands.count(node)) throw std::runtime_error("duplicate demand node " + node);
    std::vector<int> msgs;
    for (const json& m : as_array(member(d, "msgs", "demand"), "demand msgs"))
      msgs.push_back(int(as_int(m, "demand msg")));
    net.demands.emplace(std::move(node), std::move(msgs));
  }
  return net;
}

json to_json(const fnc_solution& sol) {
  json out;
  out["q"] = sol.f.modulus();
  out["k"] = sol.k;
  out["n"] = sol.n;
  json global = json::object();
  for (const auto& [id, g] : sol.global) global[id] = mat_to_json(g);
  out["global"] = std::move(global);
  return out;
}

fnc_solution solution_from_json(const json& j) {
  int64_t q = as_int(member(j, "q", "solution"), "solution q");
  if (q < 2 || q > 0xffffffffll) throw std::runtime_error("solution: bad field order");
  field f{uint32_t(q)};
  std::vector<int> k;
  for (const json& ki : as_array(member(j, "k", "solution"), "solution k"))
    k.push_back(int(as_int(ki, "solution k entry")));
  int n = int(as_int(member(j, "n", "solution"), "solution n"));
  const json& global = member(j, "global", "solution");
  if (!global.is_object()) throw std::runtime_error("solution: global must be an object");
  std::map<std::string, mat> g;
  for (auto it = global.begin(); it != global.end(); ++it)
    g.emplace(it.key(), mat_from_json(f, it.value(), "global map of " + it.key()));
  return fnc_solution{f, std::move(k), n, std::move(g)};
}

json to_json(const edge_map& em) {
  json f = json::object();
  for (const auto& [id, el] : em.f) f[id] = el;
  return json{{"f", std::move(f)}};
}

edge_map edge_map_from_json(const json& j) {
  const json& f = member(j, "f", "edge map");
  if (!f.is_object()) throw std::runtime_error("edge map: f must be an object");
  edge_map em;
  for (auto it = f.begin(); it != f.end(); ++it)
    em.f[it.key()] = int(as_int(it.value(), "edge map value"));
  return em;
}

json load_json_file(const std::string& path) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::runtime_error("cannot open file: " + path);
    in = &file;
  }
  try {
    return json::parse(*in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error("parse error in " + (path == "-" ? "stdin" : path) + ": " +
                             e.what());
  }
}

void write_json(std::ostream& os, const json& j, bool pretty) {
  os << (pretty ? j.dump(2) : j.dump()) << "\n";
}

}  // namespace fnc
