#include "fnc/network.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fnc {

namespace {

std::set<std::string> node_set(const network& net) {
  return {net.nodes.begin(), net.nodes.end()};
}

}  // namespace

std::vector<std::string> validate_network(const network& net) {
  std::vector<std::string> out;
  std::set<std::string> nodes = node_set(net);
  if (nodes.size() != net.nodes.size()) out.push_back("duplicate node id");

  std::set<std::string> edge_ids;
  for (const input_edge& e : net.inputs) {
    if (!edge_ids.insert(e.id).second) out.push_back("duplicate edge id " + e.id);
    if (!nodes.count(e.at)) out.push_back("input edge " + e.id + " enters unknown node " + e.at);
    if (e.k < 1) out.push_back("input edge " + e.id + " has dimension < 1");
  }
  std::set<int> msgs;
  for (const input_edge& e : net.inputs) msgs.insert(e.msg);
  for (size_t i = 1; i <= net.inputs.size(); ++i)
    if (!msgs.count(static_cast<int>(i))) {
      out.push_back("message indices are not 1.." + std::to_string(net.inputs.size()));
      break;
    }
  for (const inter_edge& e : net.edges) {
    if (!edge_ids.insert(e.id).second) out.push_back("duplicate edge id " + e.id);
    if (!nodes.count(e.from)) out.push_back("edge " + e.id + " leaves unknown node " + e.from);
    if (!nodes.count(e.to)) out.push_back("edge " + e.id + " enters unknown node " + e.to);
  }
  for (const auto& [node, ms] : net.demands) {
    if (!nodes.count(node)) out.push_back("demand at unknown node " + node);
    for (int m : ms)
      if (m < 1 || m > static_cast<int>(net.inputs.size()))
        out.push_back("demand at " + node + " for nonexistent message x" + std::to_string(m));
  }

  // cycle check over nodes reached by intermediate edges
  std::map<std::string, std::vector<std::string>> adj;
  for (const inter_edge& e : net.edges) adj[e.from].push_back(e.to);
  std::map<std::string, int> state;  // 0 new, 1 on stack, 2 done
  std::vector<std::string> stack;
  std::string cycle;
  auto dfs = [&](auto&& self, const std::string& v) -> bool {
    state[v] = 1;
    stack.push_back(v);
    for (const std::string& w : adj[v]) {
      if (state[w] == 1) {
        std::ostringstream os;
        for (size_t i = std::find(stack.begin(), stack.end(), w) - stack.begin();
             i < stack.size(); ++i)
          os << stack[i] << " -> ";
        os << w;
        cycle = os.str();
        return true;
      }
      if (state[w] == 0 && self(self, w)) return true;
    }
    stack.pop_back();
    state[v] = 2;
    return false;
  };
  for (const std::string& v : net.nodes)
    if (state[v] == 0 && dfs(dfs, v)) {
      out.push_back("cycle: " + cycle);
      break;
    }
  return out;
}

std::vector<std::string> in_edges(const network& net, const std::string& v) {
  if (!node_set(net).count(v)) throw std::invalid_argument("in_edges: unknown node " + v);
  std::vector<const input_edge*> ins;
  for (const input_edge& e : net.inputs)
    if (e.at == v) ins.push_back(&e);
  std::sort(ins.begin(), ins.end(),
            [](const input_edge* a, const input_edge* b) { return a->msg < b->msg; });
  std::vector<std::string> out;
  for (const input_edge* e : ins) out.push_back(e->id);
  std::vector<std::string> inter;
  for (const inter_edge& e : net.edges)
    if (e.to == v) inter.push_back(e.id);
  std::sort(inter.begin(), inter.end());
  out.insert(out.end(), inter.begin(), inter.end());
  return out;
}

std::vector<std::string> out_set(const network& net, const std::string& v) {
  if (!node_set(net).count(v)) throw std::invalid_argument("out_set: unknown node " + v);
  std::vector<std::string> out;
  for (const inter_edge& e : net.edges)
    if (e.from == v) out.push_back(e.id);
  std::sort(out.begin(), out.end());
  auto it = net.demands.find(v);
  if (it != net.demands.end()) {
    std::vector<int> ms = it->second;
    std::sort(ms.begin(), ms.end());
    for (int m : ms)
      for (const input_edge& e : net.inputs)
        if (e.msg == m) out.push_back(e.id);
  }
  return out;
}

std::vector<std::string> ancestral_order(const network& net) {
  std::vector<std::string> violations = validate_network(net);
  for (const std::string& v : violations)
    if (v.rfind("cycle:", 0) == 0)
      throw std::invalid_argument("ancestral_order: " + v);

  std::vector<std::string> order;
  std::set<std::string> emitted;
  std::vector<std::string> inputs;
  for (const input_edge& e : net.inputs) inputs.push_back(e.id);
  std::sort(inputs.begin(), inputs.end());
  for (const std::string& id : inputs) {
    order.push_back(id);
    emitted.insert(id);
  }
  // an intermediate edge is ready once every edge entering its origin is out
  std::vector<const inter_edge*> pending;
  for (const inter_edge& e : net.edges) pending.push_back(&e);
  std::sort(pending.begin(), pending.end(),
            [](const inter_edge* a, const inter_edge* b) { return a->id < b->id; });
  while (!pending.empty()) {
    bool progressed = false;
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      bool ready = true;
      for (const std::string& in : in_edges(net, (*it)->from))
        if (!emitted.count(in)) {
          ready = false;
          break;
        }
      if (ready) {
        order.push_back((*it)->id);
        emitted.insert((*it)->id);
        pending.erase(it);
        progressed = true;
        break;
      }
    }
    if (!progressed)
      throw std::invalid_argument("ancestral_order: cyclic edge dependencies");
  }
  return order;
}

std::string to_dot(const network& net) {
  std::ostringstream os;
  os << "digraph network {\n  rankdir=LR;\n";
  std::map<std::string, std::string> extra;
  for (const input_edge& e : net.inputs)
    extra[e.at] += "\\nx" + std::to_string(e.msg) + " (k=" + std::to_string(e.k) + ")";
  for (const std::string& v : net.nodes) {
    os << "  \"" << v << "\" [";
    bool source = extra.count(v) > 0;
    std::string label = v + (source ? extra[v] : "");
    auto it = net.demands.find(v);
    if (it != net.demands.end())
      for (int m : it->second) label += "\\nwants x" + std::to_string(m);
    os << "label=\"" << label << "\"";
    if (source) os << ", shape=box";
    os << "];\n";
  }
  std::vector<const inter_edge*> es;
  for (const inter_edge& e : net.edges) es.push_back(&e);
  std::sort(es.begin(), es.end(),
            [](const inter_edge* a, const inter_edge* b) { return a->id < b->id; });
  for (const inter_edge* e : es)
    os << "  \"" << e->from << "\" -> \"" << e->to << "\" [label=\"" << e->id
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace fnc
