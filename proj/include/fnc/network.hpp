#pragma once

#include <map>
#include <string>
#include <vector>

namespace fnc {

// message edge: no origin node, enters `at`, carries x_msg of dimension k
struct input_edge {
  std::string id;
  std::string at;
  int msg = 0;
  int k = 1;
};

// edges are directed origin -> destination
struct inter_edge {
  std::string id;
  std::string from;
  std::string to;
};

struct network {
  std::vector<std::string> nodes;
  std::vector<input_edge> inputs;
  std::vector<inter_edge> edges;
  std::map<std::string, std::vector<int>> demands;  // node -> message indices

  size_t message_count() const { return inputs.size(); }
};

// empty result means valid; cycles are reported with a node witness
std::vector<std::string> validate_network(const network& net);

// incident edges entering v: input edges ascending by message index, then
// intermediate edges in id order; this fixed order is the stacking order used
// everywhere a node's incoming symbols are concatenated
std::vector<std::string> in_edges(const network& net, const std::string& v);

// intermediate edges leaving v in id order, then the input edges of the
// messages demanded at v ascending by message index
std::vector<std::string> out_set(const network& net, const std::string& v);

// every edge after all edges entering its origin node; input edges first;
// ties broken by edge-id order
std::vector<std::string> ancestral_order(const network& net);

std::string to_dot(const network& net);

}  // namespace fnc
