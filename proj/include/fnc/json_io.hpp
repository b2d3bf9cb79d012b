#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "fnc/bridge.hpp"
#include "fnc/gf.hpp"
#include "fnc/matroid.hpp"
#include "fnc/network.hpp"
#include "fnc/polymatroid.hpp"
#include "fnc/solution.hpp"

namespace fnc {

// insertion-ordered JSON keeps output field order stable across runs
using json = nlohmann::ordered_json;

// matrices serialize as row arrays; entries are reduced mod the field order
json mat_to_json(const mat& m);
mat mat_from_json(const field& f, const json& j, const std::string& what);

// {"r": .., "rank": {"<subset bitmask>": value, ...}} with all 2^r entries
json to_json(const discrete_polymatroid& d);
discrete_polymatroid polymatroid_from_json(const json& j);

// {"q": .., "ambient": .., "generators": [matrix, ...]}
json to_json(const representation& rep);
representation representation_from_json(const json& j);

// {"r": .., "independent": [bitmask, ...]}
json to_json(const matroid& m);
matroid matroid_from_json(const json& j);

// {"nodes": [..], "inputs": [{"id","at","msg","k"}, ..],
//  "edges": [{"id","from","to"}, ..], "demands": [{"node","msgs"}, ..]}
json to_json(const network& net);
network network_from_json(const json& j);

// {"q": .., "k": [..], "n": .., "global": {"<edge id>": matrix, ...}}
json to_json(const fnc_solution& sol);
fnc_solution solution_from_json(const json& j);

// {"f": {"<edge id>": element, ...}}
json to_json(const edge_map& em);
edge_map edge_map_from_json(const json& j);

// throws std::runtime_error with a readable message on IO or parse failure
json load_json_file(const std::string& path);

// compact single line by default, two-space indent when pretty; always ends
// with a newline
void write_json(std::ostream& os, const json& j, bool pretty = false);

}  // namespace fnc
