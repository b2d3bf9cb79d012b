#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fnc/construct.hpp"
#include "fnc/json_io.hpp"
#include "fnc/search.hpp"

namespace {

using namespace fnc;

constexpr int exit_ok = 0;         // success / property holds
constexpr int exit_fails = 1;      // property fails, report emitted
constexpr int exit_input = 2;      // malformed input
constexpr int exit_exhausted = 3;  // search exhausted the space, nothing found
constexpr int exit_budget = 4;     // search stopped by budget

json vec_json(const intvec& u) {
  json a = json::array();
  for (int v : u) a.push_back(v);
  return a;
}

json vecs_json(const std::vector<intvec>& vs) {
  json a = json::array();
  for (const auto& u : vs) a.push_back(vec_json(u));
  return a;
}

// comma-separated integers; an empty string is an empty list
std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::runtime_error("bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

subset parse_subset(const std::string& s, int r) {
  subset a = 0;
  for (int e : parse_int_list(s)) {
    if (e < 1 || e > r)
      throw std::runtime_error("element " + std::to_string(e) + " outside 1.." +
                               std::to_string(r));
    if (a >> (e - 1) & 1) throw std::runtime_error("duplicate element " + std::to_string(e));
    a |= subset(1) << (e - 1);
  }
  return a;
}

void emit(const json& j, bool pretty, const std::string& out_path = "") {
  if (out_path.empty()) {
    write_json(std::cout, j, pretty);
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot write " + out_path);
  write_json(f, j, pretty);
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot write " + out_path);
  f << text;
}

// shared --poly/--rep input: exactly one source for a polymatroid
struct dpm_input {
  std::string poly_path, rep_path;
  std::optional<representation> rep;

  void attach(CLI::App* cmd) {
    cmd->add_option("--poly", poly_path, "polymatroid JSON (explicit rank table)");
    cmd->add_option("--rep", rep_path, "representation JSON (rank table computed)");
  }

  discrete_polymatroid load() {
    if (poly_path.empty() == rep_path.empty())
      throw std::runtime_error("provide exactly one of --poly or --rep");
    if (!poly_path.empty()) return polymatroid_from_json(load_json_file(poly_path));
    rep = representation_from_json(load_json_file(rep_path));
    return polymatroid_of(*rep);
  }
};

std::string verdict_str(search_verdict v) {
  switch (v) {
    case search_verdict::found: return "found";
    case search_verdict::exhausted_none: return "exhausted-none";
    default: return "budget-exceeded";
  }
}

int verdict_exit(search_verdict v) {
  switch (v) {
    case search_verdict::found: return exit_ok;
    case search_verdict::exhausted_none: return exit_exhausted;
    default: return exit_budget;
  }
}

std::vector<demand_choice> load_choices(const std::string& path) {
  json j = load_json_file(path);
  if (j.is_object() && j.contains("choices")) j = j.at("choices");
  if (!j.is_array()) throw std::runtime_error("choices: expected an array");
  std::vector<demand_choice> out;
  for (const json& c : j) {
    demand_choice dc;
    dc.element = c.at("element").get<int>();
    for (const json& v : c.at("u")) dc.u.push_back(v.get<int>());
    out.push_back(std::move(dc));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete polymatroids over finite fields and linear fractional network coding"};
  app.require_subcommand(1);
  app.fallthrough();  // allow global flags after subcommand names
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");
  int rc = exit_ok;

  // ---------------------------------------------------------------- dpm
  auto* dpm = app.add_subcommand("dpm", "discrete polymatroid queries");
  dpm->require_subcommand(1);

  {
    auto* cmd = dpm->add_subcommand("rank", "rank of a subset, or the full rank table");
    auto in = std::make_shared<dpm_input>();
    auto sub = std::make_shared<std::string>();
    in->attach(cmd);
    auto* opt = cmd->add_option("--subset", *sub, "elements like \"1,3\"; empty for the empty set");
    cmd->callback([&, in, sub, opt] {
      discrete_polymatroid d = in->load();
      if (opt->count())
        emit(json(d.rho[size_t(parse_subset(*sub, d.r))]), pretty);
      else
        emit(to_json(d), pretty);
    });
  }
  {
    auto* cmd = dpm->add_subcommand("bases", "maximal members in lexicographic order");
    auto in = std::make_shared<dpm_input>();
    in->attach(cmd);
    cmd->callback([&, in] {
      discrete_polymatroid d = in->load();
      json out;
      out["rank"] = rank_of(d);
      out["bases"] = vecs_json(bases(d));
      emit(out, pretty);
    });
  }
  {
    auto* cmd = dpm->add_subcommand("csets", "minimal excluded vectors driving construction");
    auto in = std::make_shared<dpm_input>();
    auto index = std::make_shared<int>(0);
    auto excluded = std::make_shared<bool>(false);
    in->attach(cmd);
    auto* opt = cmd->add_option("--index", *index, "ground element i");
    cmd->add_flag("--excluded", *excluded, "report the full excluded sets with i-th entry 1");
    cmd->callback([&, in, index, excluded, opt] {
      discrete_polymatroid d = in->load();
      auto one = [&](int i) {
        if (i < 1 || i > d.r) throw std::runtime_error("index outside 1.." + std::to_string(d.r));
        json o;
        o["i"] = i;
        o[*excluded ? "d" : "c"] = vecs_json(*excluded ? excluded_at(d, i) : c_set(d, i));
        return o;
      };
      if (opt->count()) {
        emit(one(*index), pretty);
      } else {
        json all = json::array();
        for (int i = 1; i <= d.r; ++i) all.push_back(one(i));
        emit(json{{*excluded ? "dsets" : "csets", std::move(all)}}, pretty);
      }
    });
  }
  {
    auto* cmd = dpm->add_subcommand("axioms", "check the rank axioms");
    auto in = std::make_shared<dpm_input>();
    in->attach(cmd);
    cmd->callback([&, in] {
      discrete_polymatroid d = in->load();
      auto violations = validate_axioms(d);
      json out;
      out["valid"] = violations.empty();
      if (!violations.empty()) {
        json vs = json::array();
        for (const auto& v : violations) vs.push_back(v.to_string());
        out["violations"] = std::move(vs);
        rc = exit_fails;
      }
      emit(out, pretty);
    });
  }

  // ------------------------------------------------------------- matroid
  auto* mt = app.add_subcommand("matroid", "matroid checks and conversion");
  mt->require_subcommand(1);

  auto mt_path = std::make_shared<std::string>();
  {
    auto* cmd = mt->add_subcommand("check", "validate the independence axioms");
    cmd->add_option("--matroid", *mt_path, "matroid JSON")->required();
    cmd->callback([&, mt_path] {
      matroid m = matroid_from_json(load_json_file(*mt_path));
      auto violations = validate_matroid(m);
      json out;
      out["valid"] = violations.empty();
      if (!violations.empty()) {
        json vs = json::array();
        for (const auto& v : violations) vs.push_back(v.to_string());
        out["violations"] = std::move(vs);
        rc = exit_fails;
      }
      emit(out, pretty);
    });
  }
  {
    auto* cmd = mt->add_subcommand("convert", "rank table of the induced polymatroid");
    auto out_path = std::make_shared<std::string>();
    cmd->add_option("--matroid", *mt_path, "matroid JSON")->required();
    cmd->add_option("--out", *out_path, "output file (default stdout)");
    cmd->callback([&, mt_path, out_path] {
      matroid m = matroid_from_json(load_json_file(*mt_path));
      auto violations = validate_matroid(m);
      if (!violations.empty()) {
        json vs = json::array();
        for (const auto& v : violations) vs.push_back(v.to_string());
        emit(json{{"valid", false}, {"violations", std::move(vs)}}, pretty);
        rc = exit_fails;
        return;
      }
      emit(to_json(to_polymatroid(m)), pretty, *out_path);
    });
  }

  // ----------------------------------------------------------------- net
  auto* net_cmd = app.add_subcommand("net", "network construction and inspection");
  net_cmd->require_subcommand(1);

  {
    auto* cmd = net_cmd->add_subcommand("construct", "build a network from a polymatroid basis");
    struct opts {
      dpm_input in;
      std::string basis, policy = "exhaustive", choices, out, dot, map;
    };
    auto o = std::make_shared<opts>();
    o->in.attach(cmd);
    cmd->add_option("--basis", o->basis, "basis vector like \"1,1,1,0\"")->required();
    cmd->add_option("--policy", o->policy, "exhaustive | select")
        ->check(CLI::IsMember({"exhaustive", "select"}));
    cmd->add_option("--choices", o->choices, "demand choices JSON for --policy select");
    cmd->add_option("--out", o->out, "network JSON output (default stdout)");
    cmd->add_option("--dot", o->dot, "also write Graphviz dot here");
    cmd->add_option("--map", o->map, "also write the edge map JSON here");
    cmd->callback([&, o] {
      discrete_polymatroid d = o->in.load();
      intvec b;
      for (int v : parse_int_list(o->basis)) b.push_back(v);
      demand_policy policy =
          o->policy == "select" ? demand_policy::select : demand_policy::exhaustive;
      std::vector<demand_choice> choices;
      if (!o->choices.empty()) choices = load_choices(o->choices);
      built_network bn = build_network(d, b, policy, choices);
      emit(to_json(bn.net), pretty, o->out);
      if (!o->dot.empty()) emit_text(to_dot(bn.net), o->dot);
      if (!o->map.empty()) emit(to_json(bn.f), pretty, o->map);
    });
  }
  {
    auto* cmd = net_cmd->add_subcommand("validate", "structural checks and acyclicity");
    auto path = std::make_shared<std::string>();
    cmd->add_option("--net", *path, "network JSON")->required();
    cmd->callback([&, path] {
      network net = network_from_json(load_json_file(*path));
      auto errors = validate_network(net);
      json out;
      out["valid"] = errors.empty();
      if (!errors.empty()) {
        out["errors"] = errors;
        rc = exit_fails;
      }
      emit(out, pretty);
    });
  }
  {
    auto* cmd = net_cmd->add_subcommand("dot", "Graphviz rendering of a network");
    auto path = std::make_shared<std::string>();
    auto out_path = std::make_shared<std::string>();
    cmd->add_option("--net", *path, "network JSON")->required();
    cmd->add_option("--out", *out_path, "output file (default stdout)");
    cmd->callback([&, path, out_path] {
      emit_text(to_dot(network_from_json(load_json_file(*path))), *out_path);
    });
  }

  // ----------------------------------------------------------------- fnc
  auto* fnc_cmd = app.add_subcommand("fnc", "linear fractional network coding");
  fnc_cmd->require_subcommand(1);

  {
    auto* cmd = fnc_cmd->add_subcommand("extract", "solution carried by a representation");
    struct opts {
      std::string rep, net, map, out;
      bool find_map = false;
    };
    auto o = std::make_shared<opts>();
    cmd->add_option("--rep", o->rep, "representation JSON")->required();
    cmd->add_option("--net", o->net, "network JSON")->required();
    cmd->add_option("--map", o->map, "edge map JSON");
    cmd->add_flag("--find-map", o->find_map,
                  "brute-force all edge maps (exponential; r <= 8, at most 10 edges)");
    cmd->add_option("--out", o->out, "solution JSON output (default stdout)");
    cmd->callback([&, o] {
      representation rep = representation_from_json(load_json_file(o->rep));
      network net = network_from_json(load_json_file(o->net));
      if (o->map.empty() == !o->find_map)
        throw std::runtime_error("provide exactly one of --map or --find-map");
      if (!o->map.empty()) {
        edge_map f = edge_map_from_json(load_json_file(o->map));
        try {
          fnc_solution sol = extract_solution(net, rep, f);
          emit(to_json(sol), pretty, o->out);
        } catch (const extraction_error& e) {
          emit(json{{"extracted", false}, {"error", e.what()}}, pretty);
          rc = exit_fails;
        }
        return;
      }
      int r = int(rep.generators.size());
      std::vector<std::string> ids = ancestral_order(net);
      if (r > 8 || ids.size() > 10)
        throw std::runtime_error("map search limited to r <= 8 and at most 10 edges");
      std::vector<int> digits(ids.size(), 1);
      bool more = !ids.empty();
      while (more) {
        edge_map f;
        for (size_t i = 0; i < ids.size(); ++i) f.f[ids[i]] = digits[i];
        try {
          fnc_solution sol = extract_solution(net, rep, f);
          emit(to_json(sol), pretty, o->out);
          if (!o->out.empty()) emit(to_json(f), pretty);
          return;
        } catch (const extraction_error&) {
        }
        more = false;
        for (size_t i = ids.size(); i-- > 0;) {
          if (digits[i] < r) {
            ++digits[i];
            std::fill(digits.begin() + ptrdiff_t(i) + 1, digits.end(), 1);
            more = true;
            break;
          }
        }
      }
      emit(json{{"extracted", false}, {"error", "no admissible edge map"}}, pretty);
      rc = exit_fails;
    });
  }
  {
    auto* cmd = fnc_cmd->add_subcommand("verify", "check a solution against a network");
    auto net_path = std::make_shared<std::string>();
    auto sol_path = std::make_shared<std::string>();
    cmd->add_option("--net", *net_path, "network JSON")->required();
    cmd->add_option("--sol", *sol_path, "solution JSON")->required();
    cmd->callback([&, net_path, sol_path] {
      network net = network_from_json(load_json_file(*net_path));
      fnc_solution sol = solution_from_json(load_json_file(*sol_path));
      auto failures = verify_solution(net, sol);
      json out;
      out["verified"] = failures.empty();
      if (!failures.empty()) {
        json fs = json::array();
        for (const auto& f : failures)
          fs.push_back({{"kind", f.kind}, {"where", f.where}, {"detail", f.detail}});
        out["failures"] = std::move(fs);
        rc = exit_fails;
      }
      emit(out, pretty);
    });
  }
  {
    auto* cmd = fnc_cmd->add_subcommand("rates", "per-message and average rates");
    auto net_path = std::make_shared<std::string>();
    auto sol_path = std::make_shared<std::string>();
    cmd->add_option("--net", *net_path, "network JSON")->required();
    cmd->add_option("--sol", *sol_path, "solution JSON")->required();
    cmd->callback([&, net_path, sol_path] {
      network net = network_from_json(load_json_file(*net_path));
      fnc_solution sol = solution_from_json(load_json_file(*sol_path));
      rate_report rep = rates(net, sol);
      json out;
      json rs = json::array();
      for (const auto& f : rep.rate) rs.push_back(f.to_string());
      out["rate"] = std::move(rs);
      out["average"] = rep.average.to_string();
      out["symmetric"] = rep.symmetric;
      emit(out, pretty);
    });
  }
  {
    auto* cmd = fnc_cmd->add_subcommand("search", "exhaustive search for a linear solution");
    struct opts {
      std::string net, dims, out;
      int edge_dim = 1, jobs = 1;
      uint32_t q = 2;
      uint64_t budget = uint64_t(1) << 26;
    };
    auto o = std::make_shared<opts>();
    cmd->add_option("--net", o->net, "network JSON")->required();
    cmd->add_option("--dims", o->dims, "message dimensions like \"1,1,1\"")->required();
    cmd->add_option("--edge-dim", o->edge_dim, "intermediate edge dimension n")->required();
    cmd->add_option("--q", o->q, "prime field order")->required();
    cmd->add_option("--budget", o->budget, "max candidate assignments");
    cmd->add_option("--jobs", o->jobs, "worker count (deterministic result)");
    cmd->add_option("--out", o->out, "write a found solution here");
    cmd->callback([&, o] {
      network net = network_from_json(load_json_file(o->net));
      auto outcome =
          search_linear(net, parse_int_list(o->dims), o->edge_dim, o->q, o->budget, o->jobs);
      json out;
      out["verdict"] = verdict_str(outcome.verdict);
      out["candidates"] = outcome.candidates;
      out["budget"] = outcome.budget;
      if (outcome.solution) {
        if (o->out.empty())
          out["solution"] = to_json(*outcome.solution);
        else
          emit(to_json(*outcome.solution), pretty, o->out);
      }
      emit(out, pretty);
      rc = verdict_exit(outcome.verdict);
    });
  }
  {
    auto* cmd = fnc_cmd->add_subcommand("capacity", "best achievable rate within bounds");
    struct opts {
      std::string net, out;
      uint32_t q = 2;
      int k_max = 1, n_max = 1, dim_max = 1, jobs = 1;
      bool average = false;
      uint64_t budget = uint64_t(1) << 26;
    };
    auto o = std::make_shared<opts>();
    cmd->add_option("--net", o->net, "network JSON")->required();
    cmd->add_option("--q", o->q, "prime field order")->required();
    cmd->add_option("--k-max", o->k_max, "max symmetric message dimension");
    cmd->add_option("--n-max", o->n_max, "max edge dimension");
    cmd->add_flag("--average", o->average, "search average rate over all dimension tuples");
    cmd->add_option("--dim-max", o->dim_max, "max per-message dimension for --average");
    cmd->add_option("--budget", o->budget, "max candidate assignments per cell");
    cmd->add_option("--jobs", o->jobs, "worker count (deterministic result)");
    cmd->add_option("--out", o->out, "write the best solution here");
    cmd->callback([&, o] {
      network net = network_from_json(load_json_file(o->net));
      json out;
      bool found = false, budget_hit = false;
      if (o->average) {
        auto res = best_average_rate(net, o->q, o->dim_max, o->n_max, o->budget, o->jobs);
        json tried = json::array();
        for (const auto& c : res.tried) {
          tried.push_back({{"k", c.k},
                           {"n", c.n},
                           {"average", c.average.to_string()},
                           {"verdict", verdict_str(c.verdict)},
                           {"candidates", c.candidates}});
          budget_hit |= c.verdict == search_verdict::budget_exceeded;
        }
        out["mode"] = "average";
        out["tried"] = std::move(tried);
        if (res.best) {
          found = true;
          out["best"] = {{"k", res.best->k},
                         {"n", res.best->n},
                         {"average", res.best->average.to_string()}};
          if (!o->out.empty()) emit(to_json(*res.witness), pretty, o->out);
        } else {
          out["best"] = nullptr;
        }
      } else {
        auto res = max_symmetric_rate(net, o->q, o->k_max, o->n_max, o->budget, o->jobs);
        json table = json::array();
        for (const auto& c : res.table) {
          table.push_back({{"k", c.k},
                           {"n", c.n},
                           {"verdict", verdict_str(c.verdict)},
                           {"candidates", c.candidates}});
          budget_hit |= c.verdict == search_verdict::budget_exceeded;
        }
        out["mode"] = "symmetric";
        out["table"] = std::move(table);
        if (res.best) {
          found = true;
          out["best"] = res.best->to_string();
          if (!o->out.empty()) emit(to_json(*res.witness), pretty, o->out);
        } else {
          out["best"] = nullptr;
        }
      }
      emit(out, pretty);
      rc = found ? exit_ok : (budget_hit ? exit_budget : exit_exhausted);
    });
  }
  {
    auto* cmd = fnc_cmd->add_subcommand("frompoly",
                                        "polymatroid representation induced by a solution");
    struct opts {
      std::string net, sol, out, map_out;
    };
    auto o = std::make_shared<opts>();
    cmd->add_option("--net", o->net, "network JSON")->required();
    cmd->add_option("--sol", o->sol, "solution JSON")->required();
    cmd->add_option("--out", o->out, "representation JSON output (default stdout)");
    cmd->add_option("--map-out", o->map_out, "edge map JSON output");
    cmd->callback([&, o] {
      network net = network_from_json(load_json_file(o->net));
      fnc_solution sol = solution_from_json(load_json_file(o->sol));
      auto failures = verify_solution(net, sol);
      if (!failures.empty()) {
        json fs = json::array();
        for (const auto& f : failures)
          fs.push_back({{"kind", f.kind}, {"where", f.where}, {"detail", f.detail}});
        emit(json{{"verified", false}, {"failures", std::move(fs)}}, pretty);
        rc = exit_fails;
        return;
      }
      auto [rep, f] = polymatroid_from_solution(net, sol);
      if (o->out.empty() && o->map_out.empty()) {
        emit(json{{"representation", to_json(rep)}, {"map", to_json(f)}}, pretty);
      } else {
        if (!o->map_out.empty()) emit(to_json(f), pretty, o->map_out);
        emit(to_json(rep), pretty, o->out);  // empty --out falls back to stdout
      }
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  return rc;
}
