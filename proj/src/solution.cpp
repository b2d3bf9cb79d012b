#include "fnc/solution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fnc {

fraction::fraction(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("fraction: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

fraction fraction::operator+(const fraction& o) const {
  return fraction(num * o.den + o.num * den, den * o.den);
}

std::string fraction::to_string() const {
  std::ostringstream os;
  os << num;
  if (den != 1) os << "/" << den;
  return os.str();
}

mat selector(const field& f, const std::vector<int>& k, int i) {
  if (i < 1 || i > static_cast<int>(k.size()))
    throw std::out_of_range("selector: message index out of range");
  int total = std::accumulate(k.begin(), k.end(), 0);
  int off = std::accumulate(k.begin(), k.begin() + (i - 1), 0);
  mat m(f, total, k[i - 1]);
  for (int j = 0; j < k[i - 1]; ++j) m.set(off + j, j, 1);
  return m;
}

mat in_stack(const network& net, const fnc_solution& sol, const std::string& v) {
  std::vector<mat> parts;
  for (const std::string& id : in_edges(net, v)) {
    auto it = sol.global.find(id);
    if (it == sol.global.end())
      throw std::invalid_argument("in_stack: no global matrix for edge " + id);
    parts.push_back(it->second);
  }
  if (parts.empty()) return mat(sol.f, sol.total_k(), 0);
  return hconcat(parts);
}

std::vector<verify_failure> verify_solution(const network& net, const fnc_solution& sol) {
  std::vector<verify_failure> out;
  if (sol.k.size() != net.inputs.size()) {
    out.push_back({"shape", "", "message dimension count != input edge count"});
    return out;
  }
  const int total = sol.total_k();
  for (const input_edge& e : net.inputs)
    if (sol.k[e.msg - 1] != e.k) {
      out.push_back({"shape", e.id, "solution k" + std::to_string(e.msg) +
                                        " != input edge dimension"});
      return out;
    }
  // every edge needs a matrix of the right shape
  std::vector<const input_edge*> ins;
  for (const input_edge& e : net.inputs) ins.push_back(&e);
  std::sort(ins.begin(), ins.end(),
            [](const input_edge* a, const input_edge* b) { return a->msg < b->msg; });
  for (const input_edge* e : ins) {
    auto it = sol.global.find(e->id);
    if (it == sol.global.end()) {
      out.push_back({"shape", e->id, "missing global matrix"});
      continue;
    }
    if (it->second.rows() != size_t(total) || it->second.cols() != size_t(e->k) ||
        it->second.f() != sol.f) {
      out.push_back({"shape", e->id, "input matrix must be " + std::to_string(total) +
                                         "x" + std::to_string(e->k)});
      continue;
    }
    if (it->second != selector(sol.f, sol.k, e->msg))
      out.push_back({"N1", e->id,
                     "input edge matrix is not the message selector for x" +
                         std::to_string(e->msg)});
  }
  std::vector<const inter_edge*> es;
  for (const inter_edge& e : net.edges) es.push_back(&e);
  std::sort(es.begin(), es.end(),
            [](const inter_edge* a, const inter_edge* b) { return a->id < b->id; });
  for (const inter_edge* e : es) {
    auto it = sol.global.find(e->id);
    if (it == sol.global.end()) {
      out.push_back({"shape", e->id, "missing global matrix"});
      continue;
    }
    if (it->second.rows() != size_t(total) || it->second.cols() != size_t(sol.n) ||
        it->second.f() != sol.f)
      out.push_back({"shape", e->id, "intermediate matrix must be " +
                                         std::to_string(total) + "x" +
                                         std::to_string(sol.n)});
  }
  if (!out.empty()) return out;

  // N3: local computability of every intermediate edge at its origin
  for (const inter_edge* e : es) {
    mat stack = in_stack(net, sol, e->from);
    if (!solve_right(stack, sol.global.at(e->id)))
      out.push_back({"N3", e->id,
                     "edge symbol is not a function of the incoming symbols at " +
                         e->from});
  }
  // N2: decodability of every demand
  for (const auto& [node, msgs] : net.demands) {
    std::vector<int> ms = msgs;
    std::sort(ms.begin(), ms.end());
    mat stack = in_stack(net, sol, node);
    for (int m : ms)
      if (!solve_right(stack, selector(sol.f, sol.k, m)))
        out.push_back({"N2", node + "/x" + std::to_string(m),
                       "message x" + std::to_string(m) + " is not decodable at " + node});
  }
  return out;
}

rate_report rates(const network& net, const fnc_solution& sol) {
  rate_report rep;
  const int m = static_cast<int>(net.inputs.size());
  fraction sum(0, 1);
  for (int i = 0; i < m; ++i) {
    rep.rate.emplace_back(sol.k[i], sol.n);
    sum = sum + rep.rate.back();
  }
  rep.average = fraction(sum.num, sum.den * m);
  rep.symmetric = true;
  for (int i = 1; i < m; ++i)
    if (sol.k[i] != sol.k[0]) rep.symmetric = false;
  return rep;
}

}  // namespace fnc
