#include "pathhom/digraph.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

#include "pathhom/errors.hpp"

namespace pathhom {

namespace {

void check_vertex_name(const std::string& name) {
  if (name.empty()) throw validation_error("empty vertex name");
  if (name == "vertex") throw validation_error("'vertex' is a reserved word");
  if (name.front() == '#') throw validation_error("vertex name may not start with '#'");
  for (char c : name)
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n')
      throw validation_error("vertex name contains whitespace: '" + name + "'");
}

}  // namespace

Vertex Digraph::add_vertex(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  check_vertex_name(name);
  const Vertex v = static_cast<Vertex>(names_.size());
  names_.push_back(name);
  index_.emplace(name, v);
  out_.emplace_back();
  in_.emplace_back();
  return v;
}

void Digraph::add_edge(const std::string& u, const std::string& v) {
  const Vertex a = add_vertex(u);
  const Vertex b = add_vertex(v);
  add_edge(a, b);
}

void Digraph::add_edge(Vertex u, Vertex v) {
  if (u >= names_.size() || v >= names_.size()) throw contract_error("edge endpoint out of range");
  if (u == v) throw validation_error("loop edge at vertex '" + names_[u] + "'");
  auto& lst = out_[u];
  auto it = std::lower_bound(lst.begin(), lst.end(), v);
  if (it != lst.end() && *it == v) return;  // duplicate edges are idempotent
  lst.insert(it, v);
  auto& rl = in_[v];
  rl.insert(std::lower_bound(rl.begin(), rl.end(), u), u);
  ++edge_count_;
}

std::optional<Vertex> Digraph::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Digraph::vertex(const std::string& name) const {
  auto v = find(name);
  if (!v) throw validation_error("unknown vertex '" + name + "'");
  return *v;
}

bool Digraph::has_edge(Vertex u, Vertex v) const {
  if (u >= names_.size()) return false;
  const auto& lst = out_[u];
  return std::binary_search(lst.begin(), lst.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Digraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> e;
  e.reserve(edge_count_);
  for (Vertex u = 0; u < names_.size(); ++u)
    for (Vertex v : out_[u]) e.emplace_back(u, v);
  return e;
}

DistanceMatrix::DistanceMatrix(const Digraph& g) : n_(g.vertex_count()), d_(n_ * n_, INF) {
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n_; ++s) {
    d_[size_t(s) * n_ + s] = 0;
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      const uint32_t du = d_[size_t(s) * n_ + u];
      for (Vertex v : g.out(u)) {
        if (d_[size_t(s) * n_ + v] != INF) continue;
        d_[size_t(s) * n_ + v] = du + 1;
        queue.push_back(v);
      }
    }
  }
}

Digraph parse_digraph(const std::string& text) {
  Digraph g;
  std::istringstream in(text);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty() || tok[0].front() == '#') continue;
    try {
      if (tok[0] == "vertex") {
        if (tok.size() != 2) throw parse_error("expected 'vertex <name>'", line_no);
        g.add_vertex(tok[1]);
      } else if (tok.size() == 2) {
        g.add_edge(tok[0], tok[1]);
      } else {
        throw parse_error("expected '<u> <v>' or 'vertex <name>'", line_no);
      }
    } catch (const validation_error& e) {
      throw parse_error(e.what(), line_no);
    }
  }
  return g;
}

std::string serialize_digraph(const Digraph& g) {
  std::ostringstream out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "vertex " << g.name(v) << "\n";
  for (const auto& [u, v] : g.edges()) out << g.name(u) << " " << g.name(v) << "\n";
  return out.str();
}

namespace {

// one-based cyclic index into 1..m
int cyc(int i, int m) {
  int r = i % m;
  return r <= 0 ? r + m : r;
}

Digraph make_trapezohedron(int t) {
  Digraph g;
  g.add_vertex("T");
  for (int i = 1; i <= t; ++i) g.add_vertex("u_" + std::to_string(i));
  for (int i = 1; i <= t; ++i) g.add_vertex("v_" + std::to_string(i));
  g.add_vertex("H");
  for (int i = 1; i <= t; ++i) {
    const std::string u = "u_" + std::to_string(i);
    g.add_edge("T", u);
    g.add_edge(u, "v_" + std::to_string(i));
    g.add_edge(u, "v_" + std::to_string(cyc(i + 1, t)));
    g.add_edge("v_" + std::to_string(i), "H");
  }
  return g;
}

Digraph make_multiplicity(int t) {
  const int m = 2 * t;
  auto vB = [](int i) { return "v_" + std::to_string(i) + "^B"; };
  auto wB = [](int i) { return "w_" + std::to_string(i) + "^B"; };
  Digraph g;
  g.add_vertex("T");
  g.add_vertex("u_1^A");
  g.add_vertex("u_2^A");
  g.add_vertex("u^B");
  g.add_vertex("v_1^A");
  g.add_vertex("v_2^A");
  for (int i = 1; i <= m; ++i) g.add_vertex(vB(i));
  g.add_vertex("w^A");
  for (int i = 1; i <= m; ++i) g.add_vertex(wB(i));
  g.add_vertex("H");

  g.add_edge("T", "u_1^A");
  g.add_edge("T", "u_2^A");
  g.add_edge("T", "u^B");
  g.add_edge("u_1^A", "v_1^A");
  g.add_edge("u_1^A", "v_2^A");
  g.add_edge("u_2^A", "v_1^A");
  g.add_edge("u_2^A", "v_2^A");
  g.add_edge("v_1^A", "w^A");
  g.add_edge("v_2^A", "w^A");
  g.add_edge("w^A", "H");
  for (int i = 1; i <= m; ++i) {
    g.add_edge("u^B", vB(i));
    g.add_edge("u_1^A", vB(cyc(2 * i + 1, m)));  // odd positions
    g.add_edge("u_2^A", vB(cyc(2 * i, m)));      // even positions
    g.add_edge(vB(i), wB(i));
    g.add_edge(vB(i), wB(cyc(i + 1, m)));
    g.add_edge("v_1^A", wB(cyc(2 * i, m)));
    g.add_edge("v_2^A", wB(cyc(2 * i + 1, m)));
    g.add_edge(wB(i), "H");
  }
  return g;
}

Digraph make_euler(int t) {
  auto uC = [](int i) { return "u_" + std::to_string(i) + "^C"; };
  auto vB1 = [](int i) { return "v_" + std::to_string(i) + "^B1"; };
  auto vB2 = [](int i) { return "v_" + std::to_string(i) + "^B2"; };
  auto vC = [](int i) { return "v_" + std::to_string(i) + "^C"; };
  auto w = [](int i) { return "w_" + std::to_string(i); };
  Digraph g;
  g.add_vertex("T");
  g.add_vertex("u_1^A");
  g.add_vertex("u_2^A");
  for (int i = 1; i <= t; ++i) g.add_vertex(uC(i));
  g.add_vertex("v^A");
  for (int i = 1; i <= t; ++i) g.add_vertex(vB1(i));
  for (int i = 1; i <= t; ++i) g.add_vertex(vB2(i));
  for (int i = 1; i <= t; ++i) g.add_vertex(vC(i));
  for (int i = 1; i <= t; ++i) g.add_vertex(w(i));
  g.add_vertex("H");

  g.add_edge("T", "u_1^A");
  g.add_edge("T", "u_2^A");
  g.add_edge("u_1^A", "v^A");
  g.add_edge("u_2^A", "v^A");
  for (int i = 1; i <= t; ++i) {
    g.add_edge("T", uC(i));
    g.add_edge("T", vC(i));
    g.add_edge("u_1^A", vB1(i));
    g.add_edge("u_2^A", vB2(i));
    g.add_edge(uC(i), vB1(i));
    g.add_edge(uC(i), vB2(i));
    g.add_edge(uC(i), vC(i));
    g.add_edge("v^A", w(i));
    g.add_edge(vB1(i), w(cyc(i + 1, t)));
    g.add_edge(vB2(i), w(i));
    g.add_edge(vC(i), w(i));
    g.add_edge(vC(i), w(cyc(i + 1, t)));
    g.add_edge(vB1(i), "H");
    g.add_edge(vB2(i), "H");
    g.add_edge(w(i), "H");
  }
  return g;
}

Digraph make_multisquare_chain(int t) {
  auto v = [](int i) { return "v_" + std::to_string(i); };
  Digraph g;
  g.add_vertex(v(0));
  for (int j = 1; j <= 3; ++j) g.add_vertex("v_1^" + std::to_string(j));
  for (int i = 2; i <= t; ++i) g.add_vertex(v(i));
  for (int j = 1; j <= 3; ++j) {
    const std::string mid = "v_1^" + std::to_string(j);
    g.add_edge(v(0), mid);
    g.add_edge(mid, v(2));
    g.add_edge(mid, v(3));
  }
  for (int i = 2; i + 1 <= t; ++i) g.add_edge(v(i), v(i + 1));
  for (int i = 2; i + 2 <= t; ++i) g.add_edge(v(i), v(i + 2));
  return g;
}

}  // namespace

Digraph gen_family(const std::string& family, int t) {
  if (family == "trapezohedron") {
    if (t < 2) throw validation_error("trapezohedron needs t >= 2");
    return make_trapezohedron(t);
  }
  if (family == "multiplicity") {
    if (t < 2) throw validation_error("multiplicity needs t >= 2");
    return make_multiplicity(t);
  }
  if (family == "euler") {
    if (t < 2) throw validation_error("euler needs t >= 2");
    return make_euler(t);
  }
  if (family == "multisquare-chain") {
    if (t < 3) throw validation_error("multisquare-chain needs t >= 3");
    return make_multisquare_chain(t);
  }
  throw validation_error("unknown family '" + family + "'");
}

Digraph random_digraph(size_t n_vertices, const Rat& edge_probability, uint64_t seed) {
  if (edge_probability < 0 || edge_probability > 1)
    throw validation_error("edge probability must lie in [0, 1]");
  Digraph g;
  for (size_t i = 0; i < n_vertices; ++i) g.add_vertex("v" + std::to_string(i));
  std::mt19937_64 rng(seed);
  const Int num = boost::multiprecision::numerator(edge_probability);
  const Int den = boost::multiprecision::denominator(edge_probability);
  const Int scale = Int(1) << 64;
  for (Vertex u = 0; u < n_vertices; ++u)
    for (Vertex v = 0; v < n_vertices; ++v) {
      if (u == v) continue;
      const uint64_t word = rng();
      // include the edge iff word / 2^64 < probability, compared exactly
      if (Int(word) * den < num * scale) g.add_edge(u, v);
    }
  return g;
}

std::optional<size_t> longest_path_length(const Digraph& g) {
  const size_t n = g.vertex_count();
  std::vector<size_t> indeg(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.out(u)) ++indeg[v];
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  std::vector<Vertex> order;
  order.reserve(n);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    order.push_back(u);
    for (Vertex v : g.out(u))
      if (--indeg[v] == 0) queue.push_back(v);
  }
  if (order.size() != n) return std::nullopt;  // directed cycle
  std::vector<size_t> best(n, 0);
  size_t ans = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (Vertex v : g.out(*it)) best[*it] = std::max(best[*it], best[v] + 1);
    ans = std::max(ans, best[*it]);
  }
  return ans;
}

}  // namespace pathhom
