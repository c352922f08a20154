#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pathhom/ring.hpp"

namespace pathhom {

using Vertex = uint32_t;

// Finite simple digraph: named vertices in first-appearance order, no loop
// edges, duplicate edge insertion is a no-op. Treated as immutable once
// built; every algorithm takes it by const reference.
class Digraph {
 public:
  Vertex add_vertex(const std::string& name);
  void add_edge(const std::string& u, const std::string& v);
  void add_edge(Vertex u, Vertex v);

  size_t vertex_count() const { return names_.size(); }
  size_t edge_count() const { return edge_count_; }
  const std::string& name(Vertex v) const { return names_.at(v); }
  std::optional<Vertex> find(const std::string& name) const;
  Vertex vertex(const std::string& name) const;  // throws when absent

  bool has_edge(Vertex u, Vertex v) const;
  const std::vector<Vertex>& out(Vertex u) const { return out_.at(u); }  // sorted
  const std::vector<Vertex>& in(Vertex v) const { return in_.at(v); }    // sorted
  std::vector<std::pair<Vertex, Vertex>> edges() const;                  // sorted

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> out_, in_;
  size_t edge_count_ = 0;
};

// All-pairs shortest path lengths by BFS; unreachable pairs get INF, which
// absorbs under dist_add.
class DistanceMatrix {
 public:
  static constexpr uint32_t INF = UINT32_MAX;
  explicit DistanceMatrix(const Digraph& g);
  uint32_t at(Vertex u, Vertex v) const { return d_[size_t(u) * n_ + v]; }
  bool reachable(Vertex u, Vertex v) const { return at(u, v) != INF; }
  size_t size() const { return n_; }

 private:
  size_t n_;
  std::vector<uint32_t> d_;
};

inline uint32_t dist_add(uint32_t a, uint32_t b) {
  if (a == DistanceMatrix::INF || b == DistanceMatrix::INF) return DistanceMatrix::INF;
  return a + b;
}

// Edge-list text format: '#' comment lines, "vertex <name>" declarations,
// "<u> <v>" edges; whitespace-separated tokens, vertices interned in first-
// appearance order. serialize_digraph emits all vertices first, then the
// edge set sorted, so parse(serialize(g)) == g.
Digraph parse_digraph(const std::string& text);
std::string serialize_digraph(const Digraph& g);

// Named parametric digraph families used throughout the test corpus:
//   trapezohedron t    (t >= 2)
//   multiplicity t     (t >= 2)
//   euler t            (t >= 2)
//   multisquare-chain t (t >= 3)
Digraph gen_family(const std::string& family, int t);

// Erdos-Renyi style digraph on n named vertices v0..v{n-1}; each ordered
// pair (u, v), u != v, becomes an edge with the given probability. The
// draw uses raw 64-bit PRNG words compared against an exact rational
// threshold, so results are identical across platforms.
Digraph random_digraph(size_t n_vertices, const Rat& edge_probability, uint64_t seed);

// Length (edge count) of a longest path; nullopt when the digraph has a
// directed cycle and path length is unbounded.
std::optional<size_t> longest_path_length(const Digraph& g);

}  // namespace pathhom
