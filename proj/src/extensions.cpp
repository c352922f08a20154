#include "pathhom/extensions.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "pathhom/errors.hpp"

namespace pathhom {

Chain upper_extension(const Chain& x, Vertex v, const Digraph& g, const Ring& ring) {
  Chain out(x.dim() + 1);
  for (const auto& [p, c] : x.terms()) {
    if (!g.has_edge(p.back(), v)) continue;
    Path q = p;
    q.push_back(v);
    out.add_term(q, c, ring);
  }
  return out;
}

Chain lower_extension(const Chain& x, Vertex u, const Digraph& g, const Ring& ring) {
  Chain out(x.dim() + 1);
  for (const auto& [p, c] : x.terms()) {
    if (!g.has_edge(u, p.front())) continue;
    Path q;
    q.reserve(p.size() + 1);
    q.push_back(u);
    q.insert(q.end(), p.begin(), p.end());
    out.add_term(q, c, ring);
  }
  return out;
}

Chain face_of(const FaceMultihypergraph& f, size_t i, Vertex u) {
  const Chain& x = f.vertices.at(i);
  return f.direction == Direction::Upper ? face_head(x, u, f.ring) : face_tail(x, u, f.ring);
}

const Chain& slot_face(const FaceMultihypergraph& f, Vertex anchor, const FaceSlot& s) {
  auto it = f.decomps.find({s.vertex, anchor});
  if (it == f.decomps.end() || s.k >= it->second.size())
    throw contract_error("slot refers to a missing decomposition entry");
  return it->second[s.k];
}

bool anchor_needs_cover(Direction dir, const Digraph& g, Vertex anchor, Vertex ext) {
  if (anchor == ext) return false;
  const bool adjacent =
      dir == Direction::Upper ? g.has_edge(anchor, ext) : g.has_edge(ext, anchor);
  return !adjacent;
}

namespace {

uint64_t splitmix64(uint64_t& s) {
  uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// No nonempty sub-collection of the list may sum to zero. Exhaustive up
// to 12 entries, deterministic random subsets beyond that.
bool has_zero_subsequence(const std::vector<Chain>& list, const Ring& ring, int dim) {
  const size_t m = list.size();
  auto subset_sum_is_zero = [&](uint64_t mask) {
    Chain sum(dim);
    for (size_t j = 0; j < m; ++j)
      if (mask & (uint64_t(1) << j)) sum = sum.plus(list[j], ring);
    return sum.is_zero();
  };
  if (m <= 12) {
    for (uint64_t mask = 1; mask < (uint64_t(1) << m); ++mask)
      if (subset_sum_is_zero(mask)) return true;
    return false;
  }
  uint64_t state = 0x5eedf00dULL ^ (m * 0x9e37ULL);
  for (int trial = 0; trial < 4096; ++trial) {
    uint64_t mask = splitmix64(state) & ((uint64_t(1) << std::min<size_t>(m, 63)) - 1);
    if (mask != 0 && subset_sum_is_zero(mask)) return true;
  }
  return false;
}

// Validity of a single (candidate) hyperedge against the definition.
bool hyperedge_ok(const FaceMultihypergraph& f, const Hyperedge& he) {
  if (he.slots.size() < 2) return false;
  if (!std::is_sorted(he.slots.begin(), he.slots.end())) return false;
  if (std::adjacent_find(he.slots.begin(), he.slots.end()) != he.slots.end()) return false;
  for (const FaceSlot& s : he.slots) {
    auto it = f.decomps.find({s.vertex, he.anchor});
    if (it == f.decomps.end() || s.k >= it->second.size()) return false;
  }
  if (he.slots.size() == 2) {
    const Chain& a = slot_face(f, he.anchor, he.slots[0]);
    const Chain& b = slot_face(f, he.anchor, he.slots[1]);
    return a == b.negated(f.ring);
  }
  // t >= 3: equal faces, t-torsion, at least two distinct vertices
  const Chain& first = slot_face(f, he.anchor, he.slots[0]);
  for (const FaceSlot& s : he.slots)
    if (!(slot_face(f, he.anchor, s) == first)) return false;
  if (!first.scaled(Scalar(static_cast<int64_t>(he.slots.size())), f.ring).is_zero())
    return false;
  for (const FaceSlot& s : he.slots)
    if (s.vertex != he.slots[0].vertex) return true;
  return false;
}

struct DisjointSets {
  std::vector<size_t> parent;
  explicit DisjointSets(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  size_t find(size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

void validate_face_multihypergraph(const FaceMultihypergraph& f, const Digraph& g,
                                   bool check_membership) {
  const size_t m = f.vertices.size();
  if (m == 0) throw validation_error("structure has no vertices");

  DistanceMatrix dist(g);
  for (size_t i = 0; i < m; ++i) {
    const Chain& x = f.vertices[i];
    if (x.is_zero()) throw validation_error("zero vertex chain");
    if (x.dim() != f.dim) throw validation_error("vertex chain of wrong dimension");
    if (check_membership && !in_omega(x, g, dist, f.ring))
      throw validation_error("vertex chain is not boundary stable");
    for (size_t j = i + 1; j < m; ++j)
      if (f.vertices[j] == x.negated(f.ring))
        throw validation_error("vertex chains include a chain and its negative");
  }

  // decomposition lists: present exactly at nonzero faces, nonzero
  // summands adding up to the face, no vanishing sub-collection
  std::set<std::pair<size_t, Vertex>> expected;
  for (size_t i = 0; i < m; ++i)
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      if (!face_of(f, i, u).is_zero()) expected.insert({i, u});
  for (const auto& key : expected)
    if (!f.decomps.count(key))
      throw validation_error("missing decomposition for a nonzero face");
  for (const auto& [key, list] : f.decomps) {
    const auto& [i, u] = key;
    if (i >= m) throw validation_error("decomposition for unknown vertex");
    if (!expected.count(key)) throw validation_error("decomposition at a zero face");
    if (list.empty()) throw validation_error("empty decomposition list");
    Chain sum(f.dim - 1);
    for (const Chain& part : list) {
      if (part.is_zero()) throw validation_error("zero decomposition summand");
      sum = sum.plus(part, f.ring);
    }
    if (!(sum == face_of(f, i, u))) throw validation_error("decomposition does not sum to face");
    if (has_zero_subsequence(list, f.ring, f.dim - 1))
      throw validation_error("decomposition has a zero-summing sub-collection");
  }

  std::set<std::pair<Vertex, FaceSlot>> used;
  for (const Hyperedge& he : f.hyperedges) {
    if (!hyperedge_ok(f, he)) throw validation_error("invalid hyperedge");
    for (const FaceSlot& s : he.slots)
      if (!used.insert({he.anchor, s}).second)
        throw validation_error("slot covered by more than one hyperedge");
  }
}

namespace {

void require_extension_defined(const FaceMultihypergraph& f, Vertex v, const Digraph& g) {
  for (const Chain& x : f.vertices)
    for (const auto& [p, c] : x.terms()) {
      const bool ok =
          f.direction == Direction::Upper ? g.has_edge(p.back(), v) : g.has_edge(v, p.front());
      if (!ok)
        throw contract_error("extension by '" + g.name(v) + "' drops a term of a vertex chain");
    }
}

}  // namespace

bool is_proper(const FaceMultihypergraph& f, Vertex v, const Digraph& g) {
  require_extension_defined(f, v, g);
  for (const Hyperedge& he : f.hyperedges)
    if (!anchor_needs_cover(f.direction, g, he.anchor, v)) return false;
  return true;
}

bool is_complete(const FaceMultihypergraph& f, Vertex v, const Digraph& g) {
  if (!is_proper(f, v, g)) return false;
  std::set<std::pair<Vertex, FaceSlot>> covered;
  for (const Hyperedge& he : f.hyperedges)
    for (const FaceSlot& s : he.slots) covered.insert({he.anchor, s});
  for (const auto& [key, list] : f.decomps) {
    const auto& [i, u] = key;
    if (!anchor_needs_cover(f.direction, g, u, v)) continue;
    for (size_t k = 0; k < list.size(); ++k)
      if (!covered.count({u, FaceSlot{i, k}})) return false;
  }
  return true;
}

Chain extend_over(const FaceMultihypergraph& f, Vertex v, const Digraph& g) {
  if (!is_complete(f, v, g))
    throw contract_error("extension over a structure that is not complete at '" + g.name(v) + "'");
  Chain sum(f.dim);
  for (const Chain& x : f.vertices) sum = sum.plus(x, f.ring);
  const Chain ext = f.direction == Direction::Upper ? upper_extension(sum, v, g, f.ring)
                                                    : lower_extension(sum, v, g, f.ring);
  const DistanceMatrix dist(g);
  if (!in_omega(ext, g, dist, f.ring))
    throw contract_error("complete structure produced a non-stable extension");
  return ext;
}

namespace {

constexpr size_t kCanonPermutationCap = 40320;  // 8!
constexpr size_t kMutationCandidateCap = 100000;

// Two vertices are interchangeable when their labels and their whole
// decomposition tables agree; the profile captures both.
std::vector<std::string> vertex_profiles(const FaceMultihypergraph& f) {
  std::vector<std::string> prof(f.vertices.size());
  for (size_t i = 0; i < f.vertices.size(); ++i) {
    std::ostringstream os;
    os << f.vertices[i].key() << "|";
    for (const auto& [key, list] : f.decomps) {
      if (key.first != i) continue;
      std::vector<std::string> faces;
      faces.reserve(list.size());
      for (const Chain& c : list) faces.push_back(c.key());
      std::sort(faces.begin(), faces.end());
      os << "@" << key.second << "{";
      for (const auto& s : faces) os << s << "&";
      os << "}";
    }
    prof[i] = os.str();
  }
  return prof;
}

}  // namespace

std::string canonical_form(const FaceMultihypergraph& f) {
  const size_t m = f.vertices.size();
  const std::vector<std::string> prof = vertex_profiles(f);

  // base order: by profile, ties by original index; equal-profile runs
  // form the permutable groups
  std::vector<size_t> base(m);
  std::iota(base.begin(), base.end(), 0);
  std::sort(base.begin(), base.end(), [&](size_t a, size_t b) {
    return prof[a] != prof[b] ? prof[a] < prof[b] : a < b;
  });
  std::vector<std::vector<size_t>> groups;
  std::vector<size_t> group_start;  // position span of each group
  for (size_t i = 0; i < m; ++i) {
    if (i == 0 || prof[base[i]] != prof[base[i - 1]]) {
      groups.emplace_back();
      group_start.push_back(i);
    }
    groups.back().push_back(base[i]);
  }
  size_t perm_count = 1;
  for (const auto& grp : groups) {
    size_t fact = 1;
    for (size_t j = 2; j <= grp.size(); ++j) {
      fact *= j;
      if (fact > kCanonPermutationCap) break;
    }
    perm_count = perm_count > kCanonPermutationCap / std::max<size_t>(fact, 1)
                     ? kCanonPermutationCap + 1
                     : perm_count * fact;
    if (perm_count > kCanonPermutationCap)
      throw resource_limit_error("canonical form search space too large");
  }

  // slot faces keyed once; slots with equal faces are interchangeable, so
  // hyperedge slots are encoded as (vertex position, face key)
  std::map<std::pair<Vertex, FaceSlot>, std::string> face_key;
  for (const Hyperedge& he : f.hyperedges)
    for (const FaceSlot& s : he.slots)
      face_key.try_emplace({he.anchor, s}, slot_face(f, he.anchor, s).key());

  std::vector<std::vector<size_t>> arrangement = groups;
  std::string best;
  bool first = true;
  while (true) {
    std::vector<size_t> pos(m);
    for (size_t gi = 0; gi < arrangement.size(); ++gi)
      for (size_t j = 0; j < arrangement[gi].size(); ++j)
        pos[arrangement[gi][j]] = group_start[gi] + j;

    std::vector<std::string> enc;
    enc.reserve(f.hyperedges.size());
    for (const Hyperedge& he : f.hyperedges) {
      std::vector<std::string> slots;
      slots.reserve(he.slots.size());
      for (const FaceSlot& s : he.slots) {
        std::ostringstream os;
        os << pos[s.vertex] << "~" << face_key.at({he.anchor, s});
        slots.push_back(os.str());
      }
      std::sort(slots.begin(), slots.end());
      std::ostringstream os;
      os << "A" << he.anchor << "(";
      for (const auto& s : slots) os << s << "|";
      os << ")";
      enc.push_back(os.str());
    }
    std::sort(enc.begin(), enc.end());
    std::string joined;
    for (const auto& e : enc) joined += e;
    if (first || joined < best) {
      best = std::move(joined);
      first = false;
    }

    size_t gi = 0;
    while (gi < arrangement.size() &&
           !std::next_permutation(arrangement[gi].begin(), arrangement[gi].end()))
      ++gi;
    if (gi == arrangement.size()) break;
  }

  std::ostringstream head;
  head << (f.direction == Direction::Upper ? "U" : "L") << f.dim << ":" << f.ring.name() << ":";
  for (const size_t i : base) head << "[" << prof[i] << "]";
  head << "||" << best;
  return head.str();
}

namespace {

struct MutationBuilder {
  const FaceMultihypergraph& f;
  std::map<std::string, FaceMultihypergraph> out;
  size_t candidates = 0;

  void offer(FaceMultihypergraph cand) {
    if (++candidates > kMutationCandidateCap)
      throw resource_limit_error("mutation fan-out exceeded candidate budget");
    std::sort(cand.hyperedges.begin(), cand.hyperedges.end());
    out.try_emplace(canonical_form(cand), std::move(cand));
  }

  // rebuild the hyperedge list with positions `drop` removed and `add` appended
  FaceMultihypergraph rebuilt(const std::vector<size_t>& drop, std::vector<Hyperedge> add) {
    FaceMultihypergraph cand = f;
    std::vector<Hyperedge> keep;
    keep.reserve(cand.hyperedges.size());
    for (size_t i = 0; i < cand.hyperedges.size(); ++i)
      if (std::find(drop.begin(), drop.end(), i) == drop.end())
        keep.push_back(cand.hyperedges[i]);
    for (Hyperedge& he : add) {
      std::sort(he.slots.begin(), he.slots.end());
      keep.push_back(std::move(he));
    }
    cand.hyperedges = std::move(keep);
    return cand;
  }
};

}  // namespace

std::vector<FaceMultihypergraph> mutations(const FaceMultihypergraph& f) {
  MutationBuilder mb{f};
  const size_t n = f.hyperedges.size();

  // (1) re-pair two same-anchor edges
  for (size_t a = 0; a < n; ++a) {
    if (f.hyperedges[a].slots.size() != 2) continue;
    for (size_t b = a + 1; b < n; ++b) {
      if (f.hyperedges[b].slots.size() != 2) continue;
      if (f.hyperedges[a].anchor != f.hyperedges[b].anchor) continue;
      const Vertex u = f.hyperedges[a].anchor;
      const FaceSlot p = f.hyperedges[a].slots[0], q = f.hyperedges[a].slots[1];
      const FaceSlot r = f.hyperedges[b].slots[0], s = f.hyperedges[b].slots[1];
      const std::pair<std::pair<FaceSlot, FaceSlot>, std::pair<FaceSlot, FaceSlot>> opts[2] = {
          {{p, r}, {q, s}}, {{p, s}, {q, r}}};
      for (const auto& [e1, e2] : opts) {
        Hyperedge h1{u, {e1.first, e1.second}}, h2{u, {e2.first, e2.second}};
        std::sort(h1.slots.begin(), h1.slots.end());
        std::sort(h2.slots.begin(), h2.slots.end());
        if (!hyperedge_ok(f, h1) || !hyperedge_ok(f, h2)) continue;
        mb.offer(mb.rebuilt({a, b}, {h1, h2}));
      }
    }
  }

  // (2) two same-anchor opposite-face hyperedges -> a perfect matching of
  // their slots as edges (every bijection)
  for (size_t a = 0; a < n; ++a) {
    const size_t t = f.hyperedges[a].slots.size();
    if (t < 3) continue;
    for (size_t b = a + 1; b < n; ++b) {
      if (f.hyperedges[b].slots.size() != t) continue;
      if (f.hyperedges[a].anchor != f.hyperedges[b].anchor) continue;
      const Vertex u = f.hyperedges[a].anchor;
      const Chain fa = slot_face(f, u, f.hyperedges[a].slots[0]);
      const Chain fb = slot_face(f, u, f.hyperedges[b].slots[0]);
      if (!(fa == fb.negated(f.ring))) continue;
      std::vector<size_t> perm(t);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<Hyperedge> edges;
        edges.reserve(t);
        bool ok = true;
        for (size_t i = 0; i < t && ok; ++i) {
          Hyperedge e{u, {f.hyperedges[a].slots[i], f.hyperedges[b].slots[perm[i]]}};
          std::sort(e.slots.begin(), e.slots.end());
          ok = hyperedge_ok(f, e);
          edges.push_back(std::move(e));
        }
        if (ok) mb.offer(mb.rebuilt({a, b}, std::move(edges)));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

  // (2') t same-anchor edges with a common opposite face pair {h, -h} and
  // t-torsion -> two size-t hyperedges splitting the sides
  {
    std::map<std::pair<Vertex, std::string>, std::vector<size_t>> edge_groups;
    for (size_t i = 0; i < n; ++i) {
      if (f.hyperedges[i].slots.size() != 2) continue;
      const Vertex u = f.hyperedges[i].anchor;
      std::string k1 = slot_face(f, u, f.hyperedges[i].slots[0]).key();
      std::string k2 = slot_face(f, u, f.hyperedges[i].slots[1]).key();
      if (k2 < k1) std::swap(k1, k2);
      edge_groups[{u, k1 + "/" + k2}].push_back(i);
    }
    for (const auto& [gk, members] : edge_groups) {
      const Vertex u = gk.first;
      const Chain h = slot_face(f, u, f.hyperedges[members[0]].slots[0]);
      const bool self_paired = h == h.negated(f.ring);
      for (size_t t = 3; t <= members.size(); ++t) {
        if (!h.scaled(Scalar(static_cast<int64_t>(t)), f.ring).is_zero()) continue;
        std::vector<size_t> pick(t);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
          std::vector<size_t> chosen;
          chosen.reserve(t);
          for (size_t j : pick) chosen.push_back(members[j]);
          if (self_paired) {
            // both sides carry the same face; every per-edge split works
            for (uint64_t mask = 0; mask < (uint64_t(1) << t); ++mask) {
              Hyperedge h1{u, {}}, h2{u, {}};
              for (size_t j = 0; j < t; ++j) {
                const Hyperedge& e = f.hyperedges[chosen[j]];
                const bool flip = mask & (uint64_t(1) << j);
                h1.slots.push_back(e.slots[flip ? 1 : 0]);
                h2.slots.push_back(e.slots[flip ? 0 : 1]);
              }
              std::sort(h1.slots.begin(), h1.slots.end());
              std::sort(h2.slots.begin(), h2.slots.end());
              if (hyperedge_ok(f, h1) && hyperedge_ok(f, h2))
                mb.offer(mb.rebuilt(chosen, {h1, h2}));
            }
          } else {
            Hyperedge h1{u, {}}, h2{u, {}};
            for (size_t j = 0; j < t; ++j) {
              const Hyperedge& e = f.hyperedges[chosen[j]];
              const bool first_is_h = slot_face(f, u, e.slots[0]) == h;
              h1.slots.push_back(e.slots[first_is_h ? 0 : 1]);
              h2.slots.push_back(e.slots[first_is_h ? 1 : 0]);
            }
            std::sort(h1.slots.begin(), h1.slots.end());
            std::sort(h2.slots.begin(), h2.slots.end());
            if (hyperedge_ok(f, h1) && hyperedge_ok(f, h2))
              mb.offer(mb.rebuilt(chosen, {h1, h2}));
          }
          // next t-combination of members
          size_t j = t;
          while (j > 0 && pick[j - 1] == members.size() - t + (j - 1)) --j;
          if (j == 0) break;
          ++pick[j - 1];
          for (size_t l = j; l < t; ++l) pick[l] = pick[l - 1] + 1;
        }
      }
    }
  }

  // (3) redistribute two same-anchor equal-face hyperedges of equal size
  for (size_t a = 0; a < n; ++a) {
    const size_t t = f.hyperedges[a].slots.size();
    if (t < 3) continue;
    for (size_t b = a + 1; b < n; ++b) {
      if (f.hyperedges[b].slots.size() != t) continue;
      if (f.hyperedges[a].anchor != f.hyperedges[b].anchor) continue;
      const Vertex u = f.hyperedges[a].anchor;
      const Chain fa = slot_face(f, u, f.hyperedges[a].slots[0]);
      const Chain fb = slot_face(f, u, f.hyperedges[b].slots[0]);
      if (!(fa == fb)) continue;
      std::vector<FaceSlot> all = f.hyperedges[a].slots;
      all.insert(all.end(), f.hyperedges[b].slots.begin(), f.hyperedges[b].slots.end());
      std::sort(all.begin(), all.end());
      std::vector<size_t> pick(t);
      std::iota(pick.begin(), pick.end(), 0);
      while (true) {
        Hyperedge h1{u, {}}, h2{u, {}};
        std::vector<bool> taken(2 * t, false);
        for (size_t j : pick) {
          h1.slots.push_back(all[j]);
          taken[j] = true;
        }
        for (size_t j = 0; j < 2 * t; ++j)
          if (!taken[j]) h2.slots.push_back(all[j]);
        if (hyperedge_ok(f, h1) && hyperedge_ok(f, h2))
          mb.offer(mb.rebuilt({a, b}, {h1, h2}));
        size_t j = t;
        while (j > 0 && pick[j - 1] == 2 * t - t + (j - 1)) --j;
        if (j == 0) break;
        ++pick[j - 1];
        for (size_t l = j; l < t; ++l) pick[l] = pick[l - 1] + 1;
      }
    }
  }

  std::vector<FaceMultihypergraph> result;
  result.reserve(mb.out.size());
  for (auto& [key, g] : mb.out) result.push_back(std::move(g));
  return result;
}

bool is_connected_graph(const FaceMultihypergraph& f) {
  const size_t m = f.vertices.size();
  if (m == 0) throw contract_error("connectivity of an empty structure");
  DisjointSets ds(m);
  for (const Hyperedge& he : f.hyperedges)
    for (size_t j = 1; j < he.slots.size(); ++j)
      ds.unite(he.slots[0].vertex, he.slots[j].vertex);
  const size_t root = ds.find(0);
  for (size_t i = 1; i < m; ++i)
    if (ds.find(i) != root) return false;
  return true;
}

std::vector<FaceMultihypergraph> connected_components(const FaceMultihypergraph& f) {
  const size_t m = f.vertices.size();
  DisjointSets ds(m);
  for (const Hyperedge& he : f.hyperedges)
    for (size_t j = 1; j < he.slots.size(); ++j)
      ds.unite(he.slots[0].vertex, he.slots[j].vertex);

  // components ordered by smallest member index
  std::map<size_t, size_t> comp_id;
  std::vector<std::vector<size_t>> comp_members;
  for (size_t i = 0; i < m; ++i) {
    const size_t r = ds.find(i);
    auto [it, fresh] = comp_id.try_emplace(r, comp_members.size());
    if (fresh) comp_members.emplace_back();
    comp_members[it->second].push_back(i);
  }

  std::vector<FaceMultihypergraph> out(comp_members.size());
  std::vector<size_t> new_index(m);
  std::vector<size_t> comp_of(m);
  for (size_t c = 0; c < comp_members.size(); ++c) {
    out[c].direction = f.direction;
    out[c].dim = f.dim;
    out[c].ring = f.ring;
    for (size_t j = 0; j < comp_members[c].size(); ++j) {
      const size_t orig = comp_members[c][j];
      new_index[orig] = j;
      comp_of[orig] = c;
      out[c].vertices.push_back(f.vertices[orig]);
    }
  }
  for (const auto& [key, list] : f.decomps) {
    const auto& [i, u] = key;
    out[comp_of[i]].decomps[{new_index[i], u}] = list;
  }
  for (const Hyperedge& he : f.hyperedges) {
    Hyperedge mapped{he.anchor, {}};
    for (const FaceSlot& s : he.slots) mapped.slots.push_back({new_index[s.vertex], s.k});
    std::sort(mapped.slots.begin(), mapped.slots.end());
    out[comp_of[he.slots[0].vertex]].hyperedges.push_back(std::move(mapped));
  }
  for (auto& g : out) std::sort(g.hyperedges.begin(), g.hyperedges.end());
  return out;
}

std::optional<FaceMultihypergraph> find_disconnected_in_closure(const FaceMultihypergraph& f,
                                                                size_t node_cap) {
  std::set<std::string> seen;
  std::deque<FaceMultihypergraph> queue;
  seen.insert(canonical_form(f));
  queue.push_back(f);
  while (!queue.empty()) {
    FaceMultihypergraph cur = std::move(queue.front());
    queue.pop_front();
    if (!is_connected_graph(cur)) return cur;
    for (FaceMultihypergraph& next : mutations(cur)) {
      std::string key = canonical_form(next);
      if (!seen.insert(std::move(key)).second) continue;
      if (seen.size() > node_cap)
        throw resource_limit_error("mutation closure exceeded the node budget");
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

bool is_strongly_connected(const FaceMultihypergraph& f, size_t node_cap) {
  return !find_disconnected_in_closure(f, node_cap).has_value();
}

}  // namespace pathhom
