#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pathhom/chains.hpp"
#include "pathhom/digraph.hpp"

namespace pathhom {

enum class Direction { Upper, Lower };

// Append v to every term whose head has an edge to v; terms without the
// edge are dropped. lower_extension mirrors this by prepending.
Chain upper_extension(const Chain& x, Vertex v, const Digraph& g, const Ring& ring);
Chain lower_extension(const Chain& x, Vertex u, const Digraph& g, const Ring& ring);

// A slot addresses one summand of one vertex's face decomposition at a
// fixed anchor: vertex index, then position in the decomposition list.
struct FaceSlot {
  size_t vertex = 0;
  size_t k = 0;
  auto operator<=>(const FaceSlot&) const = default;
};

// Size 2 = edge (opposite faces); size t >= 3 = hyperedge (equal faces
// whose t-fold sum vanishes in the ring, drawn from at least two distinct
// vertices). Slots are sorted and distinct.
struct Hyperedge {
  Vertex anchor = 0;
  std::vector<FaceSlot> slots;
  auto operator<=>(const Hyperedge&) const = default;
};

// Multihypergraph on signed boundary-stable chains x_1..x_m (signs folded
// into the chains; x_i = -x_j is forbidden). For each vertex and each
// anchor u with nonzero face, an ordered decomposition of that face into
// nonzero summands with no zero-summing subsequence. Hyperedges join
// decomposition slots across vertices at a common anchor.
struct FaceMultihypergraph {
  Direction direction = Direction::Upper;
  int dim = 0;  // dimension of the vertex chains
  Ring ring;
  std::vector<Chain> vertices;
  std::map<std::pair<size_t, Vertex>, std::vector<Chain>> decomps;
  std::vector<Hyperedge> hyperedges;
};

// The face of vertex i at anchor u (head face for upper structures, tail
// face for lower ones).
Chain face_of(const FaceMultihypergraph& f, size_t i, Vertex u);

// The chain addressed by a slot under a given anchor.
const Chain& slot_face(const FaceMultihypergraph& f, Vertex anchor, const FaceSlot& s);

// Full structural check of the definition above; throws validation_error.
// check_membership additionally verifies each vertex chain is boundary
// stable (skippable for structures valid by construction).
void validate_face_multihypergraph(const FaceMultihypergraph& f, const Digraph& g,
                                   bool check_membership = true);

// An anchor blocks extension by v when it is v itself or adjacent to v in
// the direction of the extension; such anchors need no hyperedge cover.
bool anchor_needs_cover(Direction dir, const Digraph& g, Vertex anchor, Vertex ext);

// Proper: every hyperedge anchor needs cover (i.e. none is v or adjacent
// to v). Complete: proper, and every slot at a cover-needing anchor lies
// in exactly one hyperedge. Both require the extension by v to keep every
// term of every vertex chain.
bool is_proper(const FaceMultihypergraph& f, Vertex v, const Digraph& g);
bool is_complete(const FaceMultihypergraph& f, Vertex v, const Digraph& g);

// Extension of the vertex sum by v over a complete structure; the result
// is boundary stable (verified).
Chain extend_over(const FaceMultihypergraph& f, Vertex v, const Digraph& g);

// Canonical encoding, equal for two structures exactly when they are
// isomorphic by a label- and decomposition-preserving vertex bijection.
// Minimizes over permutations of interchangeable vertices; throws
// resource_limit_error if that search space exceeds an internal bound.
std::string canonical_form(const FaceMultihypergraph& f);

// All structures reachable by exactly one mutation move:
//   (1) re-pair the four slots of two same-anchor edges,
//   (2) two same-anchor size-t hyperedges with opposite faces <-> t edges
//       (both directions),
//   (3) redistribute the 2t slots of two same-anchor equal-face size-t
//       hyperedges into two new size-t hyperedges.
// Only valid results are produced, deduplicated by canonical form.
std::vector<FaceMultihypergraph> mutations(const FaceMultihypergraph& f);

bool is_connected_graph(const FaceMultihypergraph& f);
std::vector<FaceMultihypergraph> connected_components(const FaceMultihypergraph& f);

// Breadth-first scan of the mutation closure with canonical-form
// memoization; returns the first disconnected member encountered (in scan
// order), or nullopt if every member is connected. Visiting more than
// node_cap distinct structures raises resource_limit_error.
std::optional<FaceMultihypergraph> find_disconnected_in_closure(const FaceMultihypergraph& f,
                                                                size_t node_cap);

// Every member of the mutation closure is connected; resource_limit_error
// when the closure scan exceeds its node budget (query undetermined).
bool is_strongly_connected(const FaceMultihypergraph& f, size_t node_cap = 1000000);

}  // namespace pathhom
