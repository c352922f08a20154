#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pathhom/digraph.hpp"
#include "pathhom/exact_linalg.hpp"
#include "pathhom/ring.hpp"

namespace pathhom {

// Elementary path (v_0, ..., v_n); its dimension is n = size - 1.
using Path = std::vector<Vertex>;

// Formal linear combination of equal-length vertex tuples with exact
// coefficients. Terms live in a lexicographically ordered map, so the
// iteration order, the leading term and the serialization are canonical.
class Chain {
 public:
  Chain() = default;
  explicit Chain(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Path, Scalar>& terms() const { return terms_; }

  Scalar coeff(const Path& p) const;
  void add_term(const Path& p, const Scalar& c, const Ring& ring);

  static Chain unit(const Path& p);

  Chain plus(const Chain& o, const Ring& ring) const;
  Chain minus(const Chain& o, const Ring& ring) const;
  Chain scaled(const Scalar& s, const Ring& ring) const;
  Chain negated(const Ring& ring) const { return scaled(Scalar(-1), ring); }

  bool operator==(const Chain& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
  bool operator!=(const Chain& o) const { return !(*this == o); }

  // canonical text form "v0,v1,...:coeff;..." used for ordering and hashing
  std::string key() const;

 private:
  int dim_ = 0;
  std::map<Path, Scalar> terms_;
};

// Flip the chain's sign if needed so the lexicographically smallest term
// has a positive coefficient (for Z/p: a representative in [1, p/2]).
// Reports the applied sign (+1 or -1) through sign_out when non-null.
Chain sign_normalized(const Chain& x, const Ring& ring, int* sign_out = nullptr);

// Every path of n edge steps in lexicographic order of vertex indices.
std::vector<Path> allowed_paths(const Digraph& g, int n);

bool is_allowed_path(const Digraph& g, const Path& p);

// One diagonal component of the magnitude boundary, 1 <= i <= n-1: delete
// vertex i of each tuple when the two hops through it realize a shortest
// distance of exactly 2, drop the term otherwise.
Chain magnitude_partial(const Chain& x, int i, const DistanceMatrix& d, const Ring& ring);

// All magnitude partials vanish and every term is an allowed path.
bool in_omega(const Chain& x, const Digraph& g, const DistanceMatrix& d, const Ring& ring);

// Alternating-sum boundary on regular paths; terms whose deletion creates
// a repeated consecutive vertex are dropped. Requires (and verifies, via
// allowedness of the result) that x lies in the boundary-stable module.
Chain path_boundary(const Chain& x, const Digraph& g, const Ring& ring);

// Head face at v: keep terms whose second-to-last vertex is v and cut the
// final vertex. Tail face mirrors this at the front.
Chain face_head(const Chain& x, Vertex v, const Ring& ring);
Chain face_tail(const Chain& x, Vertex v, const Ring& ring);

// Endpoint sets; a chain is connected when both are singletons.
std::set<Vertex> head_set(const Chain& x);  // last vertices
std::set<Vertex> tail_set(const Chain& x);  // first vertices
bool is_connected(const Chain& x);
Vertex head_vertex(const Chain& x);  // requires a singleton head set
Vertex tail_vertex(const Chain& x);

// Basis of the boundary-stable chain module in dimension n, bigraded by
// endpoint pair. Blocks are independent kernels: over fields reduced
// echelon bases, over the integers Hermite bases of the saturated kernel
// lattice. Only nonzero blocks are stored.
struct OmegaBasis {
  int dim = 0;
  Ring ring;
  std::map<std::pair<Vertex, Vertex>, std::vector<Chain>> blocks;

  size_t total_dim() const;
  std::vector<const Chain*> flatten() const;  // block order, then in-block order
  const std::vector<Chain>* block(Vertex tail, Vertex head) const;
};

OmegaBasis omega_basis(const Digraph& g, int n, const Ring& ring);

// Coordinates of x against the flattened basis; throws not_in_span_error.
std::vector<Scalar> express_chain(const Chain& x, const OmegaBasis& basis, const Ring& ring);

// Coordinates against an explicit independent chain list.
std::vector<Scalar> express_in_chain_basis(const Chain& x, const std::vector<Chain>& basis,
                                           const Ring& ring);

}  // namespace pathhom
