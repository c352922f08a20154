#pragma once

#include <optional>
#include <vector>

#include "pathhom/chains.hpp"
#include "pathhom/extensions.hpp"

namespace pathhom {

// A chain together with the complete structure it extends: the structure's
// vertex chains are signed members of the next basis down, and the chain
// equals the extension of their sum by extension_vertex. Dimension-0
// elements carry an empty structure.
struct InductiveElement {
  Chain chain;
  Direction direction = Direction::Upper;
  Vertex extension_vertex = 0;
  FaceMultihypergraph structure;
  // true when the closure scan finished without finding a disconnected
  // member; nullopt when the scan hit its node budget
  std::optional<bool> strongly_connected;
};

struct BlockCertificate {
  Vertex tail = 0, head = 0;
  size_t basis_rank = 0;      // block dimension in the reference basis
  size_t generator_rank = 0;  // rank of the produced elements in the block
  bool lattice_match = false; // fields: rank equality; integers: equal Hermite forms
};

struct GeneratingSet {
  int dimension = 0;
  Ring ring;
  Direction direction = Direction::Upper;
  std::vector<InductiveElement> elements;
  bool spans = false;
  std::vector<BlockCertificate> certificate;
};

// Decompose a connected basis chain into extension pieces: express each
// nonzero endpoint face of x in basis_nm1 and expand the integer (or
// symmetric mod-p) coefficients into signed copies; decompose each copy's
// own faces at cover-needing anchors in basis_nm2; pair opposite faces
// into edges and p-fold same-face residues into hyperedges; finally split
// into connected components, refined by searching each component's
// mutation closure for a disconnected representative to split further.
// The pieces' chains sum to x. Bases must be over Z or Z/p.
std::vector<InductiveElement> inductive_structure(const Chain& x, const Digraph& g,
                                                  const OmegaBasis& basis_nm1,
                                                  const OmegaBasis* basis_nm2, Direction dir,
                                                  size_t mutation_cap = 1000000);

// Run inductive_structure over every chain of the dimension-n basis and
// certify that the produced elements span: by rank per endpoint block over
// fields, by Hermite-form lattice equality over the integers. Over the
// rationals the extraction itself runs over Z and the certificate over Q.
GeneratingSet inductive_generators(const Digraph& g, int n, const Ring& ring,
                                   Direction dir = Direction::Upper,
                                   size_t mutation_cap = 1000000);

}  // namespace pathhom
