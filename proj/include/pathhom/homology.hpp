#pragma once

#include <optional>
#include <vector>

#include "pathhom/chains.hpp"

namespace pathhom {

// Matrix of the boundary map between two consecutive bases, columns over
// basis_n, rows over basis_nm1, both in flattened block order.
ExactMatrix boundary_matrix(const Digraph& g, const OmegaBasis& basis_n,
                            const OmegaBasis& basis_nm1, const Ring& ring);

// Homology of the boundary-stable chain complex up to dimension max_dim.
// betti_n = dim_n - rank d_n - rank d_{n+1}; over the integers the betti
// numbers are Q-ranks and torsion_n lists the invariant factors > 1 of
// d_{n+1}. The Euler characteristic is reported for fields when nothing
// was cut off by the cap.
struct HomologyReport {
  Ring ring;
  int max_dim = 0;
  bool truncated = false;
  std::vector<size_t> omega_dims;              // 0..max_dim
  std::vector<long long> betti;                // 0..max_dim
  std::vector<std::vector<Int>> torsion;       // 0..max_dim, integers only
  std::optional<long long> euler;
  std::vector<OmegaBasis> bases;               // 0..max_dim (basis manifests)
  std::vector<ExactMatrix> boundaries;         // boundaries[n] = d_n, n >= 1
};

// max_dim defaults to the longest path length; a digraph with a directed
// cycle has no default and requires an explicit cap (the report is then
// marked truncated). When the cap cuts below the longest path length, one
// extra basis is computed internally so betti at the cap stays correct.
HomologyReport homology_report(const Digraph& g, std::optional<int> max_dim, const Ring& ring);

}  // namespace pathhom
