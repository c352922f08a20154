#include "pathhom/homology.hpp"

#include "pathhom/errors.hpp"

namespace pathhom {

ExactMatrix boundary_matrix(const Digraph& g, const OmegaBasis& basis_n,
                            const OmegaBasis& basis_nm1, const Ring& ring) {
  const std::vector<const Chain*> cols = basis_n.flatten();
  ExactMatrix m(basis_nm1.total_dim(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    const Chain b = path_boundary(*cols[j], g, ring);
    if (b.is_zero()) continue;
    const std::vector<Scalar> coords = express_chain(b, basis_nm1, ring);
    for (size_t r = 0; r < coords.size(); ++r)
      if (coords[r] != 0) m.set(r, j, coords[r], ring);
  }
  return m;
}

HomologyReport homology_report(const Digraph& g, std::optional<int> max_dim, const Ring& ring) {
  const std::optional<size_t> longest = longest_path_length(g);
  int cap;
  if (max_dim) {
    if (*max_dim < 0) throw validation_error("dimension cap must be nonnegative");
    cap = *max_dim;
  } else if (longest) {
    cap = static_cast<int>(*longest);
  } else {
    throw validation_error("digraph has a directed cycle; an explicit dimension cap is required");
  }

  HomologyReport rep;
  rep.ring = ring;
  rep.max_dim = cap;
  rep.truncated = !longest || cap < static_cast<int>(*longest);

  for (int n = 0; n <= cap; ++n) rep.bases.push_back(omega_basis(g, n, ring));
  for (const OmegaBasis& b : rep.bases) rep.omega_dims.push_back(b.total_dim());

  rep.boundaries.resize(cap + 1);  // slot 0 unused; boundaries[n] = d_n
  for (int n = 1; n <= cap; ++n)
    rep.boundaries[n] = boundary_matrix(g, rep.bases[n], rep.bases[n - 1], ring);

  // one dimension beyond the cap feeds rank d_{cap+1} (and its torsion);
  // without truncation that module is zero and the extra work is skipped
  ExactMatrix beyond;
  if (rep.truncated) {
    const OmegaBasis basis_above = omega_basis(g, cap + 1, ring);
    beyond = boundary_matrix(g, basis_above, rep.bases[cap], ring);
  }

  std::vector<size_t> ranks(cap + 2, 0);
  for (int n = 1; n <= cap; ++n) ranks[n] = rank(rep.boundaries[n], ring);
  ranks[cap + 1] = rep.truncated ? rank(beyond, ring) : 0;

  for (int n = 0; n <= cap; ++n)
    rep.betti.push_back(static_cast<long long>(rep.omega_dims[n]) -
                        static_cast<long long>(ranks[n]) -
                        static_cast<long long>(ranks[n + 1]));

  if (ring.kind == RingKind::Integers) {
    rep.torsion.resize(cap + 1);
    for (int n = 0; n <= cap; ++n) {
      const ExactMatrix* next = nullptr;
      if (n < cap)
        next = &rep.boundaries[n + 1];
      else if (rep.truncated)
        next = &beyond;
      if (!next) continue;  // d_{cap+1} = 0, no torsion at the cap
      for (const Int& d : smith_normal_form(*next))
        if (d > 1) rep.torsion[n].push_back(d);
    }
  }

  if (ring.is_field() && !rep.truncated) {
    long long chi = 0;
    for (int n = 0; n <= cap; ++n)
      chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(rep.omega_dims[n]);
    rep.euler = chi;
  }
  return rep;
}

}  // namespace pathhom
