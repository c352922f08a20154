#pragma once

#include <json.hpp>

#include "pathhom/homology.hpp"
#include "pathhom/inductive.hpp"

namespace pathhom {

// All emitters produce key-sorted JSON with scalar coefficients rendered
// as exact decimal/fraction strings, so equal inputs give byte-identical
// output.
nlohmann::json digraph_to_json(const Digraph& g);
nlohmann::json chain_to_json(const Chain& c, const Digraph& g);
nlohmann::json structure_to_json(const FaceMultihypergraph& f, const Digraph& g);
nlohmann::json generators_to_json(const GeneratingSet& gen, const Digraph& g);

// Top-level result object: digraph, ring, max_dim, truncated, omega_dims,
// betti, torsion (integers, else null), euler (fields and untruncated,
// else null), plus optional generators.
nlohmann::json report_to_json(const Digraph& g, const HomologyReport& rep,
                              const GeneratingSet* gen = nullptr);

std::string report_to_csv(const HomologyReport& rep);

}  // namespace pathhom
