#include "pathhom/json_io.hpp"

#include <sstream>

namespace pathhom {

using nlohmann::json;

json digraph_to_json(const Digraph& g) {
  json vertices = json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.name(v));
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  return json{{"vertices", vertices}, {"edges", edges}};
}

json chain_to_json(const Chain& c, const Digraph& g) {
  json terms = json::array();
  for (const auto& [p, s] : c.terms()) {
    json path = json::array();
    for (Vertex v : p) path.push_back(g.name(v));
    terms.push_back({std::move(path), s.str()});
  }
  return terms;
}

json structure_to_json(const FaceMultihypergraph& f, const Digraph& g) {
  json vertices = json::array();
  for (const Chain& x : f.vertices) {
    int sign = 1;
    const Chain norm = sign_normalized(x, f.ring, &sign);
    vertices.push_back({{"chain", chain_to_json(norm, g)}, {"sign", sign}});
  }
  json decomps = json::array();
  for (const auto& [key, list] : f.decomps) {
    json faces = json::array();
    for (const Chain& c : list) faces.push_back(chain_to_json(c, g));
    decomps.push_back(
        {{"vertex", key.first}, {"anchor", g.name(key.second)}, {"faces", std::move(faces)}});
  }
  json hyperedges = json::array();
  for (const Hyperedge& he : f.hyperedges) {
    json slots = json::array();
    for (const FaceSlot& s : he.slots) slots.push_back({s.vertex, s.k});
    hyperedges.push_back({{"anchor", g.name(he.anchor)}, {"slots", std::move(slots)}});
  }
  return json{{"direction", f.direction == Direction::Upper ? "upper" : "lower"},
              {"vertices", std::move(vertices)},
              {"decompositions", std::move(decomps)},
              {"hyperedges", std::move(hyperedges)}};
}

json generators_to_json(const GeneratingSet& gen, const Digraph& g) {
  json elements = json::array();
  for (const InductiveElement& el : gen.elements) {
    json e{{"chain", chain_to_json(el.chain, g)},
           {"extension_vertex", g.name(el.extension_vertex)},
           {"strongly_connected",
            el.strongly_connected ? json(*el.strongly_connected) : json(nullptr)}};
    if (el.structure.vertices.empty())
      e["structure"] = nullptr;
    else
      e["structure"] = structure_to_json(el.structure, g);
    elements.push_back(std::move(e));
  }
  json certificate = json::array();
  for (const BlockCertificate& c : gen.certificate)
    certificate.push_back({{"tail", g.name(c.tail)},
                           {"head", g.name(c.head)},
                           {"basis_rank", c.basis_rank},
                           {"generator_rank", c.generator_rank},
                           {"lattice_match", c.lattice_match}});
  return json{{"dimension", gen.dimension},
              {"direction", gen.direction == Direction::Upper ? "upper" : "lower"},
              {"elements", std::move(elements)},
              {"certificate", std::move(certificate)},
              {"spans", gen.spans}};
}

json report_to_json(const Digraph& g, const HomologyReport& rep, const GeneratingSet* gen) {
  json out;
  out["digraph"] = digraph_to_json(g);
  out["ring"] = rep.ring.name();
  out["max_dim"] = rep.max_dim;
  out["truncated"] = rep.truncated;
  out["omega_dims"] = rep.omega_dims;
  out["betti"] = rep.betti;
  if (rep.ring.kind == RingKind::Integers) {
    json tor = json::array();
    for (const auto& factors : rep.torsion) {
      json row = json::array();
      for (const Int& d : factors) row.push_back(d.str());
      tor.push_back(std::move(row));
    }
    out["torsion"] = std::move(tor);
  } else {
    out["torsion"] = nullptr;
  }
  out["euler"] = rep.euler ? json(*rep.euler) : json(nullptr);
  if (gen) out["generators"] = generators_to_json(*gen, g);
  return out;
}

std::string report_to_csv(const HomologyReport& rep) {
  std::ostringstream os;
  os << "dimension,omega_dim,betti\n";
  for (size_t n = 0; n < rep.omega_dims.size(); ++n)
    os << n << "," << rep.omega_dims[n] << "," << rep.betti[n] << "\n";
  return os.str();
}

}  // namespace pathhom
