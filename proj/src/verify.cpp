#include "pathhom/verify.hpp"

#include <map>
#include <sstream>

#include "pathhom/errors.hpp"
#include "pathhom/homology.hpp"
#include "pathhom/inductive.hpp"

namespace pathhom {

namespace {

// collects mismatch descriptions; a criterion passes when none accrue
struct Checker {
  size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  std::string summary() const {
    if (failures.empty()) {
      std::ostringstream os;
      os << "all " << checks << " checks hold";
      return os.str();
    }
    std::ostringstream os;
    os << failures.size() << "/" << checks << " checks failed; first: " << failures.front();
    return os.str();
  }
};

VerifyRow finish(int id, std::string name, std::string expected, const Checker& ck) {
  return {id, std::move(name), std::move(expected), ck.summary(), ck.failures.empty()};
}

VerifyRow failed(int id, std::string name, std::string expected, const std::string& err) {
  return {id, std::move(name), std::move(expected), "exception: " + err, false};
}

std::vector<Ring> four_rings() {
  return {Ring::rationals(), Ring::integers(), Ring::mod(2), Ring::mod(3)};
}

Digraph seeded_random(const VerifyOptions& opt, uint64_t salt, size_t index) {
  const size_t n = 3 + index % 6;  // 3..8 vertices
  return random_digraph(n, Rat(2, 5), opt.seed ^ (salt + 0x9e3779b97f4a7c15ULL * index));
}

// the 5-vertex digraph with three parallel 2-paths from u to w
Digraph three_lane_digraph() {
  Digraph g;
  g.add_edge("u", "v_1");
  g.add_edge("u", "v_2");
  g.add_edge("u", "v_3");
  g.add_edge("v_1", "w");
  g.add_edge("v_2", "w");
  g.add_edge("v_3", "w");
  return g;
}

std::string ctx(const std::string& label, const Ring& ring) {
  return label + " ring=" + ring.name();
}

// --- criteria -------------------------------------------------------------

VerifyRow low_dimension_bases(const VerifyOptions& opt) {
  const std::string name = "low-dimension-bases";
  const std::string expected = "dim in degree 0 = |V| and degree 1 = |E| on 20 random digraphs x 4 rings";
  try {
    Checker ck;
    for (size_t k = 0; k < 20; ++k) {
      const Digraph g = seeded_random(opt, 0x100, k);
      for (const Ring& ring : four_rings()) {
        std::ostringstream c;
        c << "digraph#" << k << " ring=" << ring.name();
        ck.expect(omega_basis(g, 0, ring).total_dim() == g.vertex_count(), c.str() + " deg0");
        ck.expect(omega_basis(g, 1, ring).total_dim() == g.edge_count(), c.str() + " deg1");
      }
    }
    return finish(1, name, expected, ck);
  } catch (const std::exception& e) {
    return failed(1, name, expected, e.what());
  }
}

VerifyRow trapezohedron_rank(const VerifyOptions&) {
  const std::string name = "trapezohedron-rank";
  const std::string expected = "dim in degree 3 = 1 and H_1..H_4 = 0 for t=2..5 x 4 rings";
  try {
    Checker ck;
    for (int t = 2; t <= 5; ++t) {
      const Digraph g = gen_family("trapezohedron", t);
      for (const Ring& ring : four_rings()) {
        const HomologyReport rep = homology_report(g, 4, ring);
        std::ostringstream c;
        c << "t=" << t << " ring=" << ring.name();
        ck.expect(rep.omega_dims[3] == 1, c.str() + " deg3 dim");
        for (int n = 1; n <= 4; ++n) {
          ck.expect(rep.betti[n] == 0, c.str() + " betti" + std::to_string(n));
          if (ring.kind == RingKind::Integers)
            ck.expect(rep.torsion[n].empty(), c.str() + " torsion" + std::to_string(n));
        }
      }
    }
    return finish(2, name, expected, ck);
  } catch (const std::exception& e) {
    return failed(2, name, expected, e.what());
  }
}

VerifyRow multisquare_chain_basis(const VerifyOptions&) {
  const std::string name = "multisquare-chain-basis";
  const std::string expected = "top-degree dim = 2 for t=3..5 over q and zp:2";
  try {
    Checker ck;
    for (int t = 3; t <= 5; ++t) {
      const Digraph g = gen_family("multisquare-chain", t);
      for (const Ring& ring : {Ring::rationals(), Ring::mod(2)}) {
        std::ostringstream c;
        c << "t=" << t << " ring=" << ring.name();
        ck.expect(omega_basis(g, t, ring).total_dim() == 2, c.str());
      }
    }
    return finish(3, name, expected, ck);
  } catch (const std::exception& e) {
    return failed(3, name, expected, e.what());
  }
}

VerifyRow three_lane_dimension(const VerifyOptions&) {
  const std::string name = "three-lane-degree-2";
  const std::string expected = "dim in degree 2 = 2 over zp:3 and q";
  try {
    Checker ck;
    const Digraph g = three_lane_digraph();
    for (const Ring& ring : {Ring::mod(3), Ring::rationals()})
      ck.expect(omega_basis(g, 2, ring).total_dim() == 2, ctx("three-lane", ring));
    return finish(4, name, expected, ck);
  } catch (const std::exception& e) {
    return failed(4, name, expected, e.what());
  }
}

VerifyRow kernel_characterization(const VerifyOptions& opt) {
  const std::string name = "kernel-characterization";
  const std::string expected =
      "every basis chain killed by each single diagonal component, degrees <= 4, 20 digraphs x 4 rings";
  try {
    Checker ck;
    for (size_t k = 0; k < 20; ++k) {
      const Digraph g = seeded_random(opt, 0x200, k);
      const DistanceMatrix dist(g);
      for (const Ring& ring : four_rings()) {
        for (int n = 1; n <= 4; ++n) {
          const OmegaBasis basis = omega_basis(g, n, ring);
          for (const Chain* c : basis.flatten())
            for (int i = 1; i <= n - 1; ++i) {
              std::ostringstream msg;
              msg << "digraph#" << k << " ring=" << ring.name() << " n=" << n << " i=" << i;
              ck.expect(magnitude_partial(*c, i, dist, ring).is_zero(), msg.str());
            }
          if (n == 1) ck.expect(basis.total_dim() == g.edge_count(), "edge count");
        }
      }
    }
    return finish(5, name, expected, ck);
  } catch (const std::exception& e) {
    return failed(5, name, expected, e.what());
  }
}

VerifyRow extension_membership(const VerifyOptions& opt) {
  const std::string name = "extension-membership";
  const std::string expected =
      "every extracted structure is complete and extends to a boundary-stable chain";
  try {
    Checker ck;
    size_t structures = 0;
    const std::vector<Ring> rings = {Ring::integers(), Ring::mod(2), Ring::mod(3)};
    for (size_t k = 0; k < 8; ++k) {
      const Digraph g = seeded_random(opt, 0x300, k);
      const DistanceMatrix dist(g);
      for (const Ring& ring : rings) {
        std::vector<OmegaBasis> bases;
        for (int d = 0; d <= 3; ++d) bases.push_back(omega_basis(g, d, ring));
        for (int n = 1; n <= 3; ++n) {
          for (const Chain* x : bases[n].flatten()) {
            const auto pieces = inductive_structure(
                *x, g, bases[n - 1], n >= 2 ? &bases[n - 2] : nullptr, Direction::Upper,
                opt.mutation_cap);
            Chain sum(n);
            for (const InductiveElement& el : pieces) {
              ++structures;
              std::ostringstream msg;
              msg << "digraph#" << k << " ring=" << ring.name() << " n=" << n;
              ck.expect(el.structure.vertices.empty() ||
                            is_complete(el.structure, el.extension_vertex, g),
                        msg.str() + " complete");
              ck.expect(in_omega(el.chain, g, dist, ring), msg.str() + " member");
              sum = sum.plus(el.chain, ring);
            }
            ck.expect(sum == *x, "pieces sum to the chain");
          }
        }
      }
    }
    // deterministic mod-3 instance whose extraction needs a size-3 hyperedge
    {
      const Digraph g = three_lane_digraph();
      const Ring z3 = Ring::mod(3);
      const DistanceMatrix dist(g);
      const OmegaBasis b0 = omega_basis(g, 0, z3);
      const OmegaBasis b1 = omega_basis(g, 1, z3);
      Chain x(2);
      for (const std::string& mid : {"v_1", "v_2", "v_3"})
        x.add_term({g.vertex("u"), g.vertex(mid), g.vertex("w")}, Scalar(1), z3);
      ck.expect(in_omega(x, g, dist, z3), "three-lane sum is boundary stable mod 3");
      const auto pieces = inductive_structure(x, g, b1, &b0, Direction::Upper, opt.mutation_cap);
      ck.expect(pieces.size() == 1, "three-lane sum extracts to one piece");
      bool has_triple = false;
      for (const InductiveElement& el : pieces)
        for (const Hyperedge& he : el.structure.hyperedges)
          if (he.slots.size() == 3) has_triple = true;
      ck.expect(has_triple, "three-lane extraction produced a size-3 hyperedge");
      structures += pieces.size();
    }
    std::ostringstream extra;
    extra << "all checks hold over " << structures << " structures";
    VerifyRow row = finish(6, name, expected, ck);
    if (row.pass) row.actual = extra.str();
    return row;
  } catch (const std::exception& e) {
    return failed(6, name, expected, e.what());
  }
}

VerifyRow inductive_span_modp(const VerifyOptions& opt) {
  const std::string name = "inductive-span-mod-p";
  const std::string expected = "generators reach full rank for degrees <= 4 over zp:2, zp:3, 10 digraphs";
  try {
    Checker ck;
    for (size_t k = 0; k < 10; ++k) {
      const Digraph g = seeded_random(opt, 0x400, k);
      for (const Ring& ring : {Ring::mod(2), Ring::mod(3)})
        for (int n = 0; n <= 4; ++n) {
          const GeneratingSet gen = inductive_generators(g, n, ring, Direction::Upper,
                                                         opt.mutation_cap);
          std::ostringstream msg;
          msg << "digraph#" << k << " ring=" << ring.name() << " n=" << n;
          ck.expect(gen.spans, msg.str());
        }
    }
    return finish(7, name, expected, ck);
  } catch (const std::exception& e) {
    return failed(7, name, expected, e.what());
  }
}

VerifyRow inductive_span_integral(const VerifyOptions& opt) {
  const std::string name = "inductive-span-integral";
  const std::string expected = "generator lattices match the degree-3 basis lattices over z, 10 digraphs";
  try {
    Checker ck;
    for (size_t k = 0; k < 10; ++k) {
      const Digraph g = seeded_random(opt, 0x500, k);
      const GeneratingSet gen =
          inductive_generators(g, 3, Ring::integers(), Direction::Upper, opt.mutation_cap);
      std::ostringstream msg;
      msg << "digraph#" << k;
      ck.expect(gen.spans, msg.str() + " spans");
      for (const BlockCertificate& c : gen.certificate)
        ck.expect(c.lattice_match, msg.str() + " lattice match");
    }
    return finish(8, name, expected, ck);
  } catch (const std::exception& e) {
    return failed(8, name, expected, e.what());
  }
}

VerifyRow multiplicity_entry(const VerifyOptions&) {
  const std::string name = "multiplicity-entry";
  const std::string expected =
      "dim degree 4 = 1, degree 5 empty, and the degree-4 boundary has an entry of size t (t=2,3)";
  try {
    Checker ck;
    for (int t = 2; t <= 3; ++t) {
      const Digraph g = gen_family("multiplicity", t);
      const HomologyReport rep = homology_report(g, 5, Ring::integers());
      std::ostringstream c;
      c << "t=" << t;
      ck.expect(rep.omega_dims[4] == 1, c.str() + " deg4 dim");
      ck.expect(rep.omega_dims[5] == 0, c.str() + " deg5 dim");
      bool found = false;
      const ExactMatrix& d4 = rep.boundaries[4];
      for (size_t r = 0; r < d4.rows(); ++r)
        for (const auto& [cc, v] : d4.row(r))
          if (boost::multiprecision::abs(boost::multiprecision::numerator(v)) == t) found = true;
      ck.expect(found, c.str() + " boundary entry of absolute value t");
    }
    return finish(9, name, expected, ck);
  } catch (const std::exception& e) {
    return failed(9, name, expected, e.what());
  }
}

// homology caches shared by the last two criteria
using EulerCache = std::map<std::pair<int, std::string>, HomologyReport>;

const HomologyReport& euler_report(EulerCache& cache, int t, const Ring& ring) {
  const auto key = std::make_pair(t, ring.name());
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, homology_report(gen_family("euler", t), 5, ring)).first;
  return it->second;
}

VerifyRow euler_separation(const VerifyOptions&, EulerCache& cache) {
  const std::string name = "euler-separation";
  const std::string expected =
      "deg-4 dim 1 exactly at p | t, deg-3 dim 5t-2, and chi shifted by 1 at p | t (t=2,3,4,6)";
  try {
    Checker ck;
    const std::vector<Ring> fields = {Ring::rationals(), Ring::mod(2), Ring::mod(3), Ring::mod(5)};
    for (int t : {2, 3, 4, 6}) {
      const HomologyReport& base = euler_report(cache, t, Ring::rationals());
      for (const Ring& ring : fields) {
        const HomologyReport& rep = euler_report(cache, t, ring);
        std::ostringstream c;
        c << "t=" << t << " ring=" << ring.name();
        const bool divides = ring.kind == RingKind::ModP && t % ring.p == 0;
        ck.expect(rep.omega_dims[4] == (divides ? 1u : 0u), c.str() + " deg4 dim");
        ck.expect(rep.omega_dims[3] == size_t(5 * t - 2), c.str() + " deg3 dim");
        ck.expect(rep.euler.has_value(), c.str() + " euler available");
        if (rep.euler && base.euler)
          ck.expect(*rep.euler - *base.euler == (divides ? 1 : 0), c.str() + " chi shift");
      }
    }
    return finish(10, name, expected, ck);
  } catch (const std::exception& e) {
    return failed(10, name, expected, e.what());
  }
}

VerifyRow degree2_classification(const VerifyOptions& opt) {
  const std::string name = "degree-2-classification";
  const std::string expected =
      "degree-2 generators lie in and span the span of double edges, triangles and squares";
  try {
    Checker ck;
    for (size_t k = 0; k < 10; ++k) {
      const Digraph g = seeded_random(opt, 0x600, k);
      for (const Ring& ring : {Ring::rationals(), Ring::mod(3)}) {
        // enumerate the three degree-2 shapes
        std::vector<Chain> shapes;
        for (Vertex u = 0; u < g.vertex_count(); ++u)
          for (Vertex v : g.out(u))
            if (g.has_edge(v, u)) shapes.push_back(Chain::unit({u, v, u}));
        for (Vertex u = 0; u < g.vertex_count(); ++u)
          for (Vertex v : g.out(u))
            for (Vertex w : g.out(v)) {
              if (w == u || !g.has_edge(u, w)) continue;
              shapes.push_back(Chain::unit({u, v, w}));
            }
        for (Vertex u = 0; u < g.vertex_count(); ++u)
          for (Vertex w = 0; w < g.vertex_count(); ++w) {
            if (u == w || g.has_edge(u, w)) continue;
            std::vector<Vertex> mids;
            for (Vertex v : g.out(u))
              if (g.has_edge(v, w) && v != u && v != w) mids.push_back(v);
            for (size_t a = 0; a < mids.size(); ++a)
              for (size_t b = a + 1; b < mids.size(); ++b) {
                Chain s = Chain::unit({u, mids[a], w});
                s.add_term({u, mids[b], w}, Scalar(-1), ring);
                shapes.push_back(std::move(s));
              }
          }

        const GeneratingSet gen =
            inductive_generators(g, 2, ring, Direction::Upper, opt.mutation_cap);
        std::ostringstream c;
        c << "digraph#" << k << " ring=" << ring.name();
        const size_t dim = omega_basis(g, 2, ring).total_dim();

        std::map<Path, size_t> row_of;
        for (const Chain& s : shapes)
          for (const auto& [p, v] : s.terms()) row_of.emplace(p, 0);
        for (const InductiveElement& el : gen.elements)
          for (const auto& [p, v] : el.chain.terms()) row_of.emplace(p, 0);
        size_t next = 0;
        for (auto& [p, id] : row_of) id = next++;

        const Ring field = ring;
        auto to_matrix = [&](const std::vector<const Chain*>& list) {
          ExactMatrix m(row_of.size(), list.size());
          for (size_t j = 0; j < list.size(); ++j)
            for (const auto& [p, v] : list[j]->terms()) m.set(row_of.at(p), j, v, field);
          return m;
        };
        std::vector<const Chain*> shape_ptrs;
        for (const Chain& s : shapes) shape_ptrs.push_back(&s);
        const size_t shape_rank = rank(to_matrix(shape_ptrs), field);
        ck.expect(shape_rank == dim, c.str() + " shapes span");

        std::vector<const Chain*> gen_ptrs;
        for (const InductiveElement& el : gen.elements) gen_ptrs.push_back(&el.chain);
        ck.expect(rank(to_matrix(gen_ptrs), field) == dim, c.str() + " generators span");

        for (const InductiveElement& el : gen.elements) {
          std::vector<const Chain*> aug = shape_ptrs;
          aug.push_back(&el.chain);
          ck.expect(rank(to_matrix(aug), field) == shape_rank, c.str() + " generator in shape span");
        }
      }
    }
    return finish(11, name, expected, ck);
  } catch (const std::exception& e) {
    return failed(11, name, expected, e.what());
  }
}

VerifyRow boundary_squares_to_zero(const VerifyOptions&, EulerCache& cache) {
  const std::string name = "boundary-square-and-field-independence";
  const std::string expected =
      "d² = 0 on the euler family (t=2,3, 4 rings) and dims agree across fields off degree 4";
  try {
    Checker ck;
    for (int t = 2; t <= 3; ++t) {
      for (const Ring& ring : four_rings()) {
        const HomologyReport rep = ring.kind == RingKind::Integers
                                       ? homology_report(gen_family("euler", t), 5, ring)
                                       : euler_report(cache, t, ring);
        for (int n = 1; n + 1 <= rep.max_dim; ++n) {
          std::ostringstream c;
          c << "t=" << t << " ring=" << ring.name() << " n=" << n;
          ck.expect(rep.boundaries[n].times(rep.boundaries[n + 1], ring).is_zero(),
                    c.str() + " d" + std::to_string(n) + "*d" + std::to_string(n + 1));
        }
      }
    }
    const std::vector<Ring> fields = {Ring::rationals(), Ring::mod(2), Ring::mod(3), Ring::mod(5)};
    for (int t : {2, 3, 4, 6}) {
      const HomologyReport& base = euler_report(cache, t, Ring::rationals());
      for (const Ring& ring : fields) {
        const HomologyReport& rep = euler_report(cache, t, ring);
        for (int n = 0; n <= 5; ++n) {
          if (n == 4) continue;
          std::ostringstream c;
          c << "t=" << t << " ring=" << ring.name() << " n=" << n;
          ck.expect(rep.omega_dims[n] == base.omega_dims[n], c.str() + " dim agrees");
        }
      }
    }
    return finish(12, name, expected, ck);
  } catch (const std::exception& e) {
    return failed(12, name, expected, e.what());
  }
}

}  // namespace

std::vector<VerifyRow> run_verification(const VerifyOptions& opt) {
  std::vector<VerifyRow> rows;
  EulerCache cache;
  rows.push_back(low_dimension_bases(opt));
  rows.push_back(trapezohedron_rank(opt));
  rows.push_back(multisquare_chain_basis(opt));
  rows.push_back(three_lane_dimension(opt));
  rows.push_back(kernel_characterization(opt));
  rows.push_back(extension_membership(opt));
  rows.push_back(inductive_span_modp(opt));
  rows.push_back(inductive_span_integral(opt));
  rows.push_back(multiplicity_entry(opt));
  rows.push_back(euler_separation(opt, cache));
  rows.push_back(degree2_classification(opt));
  rows.push_back(boundary_squares_to_zero(opt, cache));
  return rows;
}

}  // namespace pathhom
