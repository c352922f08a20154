#include "pathhom/inductive.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "pathhom/errors.hpp"

namespace pathhom {

namespace {

Chain face_in_direction(const Chain& x, Vertex v, Direction dir, const Ring& ring) {
  return dir == Direction::Upper ? face_head(x, v, ring) : face_tail(x, v, ring);
}

// The endpoint block a face of x at vertex v decomposes in: truncating at
// the head moves the head to v, truncating at the tail moves the tail.
std::pair<Vertex, Vertex> face_block(const Chain& x, Vertex v, Direction dir) {
  return dir == Direction::Upper ? std::make_pair(tail_vertex(x), v)
                                 : std::make_pair(v, head_vertex(x));
}

// Signed copies of basis elements realizing the face, smallest-lift
// multiplicities: coefficient k contributes |k| copies of sign(k) * b.
std::vector<Chain> expand_in_basis(const Chain& face, const std::vector<Chain>& block,
                                   const Ring& ring) {
  const std::vector<Scalar> coords = express_in_chain_basis(face, block, ring);
  std::vector<Chain> copies;
  for (size_t j = 0; j < block.size(); ++j) {
    const Int k = ring.smallest_lift(coords[j]);
    if (k == 0) continue;
    const Chain signed_b = k > 0 ? block[j] : block[j].negated(ring);
    const Int count = abs(k);
    for (Int c = 0; c < count; ++c) copies.push_back(signed_b);
  }
  return copies;
}

}  // namespace

std::vector<InductiveElement> inductive_structure(const Chain& x, const Digraph& g,
                                                  const OmegaBasis& basis_nm1,
                                                  const OmegaBasis* basis_nm2, Direction dir,
                                                  size_t mutation_cap) {
  const Ring ring = basis_nm1.ring;
  if (ring.kind == RingKind::Rationals)
    throw contract_error("structure extraction needs integer or mod-p bases");
  if (x.is_zero() || !is_connected(x)) throw contract_error("extraction needs a connected chain");
  const int n = x.dim();
  if (basis_nm1.dim != n - 1) throw contract_error("basis dimension mismatch");
  const Vertex v_ext = dir == Direction::Upper ? head_vertex(x) : tail_vertex(x);

  FaceMultihypergraph f;
  f.direction = dir;
  f.dim = n - 1;
  f.ring = ring;

  // (a, b) vertex chains: signed basis copies of each nonzero face of x
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Chain face = face_in_direction(x, v, dir, ring);
    if (face.is_zero()) continue;
    const auto key = face_block(x, v, dir);
    const std::vector<Chain>* block = basis_nm1.block(key.first, key.second);
    if (!block) throw not_in_span_error("face outside the reference basis");
    for (Chain& copy : expand_in_basis(face, *block, ring))
      f.vertices.push_back(std::move(copy));
  }

  // (c) per-vertex face decompositions: trivial at anchors adjacent to the
  // extension vertex, refined through basis_nm2 at cover-needing anchors
  for (size_t i = 0; i < f.vertices.size(); ++i) {
    const Chain& xi = f.vertices[i];
    if (xi.dim() < 1) continue;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      const Chain face = face_in_direction(xi, u, dir, ring);
      if (face.is_zero()) continue;
      if (!anchor_needs_cover(dir, g, u, v_ext)) {
        f.decomps[{i, u}] = {face};
        continue;
      }
      if (!basis_nm2) throw contract_error("missing second basis for a cover-needing anchor");
      const auto key = face_block(xi, u, dir);
      const std::vector<Chain>* block = basis_nm2->block(key.first, key.second);
      if (!block) throw not_in_span_error("face outside the reference basis");
      f.decomps[{i, u}] = expand_in_basis(face, *block, ring);
    }
  }

  // (d) pairing at each cover-needing anchor: sort slots by face value,
  // match opposite faces front-to-front into edges, then group the
  // leftover equal-face slots into hyperedges of size p
  {
    std::map<Vertex, std::map<std::string, std::vector<FaceSlot>>> by_anchor;
    std::map<std::pair<Vertex, std::string>, Chain> face_by_key;
    for (const auto& [key, list] : f.decomps) {
      const auto& [i, u] = key;
      if (!anchor_needs_cover(dir, g, u, v_ext)) continue;
      for (size_t k = 0; k < list.size(); ++k) {
        by_anchor[u][list[k].key()].push_back({i, k});
        face_by_key.try_emplace({u, list[k].key()}, list[k]);
      }
    }
    for (auto& [u, groups] : by_anchor) {
      std::vector<std::string> keys;
      keys.reserve(groups.size());
      for (const auto& [fk, slots] : groups) keys.push_back(fk);
      for (const std::string& fk : keys) {
        const Chain& face = face_by_key.at({u, fk});
        const std::string nk = face.negated(ring).key();
        if (nk < fk) continue;  // handled from the other side
        std::vector<FaceSlot>& plus = groups[fk];
        if (nk == fk) {
          // self-opposite faces (2-torsion): consecutive pairs are edges
          if (plus.size() % 2 != 0)
            throw contract_error("self-opposite faces failed to pair off");
          for (size_t j = 0; j + 1 < plus.size(); j += 2)
            f.hyperedges.push_back({u, {plus[j], plus[j + 1]}});
          continue;
        }
        std::vector<FaceSlot> minus =
            groups.count(nk) ? groups[nk] : std::vector<FaceSlot>{};
        size_t j = 0;
        for (; j < plus.size() && j < minus.size(); ++j) {
          Hyperedge e{u, {plus[j], minus[j]}};
          std::sort(e.slots.begin(), e.slots.end());
          f.hyperedges.push_back(std::move(e));
        }
        std::vector<FaceSlot>& rest = plus.size() > minus.size() ? plus : minus;
        const size_t leftover = rest.size() - j;
        if (leftover == 0) continue;
        if (ring.kind != RingKind::ModP || leftover % size_t(ring.p) != 0)
          throw contract_error("face pairing failed to exhaust at an anchor");
        for (size_t s = j; s < rest.size(); s += size_t(ring.p)) {
          Hyperedge he{u, {}};
          for (size_t l = 0; l < size_t(ring.p); ++l) he.slots.push_back(rest[s + l]);
          std::sort(he.slots.begin(), he.slots.end());
          f.hyperedges.push_back(std::move(he));
        }
      }
    }
    std::sort(f.hyperedges.begin(), f.hyperedges.end());
  }

  // (e) split into components; for each piece, search its mutation closure
  // for a disconnected representative and split there, to a fixpoint
  std::deque<FaceMultihypergraph> work;
  for (FaceMultihypergraph& piece : connected_components(f)) work.push_back(std::move(piece));
  std::vector<InductiveElement> out;
  Chain total(n);
  while (!work.empty()) {
    FaceMultihypergraph piece = std::move(work.front());
    work.pop_front();
    std::optional<bool> sc;
    try {
      std::optional<FaceMultihypergraph> witness =
          find_disconnected_in_closure(piece, mutation_cap);
      if (witness) {
        for (FaceMultihypergraph& part : connected_components(*witness))
          work.push_back(std::move(part));
        continue;
      }
      sc = true;
    } catch (const resource_limit_error&) {
      sc = std::nullopt;  // undetermined; keep the piece as-is
    }
    InductiveElement el;
    el.direction = dir;
    el.extension_vertex = v_ext;
    el.chain = extend_over(piece, v_ext, g);
    el.structure = std::move(piece);
    el.strongly_connected = sc;
    total = total.plus(el.chain, ring);
    out.push_back(std::move(el));
  }
  if (!(total == x)) throw contract_error("extraction pieces do not sum back to the chain");
  return out;
}

namespace {

// Canonical Hermite form of the lattice spanned by a chain list, with
// coordinates in a shared path indexing (so two lists over the same
// universe generate the same lattice exactly when the forms coincide).
std::vector<std::vector<Int>> lattice_form(const std::vector<const Chain*>& chains,
                                           const std::map<Path, size_t>& row_of) {
  std::vector<std::vector<Int>> a(chains.size(), std::vector<Int>(row_of.size(), 0));
  for (size_t i = 0; i < chains.size(); ++i)
    for (const auto& [p, s] : chains[i]->terms()) {
      if (boost::multiprecision::denominator(s) != 1)
        throw contract_error("lattice form of non-integer chain");
      a[i][row_of.at(p)] = boost::multiprecision::numerator(s);
    }

  const size_t rows = a.size(), cols = row_of.size();
  size_t pr = 0;
  for (size_t c = 0; c < cols && pr < rows; ++c) {
    while (true) {
      size_t best = rows;
      for (size_t r = pr; r < rows; ++r)
        if (a[r][c] != 0 && (best == rows || abs(a[r][c]) < abs(a[best][c]))) best = r;
      if (best == rows) break;
      std::swap(a[pr], a[best]);
      bool clean = true;
      for (size_t r = pr + 1; r < rows; ++r) {
        if (a[r][c] == 0) continue;
        const Int q = a[r][c] / a[pr][c];
        for (size_t j = 0; j < cols; ++j) a[r][j] -= q * a[pr][j];
        if (a[r][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[pr][c] == 0) continue;
    if (a[pr][c] < 0)
      for (size_t j = 0; j < cols; ++j) a[pr][j] = -a[pr][j];
    for (size_t r = 0; r < pr; ++r) {
      Int q = a[r][c] / a[pr][c];
      if (a[r][c] - q * a[pr][c] < 0) q -= 1;
      if (q != 0)
        for (size_t j = 0; j < cols; ++j) a[r][j] -= q * a[pr][j];
    }
    ++pr;
  }
  a.resize(pr);  // drop zero rows so generating sets of different sizes compare
  return a;
}

size_t chain_list_rank(const std::vector<const Chain*>& chains, const Ring& field) {
  std::map<Path, size_t> row_of;
  for (const Chain* c : chains)
    for (const auto& [p, s] : c->terms()) row_of.emplace(p, 0);
  size_t next = 0;
  for (auto& [p, id] : row_of) id = next++;
  ExactMatrix m(row_of.size(), chains.size());
  for (size_t j = 0; j < chains.size(); ++j)
    for (const auto& [p, s] : chains[j]->terms()) m.set(row_of.at(p), j, s, field);
  return rank(m, field);
}

}  // namespace

GeneratingSet inductive_generators(const Digraph& g, int n, const Ring& ring, Direction dir,
                                   size_t mutation_cap) {
  if (n < 0) throw contract_error("negative dimension");
  const Ring work = ring.kind == RingKind::Rationals ? Ring::integers() : ring;
  GeneratingSet gen;
  gen.dimension = n;
  gen.ring = ring;
  gen.direction = dir;

  if (n == 0) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      InductiveElement el;
      el.chain = Chain::unit({v});
      el.direction = dir;
      el.extension_vertex = v;
      el.structure.direction = dir;
      el.structure.dim = -1;
      el.structure.ring = work;
      el.strongly_connected = true;
      gen.elements.push_back(std::move(el));
    }
    gen.spans = true;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      gen.certificate.push_back({v, v, 1, 1, true});
    return gen;
  }

  std::vector<OmegaBasis> bases;
  bases.reserve(n + 1);
  for (int k = 0; k <= n; ++k) bases.push_back(omega_basis(g, k, work));

  for (const auto& [endpoints, block] : bases[n].blocks)
    for (const Chain& x : block)
      for (InductiveElement& el :
           inductive_structure(x, g, bases[n - 1], n >= 2 ? &bases[n - 2] : nullptr, dir,
                               mutation_cap))
        gen.elements.push_back(std::move(el));

  // span certificate, per endpoint block of the reference basis
  std::map<std::pair<Vertex, Vertex>, std::vector<const Chain*>> produced;
  for (const InductiveElement& el : gen.elements) {
    const Chain& c = el.chain;
    produced[{tail_vertex(c), head_vertex(c)}].push_back(&c);
  }
  gen.spans = true;
  for (const auto& [endpoints, block] : bases[n].blocks) {
    BlockCertificate cert;
    cert.tail = endpoints.first;
    cert.head = endpoints.second;
    cert.basis_rank = block.size();
    auto it = produced.find(endpoints);
    const std::vector<const Chain*> gens =
        it == produced.end() ? std::vector<const Chain*>{} : it->second;
    if (ring.kind == RingKind::Integers) {
      cert.generator_rank = chain_list_rank(gens, Ring::rationals());
      std::vector<const Chain*> ref;
      ref.reserve(block.size());
      for (const Chain& b : block) ref.push_back(&b);
      std::map<Path, size_t> row_of;
      for (const Chain* c : gens)
        for (const auto& [p, s] : c->terms()) row_of.emplace(p, 0);
      for (const Chain* c : ref)
        for (const auto& [p, s] : c->terms()) row_of.emplace(p, 0);
      size_t next = 0;
      for (auto& [p, id] : row_of) id = next++;
      cert.lattice_match = lattice_form(gens, row_of) == lattice_form(ref, row_of);
    } else {
      const Ring field = ring;
      cert.generator_rank = chain_list_rank(gens, field);
      cert.lattice_match = cert.generator_rank == cert.basis_rank;
    }
    gen.spans = gen.spans && cert.lattice_match;
    gen.certificate.push_back(cert);
  }
  return gen;
}

}  // namespace pathhom
