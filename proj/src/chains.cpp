#include "pathhom/chains.hpp"

#include <algorithm>
#include <sstream>

#include "pathhom/errors.hpp"

namespace pathhom {

Scalar Chain::coeff(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Chain::add_term(const Path& p, const Scalar& c, const Ring& ring) {
  if (static_cast<int>(p.size()) != dim_ + 1)
    throw contract_error("term length does not match chain dimension");
  const Scalar v = ring.add(coeff(p), c);
  if (v == 0)
    terms_.erase(p);
  else
    terms_[p] = v;
}

Chain Chain::unit(const Path& p) {
  Chain c(static_cast<int>(p.size()) - 1);
  c.terms_[p] = Scalar(1);
  return c;
}

Chain Chain::plus(const Chain& o, const Ring& ring) const {
  if (dim_ != o.dim_ && !is_zero() && !o.is_zero())
    throw contract_error("adding chains of different dimension");
  Chain out = *this;
  for (const auto& [p, c] : o.terms_) out.add_term(p, c, ring);
  return out;
}

Chain Chain::minus(const Chain& o, const Ring& ring) const {
  return plus(o.negated(ring), ring);
}

Chain Chain::scaled(const Scalar& s, const Ring& ring) const {
  Chain out(dim_);
  if (ring.is_zero(s)) return out;
  for (const auto& [p, c] : terms_) {
    const Scalar v = ring.mul(c, s);
    if (v != 0) out.terms_[p] = v;
  }
  return out;
}

std::string Chain::key() const {
  std::ostringstream os;
  for (const auto& [p, c] : terms_) {
    for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ":" << c.str() << ";";
  }
  return os.str();
}

Chain sign_normalized(const Chain& x, const Ring& ring, int* sign_out) {
  if (sign_out) *sign_out = 1;
  if (x.is_zero()) return x;
  const Scalar& lead = x.terms().begin()->second;
  bool flip = false;
  if (ring.kind == RingKind::ModP) {
    flip = 2 * boost::multiprecision::numerator(lead) > ring.p;
  } else {
    flip = lead < 0;
  }
  if (!flip) return x;
  if (sign_out) *sign_out = -1;
  return x.negated(ring);
}

std::vector<Path> allowed_paths(const Digraph& g, int n) {
  if (n < 0) throw contract_error("negative path dimension");
  std::vector<Path> out;
  Path cur;
  // out-neighbor lists are sorted, so depth-first extension from vertices
  // in index order yields lexicographic order directly
  auto extend = [&](auto&& self, Vertex v, int left) -> void {
    cur.push_back(v);
    if (left == 0)
      out.push_back(cur);
    else
      for (Vertex w : g.out(v)) self(self, w, left - 1);
    cur.pop_back();
  };
  for (Vertex v = 0; v < g.vertex_count(); ++v) extend(extend, v, n);
  return out;
}

bool is_allowed_path(const Digraph& g, const Path& p) {
  if (p.empty()) return false;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1])) return false;
  return p.back() < g.vertex_count();
}

Chain magnitude_partial(const Chain& x, int i, const DistanceMatrix& d, const Ring& ring) {
  const int n = x.dim();
  if (i < 1 || i > n - 1) throw contract_error("magnitude partial index out of range");
  Chain out(n - 1);
  for (const auto& [p, c] : x.terms()) {
    const uint32_t a = d.at(p[i - 1], p[i]);
    const uint32_t b = d.at(p[i], p[i + 1]);
    if (dist_add(a, b) != 2 || d.at(p[i - 1], p[i + 1]) != 2) continue;
    Path q;
    q.reserve(p.size() - 1);
    for (int j = 0; j <= n; ++j)
      if (j != i) q.push_back(p[j]);
    out.add_term(q, c, ring);
  }
  return out;
}

bool in_omega(const Chain& x, const Digraph& g, const DistanceMatrix& d, const Ring& ring) {
  for (const auto& [p, c] : x.terms())
    if (!is_allowed_path(g, p)) return false;
  for (int i = 1; i <= x.dim() - 1; ++i)
    if (!magnitude_partial(x, i, d, ring).is_zero()) return false;
  return true;
}

Chain path_boundary(const Chain& x, const Digraph& g, const Ring& ring) {
  const int n = x.dim();
  for (const auto& [p, c] : x.terms())
    if (!is_allowed_path(g, p))
      throw contract_error("boundary of a chain with non-allowed terms");
  Chain out(n - 1);
  if (n == 0) return out;
  for (const auto& [p, c] : x.terms()) {
    for (int i = 0; i <= n; ++i) {
      // deleting an interior vertex may create a repeated consecutive
      // vertex; those terms are dropped as degenerate
      if (i > 0 && i < n && p[i - 1] == p[i + 1]) continue;
      Path q;
      q.reserve(p.size() - 1);
      for (int j = 0; j <= n; ++j)
        if (j != i) q.push_back(p[j]);
      out.add_term(q, i % 2 == 0 ? c : ring.neg(c), ring);
    }
  }
  for (const auto& [p, c] : out.terms())
    if (!is_allowed_path(g, p))
      throw contract_error("boundary left the allowed-path module; chain is not boundary-stable");
  return out;
}

Chain face_head(const Chain& x, Vertex v, const Ring& ring) {
  const int n = x.dim();
  if (n < 1) return Chain(-1);
  Chain out(n - 1);
  for (const auto& [p, c] : x.terms()) {
    if (p[n - 1] != v) continue;
    Path q(p.begin(), p.end() - 1);
    out.add_term(q, c, ring);
  }
  return out;
}

Chain face_tail(const Chain& x, Vertex v, const Ring& ring) {
  const int n = x.dim();
  if (n < 1) return Chain(-1);
  Chain out(n - 1);
  for (const auto& [p, c] : x.terms()) {
    if (p[1] != v) continue;
    Path q(p.begin() + 1, p.end());
    out.add_term(q, c, ring);
  }
  return out;
}

std::set<Vertex> head_set(const Chain& x) {
  if (x.is_zero()) throw contract_error("endpoints of the zero chain");
  std::set<Vertex> s;
  for (const auto& [p, c] : x.terms()) s.insert(p.back());
  return s;
}

std::set<Vertex> tail_set(const Chain& x) {
  if (x.is_zero()) throw contract_error("endpoints of the zero chain");
  std::set<Vertex> s;
  for (const auto& [p, c] : x.terms()) s.insert(p.front());
  return s;
}

bool is_connected(const Chain& x) {
  return !x.is_zero() && head_set(x).size() == 1 && tail_set(x).size() == 1;
}

Vertex head_vertex(const Chain& x) {
  const auto s = head_set(x);
  if (s.size() != 1) throw contract_error("chain has no single head vertex");
  return *s.begin();
}

Vertex tail_vertex(const Chain& x) {
  const auto s = tail_set(x);
  if (s.size() != 1) throw contract_error("chain has no single tail vertex");
  return *s.begin();
}

size_t OmegaBasis::total_dim() const {
  size_t n = 0;
  for (const auto& [k, v] : blocks) n += v.size();
  return n;
}

std::vector<const Chain*> OmegaBasis::flatten() const {
  std::vector<const Chain*> out;
  out.reserve(total_dim());
  for (const auto& [k, v] : blocks)
    for (const Chain& c : v) out.push_back(&c);
  return out;
}

const std::vector<Chain>* OmegaBasis::block(Vertex tail, Vertex head) const {
  auto it = blocks.find({tail, head});
  return it == blocks.end() ? nullptr : &it->second;
}

OmegaBasis omega_basis(const Digraph& g, int n, const Ring& ring) {
  OmegaBasis basis;
  basis.dim = n;
  basis.ring = ring;
  if (n == 0) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      basis.blocks[{v, v}].push_back(Chain::unit({v}));
    return basis;
  }

  const DistanceMatrix dist(g);
  std::map<std::pair<Vertex, Vertex>, std::vector<Path>> grouped;
  for (Path& p : allowed_paths(g, n)) grouped[{p.front(), p.back()}].push_back(std::move(p));

  for (const auto& [endpoints, paths] : grouped) {
    // rows: every diagonal-bidegree tuple reachable from this block's
    // paths, in lexicographic order for a stable row indexing
    std::map<Path, size_t> row_of;
    std::vector<std::pair<Path, int>> images;  // (tuple, column) pairs, sign +
    for (size_t j = 0; j < paths.size(); ++j) {
      const Path& p = paths[j];
      for (int i = 1; i <= n - 1; ++i) {
        if (dist.at(p[i - 1], p[i + 1]) != 2) continue;
        Path q;
        q.reserve(p.size() - 1);
        for (int k = 0; k <= n; ++k)
          if (k != i) q.push_back(p[k]);
        row_of.emplace(q, 0);
        images.emplace_back(std::move(q), static_cast<int>(j));
      }
    }
    size_t next_row = 0;
    for (auto& [tuple, id] : row_of) id = next_row++;

    ExactMatrix m(row_of.size(), paths.size());
    for (const auto& [tuple, col] : images) m.add_to(row_of.at(tuple), col, Scalar(1), ring);

    const std::vector<ExactVector> kernel =
        ring.is_field() ? kernel_basis(m, ring) : hermite_kernel(m);
    if (kernel.empty()) continue;

    std::vector<Chain>& out = basis.blocks[endpoints];
    for (const ExactVector& vec : kernel) {
      Chain c(n);
      for (const auto& [col, s] : vec.entries) c.add_term(paths[col], s, ring);
      out.push_back(sign_normalized(c, ring));
    }
  }
  return basis;
}

namespace {

// Shared assembly for expressing chains against chain lists: index the
// union of supporting paths, hand the columns to the exact solver.
std::vector<Scalar> express_against(const Chain& x, const std::vector<const Chain*>& basis,
                                    const Ring& ring) {
  std::map<Path, size_t> row_of;
  for (const Chain* b : basis)
    for (const auto& [p, c] : b->terms()) row_of.emplace(p, 0);
  for (const auto& [p, c] : x.terms()) row_of.emplace(p, 0);
  size_t next = 0;
  for (auto& [p, id] : row_of) id = next++;

  std::vector<ExactVector> cols;
  cols.reserve(basis.size());
  for (const Chain* b : basis) {
    ExactVector v(row_of.size());
    for (const auto& [p, c] : b->terms()) v.entries[row_of.at(p)] = c;
    cols.push_back(std::move(v));
  }
  ExactVector target(row_of.size());
  for (const auto& [p, c] : x.terms()) target.entries[row_of.at(p)] = c;
  return express_in_basis(target, cols, ring);
}

}  // namespace

std::vector<Scalar> express_in_chain_basis(const Chain& x, const std::vector<Chain>& basis,
                                           const Ring& ring) {
  std::vector<const Chain*> ptrs;
  ptrs.reserve(basis.size());
  for (const Chain& b : basis) ptrs.push_back(&b);
  return express_against(x, ptrs, ring);
}

std::vector<Scalar> express_chain(const Chain& x, const OmegaBasis& basis, const Ring& ring) {
  // split x into endpoint groups and solve each inside its block
  std::map<std::pair<Vertex, Vertex>, Chain> groups;
  for (const auto& [p, c] : x.terms()) {
    auto [it, fresh] = groups.try_emplace({p.front(), p.back()}, x.dim());
    it->second.add_term(p, c, ring);
  }

  std::vector<Scalar> coords(basis.total_dim(), Scalar(0));
  for (const auto& [endpoints, part] : groups) {
    auto bit = basis.blocks.find(endpoints);
    if (bit == basis.blocks.end())
      throw not_in_span_error("chain touches an endpoint block with empty basis");
    const std::vector<Scalar> local = express_in_chain_basis(part, bit->second, ring);
    // locate this block's offset in the flattened ordering
    size_t offset = 0;
    for (const auto& [k, v] : basis.blocks) {
      if (k == endpoints) break;
      offset += v.size();
    }
    for (size_t j = 0; j < local.size(); ++j) coords[offset + j] = local[j];
  }
  return coords;
}

}  // namespace pathhom
