#include "oddcycle/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "oddcycle/errors.hpp"

namespace oddcycle {

namespace {

void check_vertex(const Graph& g, Vertex v, const char* what) {
  if (v >= g.order()) throw InputError(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Graph::Builder::Builder(std::size_t n) : rows_(n, VertexBitset(n)) {}

Graph::Builder& Graph::Builder::add_edge(Vertex u, Vertex v) {
  if (u >= rows_.size() || v >= rows_.size()) throw InputError("add_edge: vertex out of range");
  if (u == v) throw InputError("add_edge: self-loop at " + std::to_string(u));
  rows_[u].set(v);
  rows_[v].set(u);
  return *this;
}

Graph Graph::Builder::build() && {
  Graph g;
  const std::size_t n = rows_.size();
  g.rows_ = std::make_shared<const std::vector<VertexBitset>>(std::move(rows_));
  g.active_ = VertexBitset(n, true);
  g.active_count_ = n;
  return g;
}

Graph::Graph(std::size_t n)
    : rows_(std::make_shared<const std::vector<VertexBitset>>(n, VertexBitset(n))),
      active_(n, true),
      active_count_(n) {}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Builder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

VertexBitset Graph::neighbours(Vertex v) const {
  VertexBitset out = row(v);
  out &= active_;
  return out;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  return u < order() && v < order() && active_.test(u) && active_.test(v) && row(u).test(v);
}

std::size_t Graph::degree(Vertex v) const { return is_active(v) ? row(v).count_common(active_) : 0; }

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  active_.for_each([&](Vertex v) { twice += row(v).count_common(active_); });
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  active_.for_each([&](Vertex u) {
    VertexBitset nb = neighbours(u);
    for (std::size_t v = nb.find_next(u + 1); v < nb.size(); v = nb.find_next(v + 1))
      out.emplace_back(u, static_cast<Vertex>(v));
  });
  return out;
}

Graph Graph::with_active(VertexBitset mask) const {
  if (mask.size() != order()) throw InputError("with_active: mask size mismatch");
  Graph g = *this;
  g.active_count_ = mask.count();
  g.active_ = std::move(mask);
  return g;
}

Graph Graph::restricted_to(const VertexList& keep) const {
  for (Vertex v : keep) check_vertex(*this, v, "restricted_to");
  VertexBitset mask = VertexBitset::from_list(order(), keep);
  mask &= active_;
  return with_active(std::move(mask));
}

Graph Graph::without(const VertexList& removed) const {
  VertexBitset mask = active_;
  for (Vertex v : removed) {
    check_vertex(*this, v, "without");
    mask.reset(v);
  }
  return with_active(std::move(mask));
}

// ---------------------------------------------------------------------------

LayerGrower::LayerGrower(const Graph& g, Vertex root) : g_(&g), visited_(g.order()) {
  if (!g.is_active(root)) throw InputError("bfs: root " + std::to_string(root) + " is not active");
  ball_.root = root;
  ball_.layers.push_back({root});
  ball_.cumulative.push_back(1);
  visited_.set(root);
  layer_bits_.push_back(VertexBitset::from_list(g.order(), {root}));
}

bool LayerGrower::grow() {
  VertexBitset next(g_->order());
  for (Vertex u : ball_.layers.back()) next |= g_->row(u);
  next &= g_->active();
  next.subtract(visited_);
  if (next.none()) return false;
  visited_ |= next;
  ball_.layers.push_back(next.to_list());
  ball_.cumulative.push_back(ball_.cumulative.back() + ball_.layers.back().size());
  layer_bits_.push_back(std::move(next));
  return true;
}

std::optional<Edge> LayerGrower::find_layer_conflict(std::size_t max_layer) const {
  const std::size_t last = std::min(max_layer, depth());
  for (std::size_t i = 0; i <= last; ++i) {
    for (Vertex v : ball_.layers[i]) {
      std::size_t w = g_->row(v).first_common(layer_bits_[i]);
      if (w < g_->order()) return Edge{v, static_cast<Vertex>(w)};
    }
  }
  return std::nullopt;
}

Vertex LayerGrower::parent_of(Vertex v, std::size_t layer) const {
  return static_cast<Vertex>(g_->row(v).first_common(layer_bits_[layer - 1]));
}

OddCycleCertificate LayerGrower::cycle_through(Edge conflict) const {
  auto [a, b] = conflict;
  std::size_t layer = 0;
  while (!layer_bits_[layer].test(a)) ++layer;
  VertexList left{a};
  VertexList right{b};
  for (std::size_t i = layer; left.back() != right.back(); --i) {
    left.push_back(parent_of(left.back(), i));
    right.push_back(parent_of(right.back(), i));
  }
  // left: a .. lca, right: b .. lca
  OddCycleCertificate cert;
  cert.vertices = std::move(left);
  for (auto it = right.rbegin() + 1; it != right.rend(); ++it) cert.vertices.push_back(*it);
  return cert;
}

LayeredBall bfs_layers(const Graph& g, Vertex root, std::size_t max_depth) {
  LayerGrower grower(g, root);
  while (grower.depth() < max_depth && grower.grow()) {
  }
  return grower.ball();
}

// ---------------------------------------------------------------------------

BipartiteCheck check_bipartite(const Graph& g) {
  std::vector<ComponentBipartition> parts;
  VertexBitset unseen = g.active();
  for (std::size_t r = unseen.find_first(); r < unseen.size(); r = unseen.find_next(r)) {
    LayerGrower grower(g, static_cast<Vertex>(r));
    while (grower.grow()) {
    }
    if (auto conflict = grower.find_layer_conflict(grower.depth())) return grower.cycle_through(*conflict);
    ComponentBipartition part;
    const auto& layers = grower.ball().layers;
    for (std::size_t i = 0; i < layers.size(); ++i) {
      auto& side = (i % 2 == 0) ? part.sides.side0 : part.sides.side1;
      side.insert(side.end(), layers[i].begin(), layers[i].end());
    }
    std::sort(part.sides.side0.begin(), part.sides.side0.end());
    std::sort(part.sides.side1.begin(), part.sides.side1.end());
    part.vertices = grower.visited().to_list();
    unseen.subtract(grower.visited());
    parts.push_back(std::move(part));
  }
  return parts;
}

bool is_bipartite(const Graph& g) { return std::holds_alternative<std::vector<ComponentBipartition>>(check_bipartite(g)); }

Bipartition merge_sides(const std::vector<ComponentBipartition>& parts) {
  Bipartition out;
  for (const auto& p : parts) {
    out.side0.insert(out.side0.end(), p.sides.side0.begin(), p.sides.side0.end());
    out.side1.insert(out.side1.end(), p.sides.side1.begin(), p.sides.side1.end());
  }
  std::sort(out.side0.begin(), out.side0.end());
  std::sort(out.side1.begin(), out.side1.end());
  return out;
}

std::vector<VertexList> connected_components(const Graph& g) {
  std::vector<VertexList> out;
  VertexBitset unseen = g.active();
  for (std::size_t r = unseen.find_first(); r < unseen.size(); r = unseen.find_next(r)) {
    LayerGrower grower(g, static_cast<Vertex>(r));
    while (grower.grow()) {
    }
    unseen.subtract(grower.visited());
    out.push_back(grower.visited().to_list());
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// BFS over the bipartite double cover from (root, 0). Returns the depth at
// which (root, 1) is reached if that is <= limit; parents[p][v] is the
// predecessor of (v, p), whose parity is 1 - p.
class DoubleCoverSearch {
 public:
  explicit DoubleCoverSearch(const Graph& g)
      : g_(g), inactive_(g.order(), true), parents_{VertexList(g.order()), VertexList(g.order())} {
    inactive_.subtract(g.active());
  }

  std::optional<std::size_t> run(Vertex root, std::size_t limit) {
    VertexBitset blocked[2] = {inactive_, inactive_};
    blocked[0].set(root);
    VertexList frontier{root};
    VertexList next;
    const std::size_t words = inactive_.words().size();
    for (std::size_t depth = 0; !frontier.empty() && depth + 1 <= limit; ++depth) {
      const int p = static_cast<int>((depth + 1) % 2);
      std::uint64_t* blk = blocked[p].data();
      next.clear();
      for (Vertex u : frontier) {
        const auto& row = g_.row(u).words();
        for (std::size_t wi = 0; wi < words; ++wi) {
          std::uint64_t w = row[wi] & ~blk[wi];
          if (!w) continue;
          blk[wi] |= w;
          while (w) {
            auto v = static_cast<Vertex>((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
            parents_[p][v] = u;
            next.push_back(v);
          }
        }
      }
      if (p == 1 && blocked[1].test(root)) return depth + 1;
      frontier.swap(next);
    }
    return std::nullopt;
  }

  OddClosedWalk walk(Vertex root, std::size_t length) const {
    OddClosedWalk w;
    Vertex cur = root;
    int p = 1;
    for (std::size_t i = 0; i < length; ++i) {
      w.vertices.push_back(cur);
      cur = parents_[p][cur];
      p ^= 1;
    }
    std::reverse(w.vertices.begin(), w.vertices.end());
    return w;
  }

 private:
  const Graph& g_;
  VertexBitset inactive_;
  VertexList parents_[2];
};

}  // namespace

std::optional<OddGirth> odd_girth(const Graph& g, std::optional<std::size_t> max_length) {
  DoubleCoverSearch search(g);
  std::size_t best = max_length.value_or(g.order());
  std::optional<Vertex> best_root;
  for (std::size_t r = g.active().find_first(); r < g.order(); r = g.active().find_next(r + 1)) {
    auto v = static_cast<Vertex>(r);
    if (!best_root && g.degree(v) < 2) continue;
    if (auto len = search.run(v, best_root ? best - 1 : best)) {
      best = *len;
      best_root = v;
      if (best == 3) break;
    }
  }
  if (!best_root) return std::nullopt;
  search.run(*best_root, best);
  auto cycle = odd_cycle_from_walk(search.walk(*best_root, best), g);
  return OddGirth{cycle.length(), std::move(cycle)};
}

std::vector<std::optional<std::size_t>> shortest_odd_walks(const Graph& g) {
  DoubleCoverSearch search(g);
  std::vector<std::optional<std::size_t>> out(g.order());
  g.active().for_each([&](Vertex v) { out[v] = search.run(v, 2 * g.order()); });
  return out;
}

OddCycleCertificate odd_cycle_from_walk(const OddClosedWalk& w, const Graph& g) {
  const auto& seq = w.vertices;
  if (seq.size() % 2 == 0) throw InputError("odd_cycle_from_walk: walk length " + std::to_string(seq.size()) + " is even");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Vertex a = seq[i];
    Vertex b = seq[(i + 1) % seq.size()];
    if (!g.has_edge(a, b))
      throw InputError("odd_cycle_from_walk: " + std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
  }
  std::vector<std::size_t> pos(g.order(), std::numeric_limits<std::size_t>::max());
  VertexList stack;
  for (Vertex x : seq) {
    std::size_t i = pos[x];
    if (i == std::numeric_limits<std::size_t>::max()) {
      pos[x] = stack.size();
      stack.push_back(x);
      continue;
    }
    // stack[i..] followed by x closes a simple subwalk.
    if ((stack.size() - i) % 2 == 1) return OddCycleCertificate{VertexList(stack.begin() + static_cast<std::ptrdiff_t>(i), stack.end()), std::nullopt};
    while (stack.size() > i + 1) {
      pos[stack.back()] = std::numeric_limits<std::size_t>::max();
      stack.pop_back();
    }
  }
  return OddCycleCertificate{std::move(stack), std::nullopt};
}

VertexList shortest_path_within(const Graph& g, const VertexList& component, Vertex x, Vertex y) {
  check_vertex(g, x, "shortest_path_within");
  check_vertex(g, y, "shortest_path_within");
  VertexBitset mask = VertexBitset::from_list(g.order(), component);
  mask &= g.active();
  if (!mask.test(x) || !mask.test(y)) throw InputError("shortest_path_within: endpoint outside component");
  if (x == y) return {x};
  Graph view = g.with_active(std::move(mask));
  LayerGrower grower(view, x);
  while (!grower.visited().test(y)) {
    if (!grower.grow()) throw InputError("shortest_path_within: endpoints are disconnected within component");
  }
  VertexList path{y};
  for (std::size_t i = grower.depth(); i > 0; --i)
    path.push_back(static_cast<Vertex>(view.row(path.back()).first_common(grower.layer_bits(i - 1))));
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace oddcycle
