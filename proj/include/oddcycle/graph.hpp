#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "oddcycle/bitset.hpp"

namespace oddcycle {

using Colour = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph with bit-vector adjacency rows and an active-vertex
// mask. Adjacency is shared between views; restricting the mask never copies
// rows. A masked-out vertex has no active incident edges.
class Graph {
 public:
  class Builder {
   public:
    explicit Builder(std::size_t n);
    Builder& add_edge(Vertex u, Vertex v);
    Graph build() &&;

   private:
    std::vector<VertexBitset> rows_;
  };

  Graph() : Graph(0) {}
  explicit Graph(std::size_t n);  // edgeless
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const noexcept { return rows_->size(); }
  std::size_t active_count() const noexcept { return active_count_; }
  const VertexBitset& active() const noexcept { return active_; }
  bool is_active(Vertex v) const noexcept { return v < order() && active_.test(v); }

  // Raw adjacency row, ignores the mask.
  const VertexBitset& row(Vertex v) const noexcept { return (*rows_)[v]; }
  VertexBitset neighbours(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const noexcept;
  std::size_t degree(Vertex v) const;
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  // New views over the same adjacency.
  Graph with_active(VertexBitset mask) const;
  Graph restricted_to(const VertexList& keep) const;
  Graph without(const VertexList& removed) const;

 private:
  std::shared_ptr<const std::vector<VertexBitset>> rows_;
  VertexBitset active_;
  std::size_t active_count_ = 0;
};

// BFS layers N^(0)..N^(j) around a root; cumulative[i] = |N^(<=i)|.
struct LayeredBall {
  Vertex root = 0;
  std::vector<VertexList> layers;
  std::vector<std::size_t> cumulative;

  std::size_t size() const { return cumulative.empty() ? 0 : cumulative.back(); }
};

// Two independent sets covering a component (or a whole graph).
struct Bipartition {
  VertexList side0;
  VertexList side1;
};

struct OddCycleCertificate {
  VertexList vertices;
  std::optional<Colour> colour;

  std::size_t length() const noexcept { return vertices.size(); }
  friend bool operator==(const OddCycleCertificate&, const OddCycleCertificate&) = default;
};

// Cyclic sequence v_0..v_{l-1}; repeats allowed.
struct OddClosedWalk {
  VertexList vertices;
};

// Grows BFS layers one at a time inside the active mask of a graph.
class LayerGrower {
 public:
  LayerGrower(const Graph& g, Vertex root);

  // Computes the next layer; returns false (and appends nothing) when the
  // frontier is empty.
  bool grow();

  const LayeredBall& ball() const noexcept { return ball_; }
  const VertexBitset& visited() const noexcept { return visited_; }
  std::size_t depth() const noexcept { return ball_.layers.size() - 1; }

  // Bit view of layer i.
  const VertexBitset& layer_bits(std::size_t i) const { return layer_bits_[i]; }

  // First same-layer edge among layers 0..max_layer, lowest layer first.
  std::optional<Edge> find_layer_conflict(std::size_t max_layer) const;
  // Simple odd cycle through a same-layer edge, closed at the lowest common
  // ancestor of the BFS tree.
  OddCycleCertificate cycle_through(Edge conflict) const;

 private:
  Vertex parent_of(Vertex v, std::size_t layer) const;

  const Graph* g_;
  LayeredBall ball_;
  VertexBitset visited_;
  std::vector<VertexBitset> layer_bits_;
};

LayeredBall bfs_layers(const Graph& g, Vertex root, std::size_t max_depth);

struct ComponentBipartition {
  VertexList vertices;  // sorted
  Bipartition sides;    // lowest-index vertex is in side0
};
using BipartiteCheck = std::variant<std::vector<ComponentBipartition>, OddCycleCertificate>;

BipartiteCheck check_bipartite(const Graph& g);
bool is_bipartite(const Graph& g);
// Merge per-component sides into one global bipartition.
Bipartition merge_sides(const std::vector<ComponentBipartition>& parts);

struct OddGirth {
  std::size_t length;
  OddCycleCertificate witness;
};

// Exact shortest odd cycle via BFS in the bipartite double cover from every
// vertex. With max_length set, cycles longer than it are not reported.
std::optional<OddGirth> odd_girth(const Graph& g, std::optional<std::size_t> max_length = {});

// Per-vertex length of the shortest odd closed walk through it (nullopt when
// the vertex lies in a bipartite component or is inactive).
std::vector<std::optional<std::size_t>> shortest_odd_walks(const Graph& g);

OddCycleCertificate odd_cycle_from_walk(const OddClosedWalk& w, const Graph& g);

// Shortest x-y path (x first) using only `component` vertices.
VertexList shortest_path_within(const Graph& g, const VertexList& component, Vertex x, Vertex y);

// Connected components of the active subgraph, each sorted, ordered by their
// lowest vertex.
std::vector<VertexList> connected_components(const Graph& g);

}  // namespace oddcycle
