#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "oddcycle/graph.hpp"

namespace oddcycle {

// ---------------------------------------------------------------------------
// Ball peeling

enum class PeelMode {
  standard,     // k >= log2 n, arrest factor log2(n)/k
  generalized,  // k < log2 n, arrest factor n^(1/k) - 1
};

// Growth test used to stop a BFS ball, plus the |S| guarantee it implies.
struct ArrestRule {
  PeelMode mode;
  std::size_t n;  // active vertex count of the peeled graph
  std::size_t k;
  double factor;
  std::size_t deleted_bound;

  // True when a layer of `layer_size` after a ball of `ball_size` arrests.
  bool arrests(std::size_t layer_size, std::size_t ball_size) const;
};

ArrestRule arrest_rule(std::size_t n, std::size_t k);

struct PeelComponent {
  VertexList vertices;  // sorted
  Vertex center;
  std::size_t radius;
  Bipartition sides;
};

struct Decomposition {
  VertexList deleted;  // S, sorted
  std::vector<PeelComponent> components;
};

struct ShortCycle {
  OddCycleCertificate cycle;
};

using PeelOutcome = std::variant<ShortCycle, Decomposition>;

// Repeatedly grows a BFS ball from the lowest active vertex until the first
// layer j <= k that arrests, moves layer j into S and removes the ball. A
// same-layer edge inside the kept ball yields an odd cycle of length <= 2j-1.
PeelOutcome peel(const Graph& g, std::size_t k);

// Larger side of every component of G - S after a successful peel.
std::variant<ShortCycle, VertexList> independent_set_via_peel(const Graph& g, std::size_t k);

// ---------------------------------------------------------------------------
// Cycle shortening

// Vertex set whose induced subgraph has `center` at eccentricity <= radius.
struct Cluster {
  VertexList vertices;
  Vertex center;
  std::size_t radius;
};

// |V(F) \ V(H')| + (4r + 1) * m for the given target sets.
std::size_t shortening_bound(const Graph& f, const std::vector<VertexList>& targets, std::size_t r);

// Splices short intra-cluster paths over long same-parity cycle arcs until no
// target set meets the cycle in more than 4r+1 vertices. Each target must lie
// inside one cluster; paths are taken inside that cluster.
OddCycleCertificate shorten_cycle(const Graph& f, const std::vector<Cluster>& clusters,
                                  const std::vector<VertexList>& targets, std::size_t r,
                                  const OddCycleCertificate& seed);

// Targets are whole clusters, selected by index.
OddCycleCertificate shorten_cycle(const Graph& f, const std::vector<Cluster>& clusters,
                                  const std::vector<std::size_t>& target_ids, std::size_t r,
                                  const OddCycleCertificate& seed);

// ---------------------------------------------------------------------------
// Complement selector

struct SidePair {
  VertexList a;
  VertexList b;
};

struct SelectorInstance {
  std::size_t n = 0;
  std::vector<SidePair> pairs;
};

struct SelectorStats {
  std::vector<std::size_t> membership;  // d(x): pairs whose A or B contains x
  std::size_t total = 0;                // sum of d(x)
  double average = 0;                   // d
};

SelectorStats selector_stats(const SelectorInstance& inst);

// ceil(n * 2^-d)
std::size_t expectation_bound(const SelectorInstance& inst);

enum class Side : std::uint8_t { A, B };

struct SelectorResult {
  std::vector<Side> choices;
  VertexList chosen_union;  // U
  VertexList survivors;     // L = [n] \ U
};

struct RandomizedSelection {
  std::uint64_t seed = 0;
  std::size_t max_tries = 50;
  std::optional<std::size_t> target;  // defaults to expectation_bound
};
struct DerandomizedSelection {};
using SelectorMode = std::variant<RandomizedSelection, DerandomizedSelection>;

void validate_instance(const SelectorInstance& inst);
SelectorResult apply_choices(const SelectorInstance& inst, const std::vector<Side>& choices);
SelectorResult select_complement(const SelectorInstance& inst, const SelectorMode& mode = DerandomizedSelection{});

}  // namespace oddcycle
