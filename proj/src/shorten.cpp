#include <algorithm>
#include <limits>
#include <string>

#include "oddcycle/errors.hpp"
#include "oddcycle/lemmas.hpp"

namespace oddcycle {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

void validate_cycle(const Graph& f, const OddCycleCertificate& c) {
  const auto& vs = c.vertices;
  if (vs.size() < 3 || vs.size() % 2 == 0) throw InputError("shorten_cycle: seed is not an odd cycle of length >= 3");
  VertexBitset seen(f.order());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] >= f.order() || seen.test(vs[i])) throw InputError("shorten_cycle: seed repeats or leaves the graph at position " + std::to_string(i));
    seen.set(vs[i]);
    if (!f.has_edge(vs[i], vs[(i + 1) % vs.size()])) throw InputError("shorten_cycle: seed edge at position " + std::to_string(i) + " is missing");
  }
}

// BFS distances from `src` inside `mask`.
std::vector<std::size_t> distances_within(const Graph& f, const VertexBitset& mask, Vertex src) {
  std::vector<std::size_t> dist(f.order(), kUnreached);
  const Graph view = f.with_active(mask & f.active());
  LayerGrower grower(view, src);
  while (grower.grow()) {
  }
  const auto& layers = grower.ball().layers;
  for (std::size_t i = 0; i < layers.size(); ++i)
    for (Vertex v : layers[i]) dist[v] = i;
  return dist;
}

struct Splice {
  std::size_t from;  // cycle positions
  std::size_t to;
};

// New closed walk: path v..u replaces whichever v-u arc has the parity of the
// path; the other arc is kept.
OddClosedWalk splice_walk(const VertexList& cycle, const Splice& s, const VertexList& path) {
  const std::size_t len = cycle.size();
  const std::size_t forward = (s.to + len - s.from) % len;
  const std::size_t plen = path.size() - 1;
  OddClosedWalk w;
  if (forward % 2 == plen % 2) {
    // drop forward arc, keep to -> ... -> from
    w.vertices = path;
    for (std::size_t p = (s.to + 1) % len; p != s.from; p = (p + 1) % len) w.vertices.push_back(cycle[p]);
  } else {
    for (std::size_t p = s.from; p != s.to; p = (p + 1) % len) w.vertices.push_back(cycle[p]);
    w.vertices.push_back(cycle[s.to]);
    for (std::size_t i = plen - 1; i >= 1; --i) w.vertices.push_back(path[i]);
  }
  return w;
}

std::size_t cyclic_distance(std::size_t a, std::size_t b, std::size_t len) {
  const std::size_t d = (b + len - a) % len;
  return std::min(d, len - d);
}

}  // namespace

std::size_t shortening_bound(const Graph& f, const std::vector<VertexList>& targets, std::size_t r) {
  VertexBitset covered(f.order());
  for (const auto& t : targets)
    for (Vertex v : t)
      if (v < f.order()) covered.set(v);
  covered &= f.active();
  return f.active_count() - covered.count() + (4 * r + 1) * targets.size();
}

OddCycleCertificate shorten_cycle(const Graph& f, const std::vector<Cluster>& clusters,
                                  const std::vector<VertexList>& targets, std::size_t r,
                                  const OddCycleCertificate& seed) {
  validate_cycle(f, seed);

  std::vector<VertexBitset> cluster_bits;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    const auto& cl = clusters[c];
    for (Vertex v : cl.vertices)
      if (!f.is_active(v)) throw InputError("shorten_cycle: cluster " + std::to_string(c) + " has inactive vertex " + std::to_string(v));
    VertexBitset bits = VertexBitset::from_list(f.order(), cl.vertices);
    if (!bits.test(cl.center) || cl.radius > r)
      throw InputError("shorten_cycle: cluster " + std::to_string(c) + " center or radius claim invalid");
    auto dist = distances_within(f, bits, cl.center);
    for (Vertex v : cl.vertices)
      if (dist[v] == kUnreached || dist[v] > cl.radius)
        throw InputError("shorten_cycle: cluster " + std::to_string(c) + " has eccentricity above its claimed radius");
    cluster_bits.push_back(std::move(bits));
  }

  std::vector<VertexBitset> target_bits;
  std::vector<std::size_t> owner;
  VertexBitset claimed(f.order());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    VertexBitset bits = VertexBitset::from_list(f.order(), targets[t]);
    if (bits.intersects(claimed)) throw InputError("shorten_cycle: target sets overlap");
    claimed |= bits;
    std::size_t c = 0;
    while (c < clusters.size() && (bits & cluster_bits[c]).count() != bits.count()) ++c;
    if (c == clusters.size()) throw InputError("shorten_cycle: target " + std::to_string(t) + " is not inside a single cluster");
    owner.push_back(c);
    target_bits.push_back(std::move(bits));
  }

  VertexList cycle = seed.vertices;
  const std::size_t heavy = 4 * r + 2;
  for (bool changed = true; changed;) {
    changed = false;
    const std::size_t len = cycle.size();

    std::vector<std::vector<std::size_t>> on_cycle(targets.size());
    for (std::size_t t = 0; t < targets.size(); ++t)
      for (std::size_t p = 0; p < len; ++p)
        if (target_bits[t].test(cycle[p])) on_cycle[t].push_back(p);

    std::optional<std::pair<std::size_t, Splice>> pick;  // (target, splice)

    // A target meeting the cycle 4r+2 times always has a pair 2r+1 apart.
    for (std::size_t t = 0; t < targets.size() && !pick; ++t) {
      const auto& pos = on_cycle[t];
      if (pos.size() < heavy) continue;
      std::size_t best = pos[1];
      for (std::size_t p : pos)
        if (cyclic_distance(pos[0], p, len) > cyclic_distance(pos[0], best, len)) best = p;
      pick = {t, Splice{pos[0], best}};
    }

    // Otherwise take any pair whose same-parity arc is longer than the path.
    for (std::size_t t = 0; t < targets.size() && !pick; ++t) {
      const auto& pos = on_cycle[t];
      std::size_t best_gain = 0;
      for (std::size_t i = 0; i < pos.size(); ++i) {
        auto dist = distances_within(f, cluster_bits[owner[t]], cycle[pos[i]]);
        for (std::size_t j = 0; j < pos.size(); ++j) {
          if (i == j) continue;
          const std::size_t d = dist[cycle[pos[j]]];
          const std::size_t forward = (pos[j] + len - pos[i]) % len;
          const std::size_t arc = (forward % 2 == d % 2) ? forward : len - forward;
          if (arc > d && arc - d > best_gain) {
            best_gain = arc - d;
            pick = {t, Splice{pos[i], pos[j]}};
          }
        }
      }
    }

    if (pick) {
      const auto& [t, s] = *pick;
      const VertexList members = cluster_bits[owner[t]].to_list();
      const VertexList path = shortest_path_within(f, members, cycle[s.from], cycle[s.to]);
      cycle = odd_cycle_from_walk(splice_walk(cycle, s, path), f).vertices;
      changed = true;
    }
  }
  return OddCycleCertificate{std::move(cycle), seed.colour};
}

OddCycleCertificate shorten_cycle(const Graph& f, const std::vector<Cluster>& clusters,
                                  const std::vector<std::size_t>& target_ids, std::size_t r,
                                  const OddCycleCertificate& seed) {
  std::vector<VertexList> targets;
  for (std::size_t id : target_ids) {
    if (id >= clusters.size()) throw InputError("shorten_cycle: target id " + std::to_string(id) + " out of range");
    targets.push_back(clusters[id].vertices);
  }
  return shorten_cycle(f, clusters, targets, r, seed);
}

}  // namespace oddcycle
