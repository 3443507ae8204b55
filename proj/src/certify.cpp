#include "oddcycle/certify.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace oddcycle {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::parity: return "parity";
    case ViolationKind::adjacency: return "adjacency";
    case ViolationKind::colour_mismatch: return "colour-mismatch";
    case ViolationKind::duplicate_vertex: return "duplicate-vertex";
    case ViolationKind::cover: return "cover";
    case ViolationKind::radius: return "radius";
    case ViolationKind::side_conflict: return "side-conflict";
    case ViolationKind::bound: return "bound";
  }
  return "unknown";
}

namespace {

Violation violation(ViolationKind kind, std::vector<std::size_t> detail, std::string message) {
  return Violation{kind, std::move(detail), std::move(message)};
}

// Dense copy of the active adjacency.
class Matrix {
 public:
  explicit Matrix(const Graph& g) : n_(g.order()), cells_(n_ * n_, 0), active_(n_, 0) {
    for (std::size_t u = 0; u < n_; ++u) {
      active_[u] = g.is_active(static_cast<Vertex>(u));
      for (std::size_t v = 0; v < n_; ++v) cells_[u * n_ + v] = g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  std::size_t n() const { return n_; }
  bool edge(std::size_t u, std::size_t v) const { return cells_[u * n_ + v] != 0; }
  bool active(std::size_t v) const { return active_[v] != 0; }

 private:
  std::size_t n_;
  std::vector<char> cells_;
  std::vector<char> active_;
};

Verdict check_cycle_shape(const VertexList& vs, std::size_t n) {
  if (vs.size() < 3 || vs.size() % 2 == 0)
    return violation(ViolationKind::parity, {vs.size()}, "cycle length " + std::to_string(vs.size()) + " is not odd and >= 3");
  std::vector<char> seen(n, 0);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] >= n) return violation(ViolationKind::adjacency, {i}, "vertex " + std::to_string(vs[i]) + " out of range");
    if (seen[vs[i]]) return violation(ViolationKind::duplicate_vertex, {i}, "vertex " + std::to_string(vs[i]) + " repeats");
    seen[vs[i]] = 1;
  }
  return std::nullopt;
}

std::size_t peel_size_bound(std::size_t n, std::size_t k) {
  if (n <= 1 || k == 0) return 0;
  const double dn = static_cast<double>(n);
  const double lg = std::log2(dn);
  double raw;
  if (static_cast<double>(k) >= std::ceil(lg - 1e-12)) raw = lg / static_cast<double>(k) * dn;
  else raw = (1.0 - std::pow(dn, -1.0 / static_cast<double>(k))) * dn;
  return static_cast<std::size_t>(std::ceil(raw - 1e-9));
}

}  // namespace

Verdict verify_mono_odd_cycle(const EdgeColouring& c, const OddCycleCertificate& cert) {
  const auto& vs = cert.vertices;
  if (auto v = check_cycle_shape(vs, c.order())) return v;
  if (cert.colour && *cert.colour >= c.colours())
    return violation(ViolationKind::colour_mismatch, {*cert.colour}, "stated colour out of range");
  const std::size_t n = c.order();
  auto colour_of = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(c.table()[a * n - a * (a + 1) / 2 + (b - a - 1)]);
  };
  const std::size_t expected = cert.colour ? *cert.colour : colour_of(vs[0], vs[1]);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::size_t got = colour_of(vs[i], vs[(i + 1) % vs.size()]);
    if (got != expected)
      return violation(ViolationKind::colour_mismatch, {i},
                       "edge at position " + std::to_string(i) + " has colour " + std::to_string(got) + ", expected " + std::to_string(expected));
  }
  return std::nullopt;
}

Verdict verify_odd_cycle(const Graph& g, const OddCycleCertificate& cert) {
  const auto& vs = cert.vertices;
  if (auto v = check_cycle_shape(vs, g.order())) return v;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (!g.has_edge(vs[i], vs[(i + 1) % vs.size()]))
      return violation(ViolationKind::adjacency, {i}, "no edge between positions " + std::to_string(i) + " and " + std::to_string((i + 1) % vs.size()));
  return std::nullopt;
}

Verdict verify_bipartition(const Graph& g, const Bipartition& b) {
  const std::size_t n = g.order();
  std::vector<int> side(n, -1);
  for (int s = 0; s < 2; ++s) {
    for (Vertex v : s == 0 ? b.side0 : b.side1) {
      if (v >= n || !g.is_active(v)) return violation(ViolationKind::cover, {v}, "side vertex " + std::to_string(v) + " is not active");
      if (side[v] != -1) return violation(ViolationKind::cover, {v}, "vertex " + std::to_string(v) + " is on both sides");
      side[v] = s;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (g.is_active(static_cast<Vertex>(v)) && side[v] == -1) return violation(ViolationKind::cover, {v}, "vertex " + std::to_string(v) + " uncovered");
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (side[u] != -1 && side[u] == side[v] && g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
        return violation(ViolationKind::side_conflict, {u, v}, "edge inside one side");
  return std::nullopt;
}

Verdict verify_peel(const Graph& g, std::size_t k, const PeelOutcome& outcome) {
  if (const auto* sc = std::get_if<ShortCycle>(&outcome)) {
    if (auto v = verify_odd_cycle(g, sc->cycle)) return v;
    if (sc->cycle.length() > 2 * k + 1)
      return violation(ViolationKind::bound, {sc->cycle.length()}, "short cycle longer than 2k+1");
    return std::nullopt;
  }
  const auto& dec = std::get<Decomposition>(outcome);
  const Matrix m(g);
  const std::size_t n = m.n();
  constexpr std::size_t kDeleted = static_cast<std::size_t>(-2);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(n, kNone);

  auto claim = [&](Vertex v, std::size_t who) -> Verdict {
    if (v >= n || !m.active(v)) return violation(ViolationKind::cover, {v}, "vertex " + std::to_string(v) + " is not active");
    if (owner[v] != kNone) return violation(ViolationKind::cover, {v}, "vertex " + std::to_string(v) + " listed twice");
    owner[v] = who;
    return std::nullopt;
  };
  for (Vertex v : dec.deleted)
    if (auto bad = claim(v, kDeleted)) return bad;
  for (std::size_t c = 0; c < dec.components.size(); ++c)
    for (Vertex v : dec.components[c].vertices)
      if (auto bad = claim(v, c)) return bad;
  for (std::size_t v = 0; v < n; ++v)
    if (m.active(v) && owner[v] == kNone) return violation(ViolationKind::cover, {v}, "vertex " + std::to_string(v) + " not covered");

  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (m.edge(u, v) && owner[u] != kDeleted && owner[v] != kDeleted && owner[u] != owner[v])
        return violation(ViolationKind::cover, {u, v}, "edge joins two components");

  for (std::size_t c = 0; c < dec.components.size(); ++c) {
    const auto& comp = dec.components[c];
    std::vector<int> side(n, -1);
    for (Vertex v : comp.sides.side0)
      if (v < n) side[v] = 0;
    for (Vertex v : comp.sides.side1) {
      if (v < n && side[v] == 0) return violation(ViolationKind::cover, {c, v}, "vertex on both sides");
      if (v < n) side[v] = 1;
    }
    for (Vertex v : comp.vertices)
      if (side[v] == -1) return violation(ViolationKind::cover, {c, v}, "component vertex missing from bipartition");
    if (comp.sides.side0.size() + comp.sides.side1.size() != comp.vertices.size())
      return violation(ViolationKind::cover, {c}, "bipartition has vertices outside its component");
    for (Vertex u : comp.vertices)
      for (Vertex v : comp.vertices)
        if (u < v && m.edge(u, v) && side[u] == side[v]) return violation(ViolationKind::side_conflict, {u, v}, "edge inside one side");

    if (comp.center >= n || owner[comp.center] != c) return violation(ViolationKind::radius, {c}, "center outside its component");
    if (comp.radius > k) return violation(ViolationKind::radius, {c, comp.radius}, "claimed radius exceeds k");
    std::vector<std::size_t> dist(n, kNone);
    std::deque<std::size_t> queue{comp.center};
    dist[comp.center] = 0;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (Vertex v : comp.vertices)
        if (dist[v] == kNone && m.edge(u, v)) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
    }
    for (Vertex v : comp.vertices)
      if (dist[v] == kNone || dist[v] > comp.radius)
        return violation(ViolationKind::radius, {c, v}, "vertex " + std::to_string(v) + " beyond claimed radius");
  }

  std::size_t active = 0;
  for (std::size_t v = 0; v < n; ++v) active += m.active(v);
  const std::size_t limit = peel_size_bound(active, k);
  if (dec.deleted.size() > limit)
    return violation(ViolationKind::bound, {dec.deleted.size(), limit}, "|S| = " + std::to_string(dec.deleted.size()) + " exceeds " + std::to_string(limit));
  return std::nullopt;
}

Verdict verify_selector(const SelectorInstance& inst, const SelectorResult& res, std::size_t target) {
  const std::size_t n = inst.n;
  if (res.choices.size() != inst.pairs.size()) return violation(ViolationKind::cover, {res.choices.size()}, "one choice per pair required");

  std::vector<char> in_l(n, 0);
  for (Vertex x : res.survivors) {
    if (x >= n) return violation(ViolationKind::cover, {x}, "L holds " + std::to_string(x) + " outside [n]");
    in_l[x] = 1;
  }
  for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
    bool hits_a = false, hits_b = false;
    for (Vertex x : inst.pairs[i].a) hits_a = hits_a || (x < n && in_l[x]);
    for (Vertex x : inst.pairs[i].b) hits_b = hits_b || (x < n && in_l[x]);
    if (hits_a && hits_b) return violation(ViolationKind::side_conflict, {i}, "L meets both sides of pair " + std::to_string(i));
  }

  std::vector<char> in_u(n, 0);
  for (std::size_t i = 0; i < inst.pairs.size(); ++i)
    for (Vertex x : res.choices[i] == Side::A ? inst.pairs[i].a : inst.pairs[i].b)
      if (x < n) in_u[x] = 1;
  VertexList u, l;
  for (std::size_t x = 0; x < n; ++x) (in_u[x] ? u : l).push_back(static_cast<Vertex>(x));
  VertexList got_u = res.chosen_union, got_l = res.survivors;
  std::sort(got_u.begin(), got_u.end());
  std::sort(got_l.begin(), got_l.end());
  if (got_u != u) return violation(ViolationKind::cover, {}, "U is not the union of the chosen sides");
  if (got_l != l) return violation(ViolationKind::cover, {}, "L is not the complement of U");

  if (l.size() < target)
    return violation(ViolationKind::bound, {l.size(), target}, "|L| = " + std::to_string(l.size()) + " below target " + std::to_string(target));
  return std::nullopt;
}

}  // namespace oddcycle
