#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "oddcycle/errors.hpp"
#include "oddcycle/lemmas.hpp"

namespace oddcycle {

namespace {

std::size_t ceil_log2(std::size_t n) {
  std::size_t t = 0;
  while ((std::size_t{1} << t) < n) ++t;
  return t;
}

// Ceiling that tolerates floating error just above an integer.
std::size_t slack_ceil(double x) { return x <= 0 ? 0 : static_cast<std::size_t>(std::ceil(x - 1e-9)); }

constexpr double kRelSlack = 1e-12;

}  // namespace

ArrestRule arrest_rule(std::size_t n, std::size_t k) {
  if (k == 0) throw InputError("peel: radius budget k must be at least 1");
  ArrestRule rule{PeelMode::standard, n, k, 0.0, 0};
  if (n <= 1) return rule;
  const double lg = std::log2(static_cast<double>(n));
  const double dn = static_cast<double>(n);
  if (k >= ceil_log2(n)) {
    rule.factor = lg / static_cast<double>(k);
    rule.deleted_bound = slack_ceil(rule.factor * dn);
  } else {
    rule.mode = PeelMode::generalized;
    const double root = std::pow(dn, 1.0 / static_cast<double>(k));
    rule.factor = root - 1.0;
    rule.deleted_bound = slack_ceil((1.0 - 1.0 / root) * dn);
  }
  return rule;
}

bool ArrestRule::arrests(std::size_t layer_size, std::size_t ball_size) const {
  const double layer = static_cast<double>(layer_size);
  const double ball = static_cast<double>(ball_size);
  if (mode == PeelMode::standard) {
    // |N_j| * k <= |N_{<=j-1}| * log2 n
    const double lg = n <= 1 ? 0.0 : std::log2(static_cast<double>(n));
    return layer * static_cast<double>(k) <= ball * lg * (1 + kRelSlack);
  }
  return layer <= ball * factor * (1 + kRelSlack);
}

PeelOutcome peel(const Graph& g, std::size_t k) {
  const ArrestRule rule = arrest_rule(g.active_count(), k);
  Decomposition dec;
  VertexBitset remaining = g.active();
  VertexBitset deleted(g.order());

  for (std::size_t x = remaining.find_first(); x < remaining.size(); x = remaining.find_first()) {
    const Graph view = g.with_active(remaining);
    LayerGrower grower(view, static_cast<Vertex>(x));

    std::size_t arrest = 0;
    bool layer_present = false;
    for (std::size_t j = 1; j <= k; ++j) {
      layer_present = grower.grow();
      const std::size_t layer_size = layer_present ? grower.ball().layers[j].size() : 0;
      if (rule.arrests(layer_size, grower.ball().cumulative[j - 1])) {
        arrest = j;
        break;
      }
    }
    if (arrest == 0)
      throw std::logic_error("peel: no arresting layer within k = " + std::to_string(k) + "; growth bound violated");

    const std::size_t radius = arrest - 1;
    if (auto conflict = grower.find_layer_conflict(radius)) return ShortCycle{grower.cycle_through(*conflict)};

    PeelComponent comp;
    comp.center = static_cast<Vertex>(x);
    comp.radius = radius;
    const auto& layers = grower.ball().layers;
    for (std::size_t i = 0; i <= radius; ++i) {
      auto& side = (i % 2 == 0) ? comp.sides.side0 : comp.sides.side1;
      side.insert(side.end(), layers[i].begin(), layers[i].end());
      comp.vertices.insert(comp.vertices.end(), layers[i].begin(), layers[i].end());
      for (Vertex v : layers[i]) remaining.reset(v);
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    std::sort(comp.sides.side0.begin(), comp.sides.side0.end());
    std::sort(comp.sides.side1.begin(), comp.sides.side1.end());
    if (layer_present) {
      for (Vertex v : layers[arrest]) {
        deleted.set(v);
        remaining.reset(v);
      }
    }
    dec.components.push_back(std::move(comp));
  }
  dec.deleted = deleted.to_list();
  return dec;
}

std::variant<ShortCycle, VertexList> independent_set_via_peel(const Graph& g, std::size_t k) {
  auto outcome = peel(g, k);
  if (auto* sc = std::get_if<ShortCycle>(&outcome)) return *sc;
  VertexList out;
  for (const auto& comp : std::get<Decomposition>(outcome).components) {
    const auto& side = comp.sides.side0.size() >= comp.sides.side1.size() ? comp.sides.side0 : comp.sides.side1;
    out.insert(out.end(), side.begin(), side.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oddcycle
