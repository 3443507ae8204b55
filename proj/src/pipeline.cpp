#include "oddcycle/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "oddcycle/certify.hpp"

namespace oddcycle {

const char* to_string(Branch b) {
  switch (b) {
    case Branch::base: return "base";
    case Branch::bipartite_reduction: return "bipartite-reduction";
    case Branch::short_cycle: return "short-cycle";
    case Branch::lemma2_branch: return "lemma2-branch";
    case Branch::selector_branch: return "selector-branch";
    case Branch::signature_collision: return "signature-collision";
    case Branch::oracle_fallback: return "oracle-fallback";
  }
  return "unknown";
}

bool PipelineParams::default_rules() const {
  const PipelineParams defaults;
  return k_of_q == defaults.k_of_q && small_threshold_of_q == defaults.small_threshold_of_q;
}

ColourClasses ColourClasses::from(const EdgeColouring& c) {
  ColourClasses out;
  out.classes = colour_classes(c);
  for (std::size_t i = 0; i < c.colours(); ++i) out.labels.push_back(static_cast<Colour>(i));
  return out;
}

MonoOddCycle oracle_mono_odd_cycle(const ColourClasses& classes) {
  std::optional<OddGirth> best;
  Colour best_colour = 0;
  for (std::size_t i = 0; i < classes.colours(); ++i) {
    auto girth = odd_girth(classes.classes[i], best ? std::optional<std::size_t>(best->length - 1) : std::nullopt);
    if (girth && (!best || girth->length < best->length)) {
      best = std::move(girth);
      best_colour = classes.labels[i];
    }
  }
  if (!best) throw NoMonochromaticOddCycle("every colour class is bipartite; no monochromatic odd cycle exists");
  MonoOddCycle out;
  out.certificate = std::move(best->witness);
  out.certificate.colour = best_colour;
  return out;
}

MonoOddCycle oracle_mono_odd_cycle(const EdgeColouring& c) { return oracle_mono_odd_cycle(ColourClasses::from(c)); }

namespace {

constexpr std::uint64_t kMaxRadius = std::uint64_t{1} << 40;

long double pow2(std::size_t q) { return std::ldexp(1.0L, static_cast<int>(q)); }

std::optional<Colour> class_with_edge(const ColourClasses& classes, Vertex x, Vertex y) {
  for (std::size_t i = 0; i < classes.colours(); ++i)
    if (classes.classes[i].has_edge(x, y)) return classes.labels[i];
  return std::nullopt;
}

class Solver {
 public:
  explicit Solver(const PipelineParams& p) : p_(p) {}

  MonoOddCycle solve(const ColourClasses& level_classes, std::size_t depth) {
    const std::size_t q = level_classes.colours();
    const std::size_t n = level_classes.order();
    TraceLevel rec;
    rec.level = depth;
    rec.n = n;
    rec.q = q;
    rec.eps = p_.eps;
    rec.C = p_.C;
    rec.formula_bound =
        q == 0 ? std::numeric_limits<double>::infinity()
               : static_cast<double>(p_.C * pow2(q) / std::pow(static_cast<long double>(q), 1.0L - p_.eps));

    // (1) Nothing to show: the bound is vacuous or q is tiny.
    if (q <= 2 || rec.formula_bound >= static_cast<double>(n)) {
      rec.steps = {1};
      rec.branch = Branch::base;
      auto out = oracle_mono_odd_cycle(level_classes);
      return finish(std::move(rec), std::move(out), n);
    }

    // (2) A bipartite colour: recurse on its larger side without it.
    std::vector<OddCycleCertificate> seeds(q);
    for (std::size_t i = 0; i < q; ++i) {
      auto chk = check_bipartite(level_classes.classes[i]);
      if (auto* cyc = std::get_if<OddCycleCertificate>(&chk)) {
        seeds[i] = std::move(*cyc);
        continue;
      }
      const Bipartition sides = merge_sides(std::get<std::vector<ComponentBipartition>>(chk));
      const VertexList& keep = sides.side0.size() >= sides.side1.size() ? sides.side0 : sides.side1;
      ColourClasses reduced;
      for (std::size_t j = 0; j < q; ++j) {
        if (j == i) continue;
        reduced.classes.push_back(level_classes.classes[j].restricted_to(keep));
        reduced.labels.push_back(level_classes.labels[j]);
      }
      rec.steps = {2};
      rec.branch = Branch::bipartite_reduction;
      rec.colour = level_classes.labels[i];
      const std::size_t slot = trace_.levels.size();
      trace_.levels.push_back(rec);
      try {
        MonoOddCycle out = solve(reduced, depth + 1);
        trace_.levels[slot].bound_claimed = out.bound_claimed;
        trace_.levels[slot].cycle_length = out.certificate.length();
        return out;
      } catch (const NoMonochromaticOddCycle&) {
        if (p_.fallback == Fallback::fail) throw;
        trace_.levels[slot].fallback_used = true;
        auto out = oracle_mono_odd_cycle(level_classes);
        trace_.levels[slot].cycle_length = out.certificate.length();
        return out;
      }
    }

    // (3) Short-cycle probe.
    const std::uint64_t k = std::clamp<std::uint64_t>(p_.k_of_q(q), 1, kMaxRadius);
    rec.k = k;
    rec.steps = {2, 3};
    const std::size_t short_limit = static_cast<std::size_t>(std::min<std::uint64_t>(2 * k + 1, n));
    std::vector<Decomposition> decs(q);
    std::optional<std::pair<OddCycleCertificate, std::size_t>> shortest;
    auto consider = [&](OddCycleCertificate c, std::size_t i) {
      if (!shortest || c.length() < shortest->first.length()) shortest = {std::move(c), i};
    };
    for (std::size_t i = 0; i < q; ++i) {
      auto outcome = peel(level_classes.classes[i], k);
      if (auto* sc = std::get_if<ShortCycle>(&outcome)) consider(std::move(sc->cycle), i);
      else decs[i] = std::move(std::get<Decomposition>(outcome));
    }
    if (!shortest) {
      for (std::size_t i = 0; i < q; ++i)
        if (auto g = odd_girth(level_classes.classes[i], short_limit)) consider(std::move(g->witness), i);
    }
    if (shortest) {
      rec.branch = Branch::short_cycle;
      MonoOddCycle out;
      out.certificate = std::move(shortest->first);
      out.certificate.colour = level_classes.labels[shortest->second];
      rec.colour = out.certificate.colour;
      return finish(std::move(rec), std::move(out), 2 * k + 1);
    }

    // (4) Every colour peels; pool the deleted sets.
    rec.steps.push_back(4);
    VertexBitset deleted(level_classes.classes.front().order());
    for (const auto& d : decs)
      for (Vertex v : d.deleted) deleted.set(v);
    const VertexList s = deleted.to_list();
    rec.deleted_size = s.size();
    rec.asserts.push_back({"|S| <= n/(2q)", s.size() * 2 * q <= n});

    // (5) Split the components of G_i - S at the small threshold.
    rec.steps.push_back(5);
    const std::uint64_t threshold = p_.small_threshold_of_q(q);
    rec.small_threshold = threshold;
    std::vector<std::vector<ComponentBipartition>> big(q);
    std::vector<VertexBitset> small_bits(q, VertexBitset(deleted.size()));
    for (std::size_t i = 0; i < q; ++i) {
      auto chk = check_bipartite(level_classes.classes[i].without(s));
      if (!std::holds_alternative<std::vector<ComponentBipartition>>(chk))
        throw std::logic_error("pipeline: G_i - S is not bipartite after a successful peel");
      std::size_t small = 0;
      for (auto& comp : std::get<std::vector<ComponentBipartition>>(chk)) {
        if (comp.vertices.size() <= threshold) {
          small += comp.vertices.size();
          for (Vertex v : comp.vertices) small_bits[i].set(v);
        } else {
          big[i].push_back(std::move(comp));
        }
      }
      rec.small_sizes.push_back(small);
      rec.big_counts.push_back(big[i].size());
    }

    // (6) Few vertices in small components: shorten an odd cycle.
    const double tau = static_cast<double>(n) / std::pow(static_cast<double>(q), 1.0 - p_.eps);
    for (std::size_t i = 0; i < q; ++i) {
      if (static_cast<double>(rec.small_sizes[i]) > tau) continue;
      rec.steps.push_back(6);
      rec.branch = Branch::lemma2_branch;
      rec.colour = level_classes.labels[i];
      std::vector<Cluster> clusters;
      for (const auto& comp : decs[i].components) clusters.push_back({comp.vertices, comp.center, comp.radius});
      std::vector<VertexList> targets;
      for (const auto& comp : big[i]) targets.push_back(comp.vertices);
      MonoOddCycle out;
      out.certificate = shorten_cycle(level_classes.classes[i], clusters, targets, k, seeds[i]);
      out.certificate.colour = level_classes.labels[i];
      const std::size_t bound = s.size() + rec.small_sizes[i] + (4 * k + 1) * big[i].size();
      if (out.certificate.length() > bound) throw std::logic_error("pipeline: shortened cycle exceeds its bound");
      return finish(std::move(rec), std::move(out), bound);
    }

    // (7) Every colour has many small-component vertices.
    rec.steps.push_back(7);
    rec.branch = Branch::selector_branch;
    return selector_branch(level_classes, std::move(rec), deleted, big, small_bits, threshold);
  }

  PipelineTrace trace_;

 private:
  MonoOddCycle finish(TraceLevel rec, MonoOddCycle out, std::optional<std::size_t> bound) {
    out.bound_claimed = bound;
    rec.bound_claimed = bound;
    rec.cycle_length = out.certificate.length();
    trace_.levels.push_back(std::move(rec));
    return out;
  }

  MonoOddCycle selector_branch(const ColourClasses& level_classes, TraceLevel rec, const VertexBitset& deleted,
                               const std::vector<std::vector<ComponentBipartition>>& big,
                               const std::vector<VertexBitset>& small_bits, std::uint64_t threshold) {
    const std::size_t q = level_classes.colours();
    VertexBitset kept = level_classes.classes.front().active();
    kept.subtract(deleted);
    const VertexList v_prime = kept.to_list();
    const std::size_t n_prime = v_prime.size();
    rec.n_prime = n_prime;
    std::vector<Vertex> index(kept.size(), 0);
    for (std::size_t t = 0; t < n_prime; ++t) index[v_prime[t]] = static_cast<Vertex>(t);

    SelectorInstance inst;
    inst.n = n_prime;
    std::size_t widest = 0;
    for (std::size_t i = 0; i < q; ++i) {
      SidePair pair;
      for (const auto& comp : big[i]) {
        for (Vertex v : comp.sides.side0) pair.a.push_back(index[v]);
        for (Vertex v : comp.sides.side1) pair.b.push_back(index[v]);
      }
      widest = std::max(widest, pair.a.size() + pair.b.size());
      inst.pairs.push_back(std::move(pair));
    }
    const double delta = n_prime == 0 ? 0.0 : 1.0 - static_cast<double>(widest) / static_cast<double>(n_prime);
    rec.delta = delta;

    const SelectorResult sel = select_complement(inst, DerandomizedSelection{});
    rec.survivors = sel.survivors.size();
    rec.asserts.push_back({"n' >= 2^q/2", static_cast<long double>(n_prime) * 2 >= pow2(q)});
    rec.asserts.push_back({"delta > 1/q^(1-eps)", delta > 1.0 / std::pow(static_cast<double>(q), 1.0 - p_.eps)});
    rec.asserts.push_back({"|L| > q*small_threshold",
                           static_cast<long double>(sel.survivors.size()) > static_cast<long double>(q) * static_cast<long double>(threshold)});

    // Any pair of L not joined inside a small component contradicts the
    // case analysis: its colour class can hold it nowhere.
    VertexBitset l_bits(kept.size());
    for (Vertex t : sel.survivors) l_bits.set(v_prime[t]);
    for (Vertex t : sel.survivors) {
      const Vertex x = v_prime[t];
      VertexBitset blocked(kept.size());
      blocked.set(x);
      for (std::size_t i = 0; i < q; ++i)
        if (small_bits[i].test(x)) blocked |= level_classes.classes[i].row(x) & small_bits[i];
      VertexBitset candidates = l_bits;
      candidates.subtract(blocked);
      if (std::size_t y = candidates.find_first(); y < candidates.size()) {
        const auto yv = static_cast<Vertex>(y);
        const auto colour = class_with_edge(level_classes, x, yv);
        trace_.levels.push_back(rec);
        const std::string reason = colour ? "pair {" + std::to_string(x) + "," + std::to_string(y) +
                                                "} of L has colour " + std::to_string(*colour) +
                                                " yet fits no component structure of that colour"
                                          : "pair {" + std::to_string(x) + "," + std::to_string(y) + "} of L is uncoloured";
        throw InternalInconsistency(reason, x, yv, colour, trace_);
      }
    }

    std::vector<std::string> failed;
    for (const auto& a : rec.asserts)
      if (!a.holds) failed.push_back(a.name);
    if (p_.fallback == Fallback::fail) {
      trace_.levels.push_back(rec);
      std::string what = "selector branch preconditions failed:";
      for (const auto& f : failed) what += " [" + f + "]";
      throw RegimeFailure(what, failed, trace_);
    }
    rec.fallback_used = true;
    return finish(std::move(rec), oracle_mono_odd_cycle(level_classes), std::nullopt);
  }

  const PipelineParams& p_;
};

}  // namespace

MonoOddCycle find_mono_odd_cycle(const ColourClasses& classes, const PipelineParams& p) {
  if (!(p.eps > 0 && p.eps < 1)) throw InputError("pipeline: eps must lie in (0, 1)");
  if (classes.order() < 3) throw InputError("pipeline: need at least 3 vertices");
  Solver solver(p);
  MonoOddCycle out = solver.solve(classes, 0);
  out.trace = std::move(solver.trace_);
  return out;
}

MonoOddCycle find_mono_odd_cycle(const EdgeColouring& c, const PipelineParams& p) {
  if (c.order() < 3) throw InputError("pipeline: need at least 3 vertices");
  return find_mono_odd_cycle(ColourClasses::from(c), p);
}

Reduction reduce_bipartite_colour(const EdgeColouring& c, Colour i, const Bipartition& b) {
  if (i >= c.colours()) throw InputError("reduce_bipartite_colour: colour out of range");
  const std::size_t n = c.order();
  std::vector<int> side(n, -1);
  for (int s = 0; s < 2; ++s)
    for (Vertex v : s == 0 ? b.side0 : b.side1) {
      if (v >= n || side[v] != -1) throw InputError("reduce_bipartite_colour: bipartition repeats or leaves the vertex set");
      side[v] = s;
    }
  for (std::size_t v = 0; v < n; ++v)
    if (side[v] == -1) throw InputError("reduce_bipartite_colour: bipartition misses vertex " + std::to_string(v));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (side[u] == side[v] && c.colour(static_cast<Vertex>(u), static_cast<Vertex>(v)) == i)
        throw InputError("reduce_bipartite_colour: colour " + std::to_string(i) + " edge inside a side");

  Reduction out;
  out.vertex_map = b.side0.size() >= b.side1.size() ? b.side0 : b.side1;
  std::sort(out.vertex_map.begin(), out.vertex_map.end());
  const std::size_t m = out.vertex_map.size();
  out.colouring = EdgeColouring(m, c.colours() - 1);
  out.colouring.header.provenance = c.header.provenance + " reduced by colour " + std::to_string(i);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b2 = a + 1; b2 < m; ++b2) {
      Colour col = c.colour(out.vertex_map[a], out.vertex_map[b2]);
      out.colouring.set_colour(static_cast<Vertex>(a), static_cast<Vertex>(b2), col > i ? col - 1 : col);
    }
  return out;
}

}  // namespace oddcycle
