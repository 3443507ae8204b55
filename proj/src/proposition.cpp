#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "oddcycle/pipeline.hpp"

namespace oddcycle {

Rational Rational::parse(const std::string& text) {
  auto bad = [&]() { return InputError("cannot parse rational '" + text + "'"); };
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    if (s.empty() || s.size() > 15 || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); })) throw bad();
    return std::stoll(s);
  };
  Rational r;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    r.num = parse_int(text.substr(0, slash));
    r.den = parse_int(text.substr(slash + 1));
  } else if (auto dot = text.find('.'); dot != std::string::npos) {
    const std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (frac.empty()) throw bad();
    r.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) r.den *= 10;
    r.num = (whole.empty() ? 0 : parse_int(whole)) * r.den + parse_int(frac);
  } else {
    r.num = parse_int(text);
    r.den = 1;
  }
  if (r.den == 0) throw bad();
  const std::int64_t g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

namespace {

void check_delta(Rational delta) {
  if (delta.num <= 0 || delta.den <= 0 || delta.num > delta.den) throw InputError("proposition: delta must lie in (0, 1]");
}

template <class T>
T ceil_div(T a, T b) {
  return (a + b - 1) / b;
}

}  // namespace

std::size_t proposition_radius(std::size_t q, Rational delta) {
  check_delta(delta);
  const auto num = static_cast<unsigned __int128>(2 * q * (q + 1)) * static_cast<unsigned __int128>(delta.den);
  return static_cast<std::size_t>(ceil_div<unsigned __int128>(num, static_cast<unsigned __int128>(delta.num)));
}

std::size_t proposition_min_order(std::size_t q, Rational delta) {
  check_delta(delta);
  if (q > 40) throw InputError("proposition: q too large");
  const auto scaled = static_cast<unsigned __int128>(delta.den + delta.num) << q;
  return static_cast<std::size_t>(ceil_div<unsigned __int128>(scaled, static_cast<unsigned __int128>(delta.den)));
}

Signatures signatures(const ColourClasses& classes, const VertexList& deleted, const std::vector<Bipartition>& bipartitions) {
  const std::size_t q = classes.colours();
  if (bipartitions.size() != q) throw InputError("signatures: one bipartition per colour required");
  if (q > 64) throw InputError("signatures: at most 64 colours");
  Signatures out;
  if (classes.classes.empty()) return out;

  const std::size_t order = classes.classes.front().order();
  VertexBitset kept = classes.classes.front().active();
  for (Vertex v : deleted)
    if (v < order) kept.reset(v);
  out.vertices = kept.to_list();
  out.bits.assign(out.vertices.size(), 0);
  std::vector<std::size_t> slot(order, 0);
  for (std::size_t t = 0; t < out.vertices.size(); ++t) slot[out.vertices[t]] = t;

  for (std::size_t i = 0; i < q; ++i) {
    const Graph h = classes.classes[i].with_active(kept);
    std::vector<int> side(order, -1);
    for (int s = 0; s < 2; ++s)
      for (Vertex v : s == 0 ? bipartitions[i].side0 : bipartitions[i].side1) {
        if (v >= order || !kept.test(v) || side[v] != -1) throw InputError("signatures: bipartition of colour " + std::to_string(i) + " is invalid");
        side[v] = s;
      }
    for (Vertex v : out.vertices) {
      if (side[v] == -1) throw InputError("signatures: bipartition of colour " + std::to_string(i) + " misses vertex " + std::to_string(v));
      h.neighbours(v).for_each([&](Vertex w) {
        if (side[w] == side[v]) throw InputError("signatures: colour " + std::to_string(i) + " edge inside a side");
      });
    }
    for (const auto& comp : connected_components(h)) {
      const bool flip = side[comp.front()] == 1;
      for (Vertex v : comp)
        if ((side[v] == 1) != flip) out.bits[slot[v]] |= std::uint64_t{1} << i;
    }
  }
  return out;
}

Signatures signatures(const EdgeColouring& c, const VertexList& deleted, const std::vector<Bipartition>& bipartitions) {
  if (c.colours() == 0) {
    if (!bipartitions.empty()) throw InputError("signatures: one bipartition per colour required");
    VertexBitset kept(c.order(), true);
    for (Vertex v : deleted)
      if (v < c.order()) kept.reset(v);
    Signatures out;
    out.vertices = kept.to_list();
    out.bits.assign(out.vertices.size(), 0);
    return out;
  }
  return signatures(ColourClasses::from(c), deleted, bipartitions);
}

MonoOddCycle proposition_pipeline(const ColourClasses& classes, std::size_t q, Rational delta) {
  const std::size_t n = classes.order();
  if (classes.colours() > q) throw InputError("proposition: colouring uses more than q colours");
  const std::size_t min_order = proposition_min_order(q, delta);
  if (n < min_order) throw InputError("proposition: need n >= " + std::to_string(min_order) + ", got " + std::to_string(n));
  const std::size_t k = proposition_radius(q, delta);

  TraceLevel rec;
  rec.n = n;
  rec.q = q;
  rec.k = k;
  rec.steps = {3};

  std::vector<Decomposition> decs;
  for (std::size_t i = 0; i < classes.colours(); ++i) {
    auto outcome = peel(classes.classes[i], k);
    if (auto* sc = std::get_if<ShortCycle>(&outcome)) {
      MonoOddCycle out;
      out.certificate = std::move(sc->cycle);
      out.certificate.colour = classes.labels[i];
      rec.branch = Branch::short_cycle;
      rec.colour = classes.labels[i];
      rec.bound_claimed = 2 * k + 1;
      rec.cycle_length = out.certificate.length();
      out.bound_claimed = 2 * k + 1;
      out.trace.levels.push_back(std::move(rec));
      return out;
    }
    decs.push_back(std::move(std::get<Decomposition>(outcome)));
  }

  // Every colour peeled: G_i - S is bipartite for all i, so two survivors with
  // equal signatures would span an edge no colour can hold.
  rec.steps.push_back(4);
  VertexBitset deleted(classes.classes.empty() ? 0 : classes.classes.front().order());
  for (const auto& d : decs)
    for (Vertex v : d.deleted) deleted.set(v);
  const VertexList s = deleted.to_list();
  rec.deleted_size = s.size();
  std::vector<Bipartition> sides;
  for (const auto& g : classes.classes) {
    auto chk = check_bipartite(g.without(s));
    if (!std::holds_alternative<std::vector<ComponentBipartition>>(chk))
      throw std::logic_error("proposition: G_i - S is not bipartite after a successful peel");
    sides.push_back(merge_sides(std::get<std::vector<ComponentBipartition>>(chk)));
  }
  const Signatures sig = signatures(classes, s, sides);
  rec.survivors = sig.vertices.size();
  rec.asserts.push_back({"|V \\ S| > 2^q", static_cast<long double>(sig.vertices.size()) > std::ldexp(1.0L, static_cast<int>(q))});

  std::vector<std::size_t> order(sig.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sig.bits[a] < sig.bits[b]; });
  for (std::size_t t = 1; t < order.size(); ++t) {
    if (sig.bits[order[t]] != sig.bits[order[t - 1]]) continue;
    const Vertex x = sig.vertices[order[t - 1]], y = sig.vertices[order[t]];
    std::optional<Colour> colour;
    for (std::size_t i = 0; i < classes.colours(); ++i)
      if (classes.classes[i].has_edge(x, y)) colour = classes.labels[i];
    rec.branch = Branch::signature_collision;
    PipelineTrace trace;
    trace.levels.push_back(rec);
    throw InternalInconsistency("vertices " + std::to_string(x) + " and " + std::to_string(y) + " share a signature" +
                                    (colour ? " but their edge has colour " + std::to_string(*colour) : std::string(" and their edge is uncoloured")),
                                x, y, colour, std::move(trace));
  }

  rec.branch = Branch::oracle_fallback;
  rec.fallback_used = true;
  MonoOddCycle out = oracle_mono_odd_cycle(classes);
  rec.cycle_length = out.certificate.length();
  out.trace.levels.push_back(std::move(rec));
  return out;
}

MonoOddCycle proposition_pipeline(const EdgeColouring& c, std::size_t q, Rational delta) {
  return proposition_pipeline(ColourClasses::from(c), q, delta);
}

}  // namespace oddcycle
