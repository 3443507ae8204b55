#include "oddcycle/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "oddcycle/random.hpp"

namespace oddcycle {

namespace {

// Shortest odd closed walk length over all roots for a graph given by <= 64
// bit rows; 0 when bipartite. Stops once nothing shorter than `cap` remains.
std::size_t mask_odd_girth(const std::uint64_t* adj, std::size_t n, std::size_t cap) {
  std::size_t best = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (std::popcount(adj[root]) < 2) continue;
    const std::uint64_t bit = std::uint64_t{1} << root;
    std::uint64_t frontier = bit, seen[2] = {bit, 0};
    for (std::size_t d = 1; d < (best ? best : cap); ++d) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      const int p = static_cast<int>(d & 1);
      if (p == 1 && (next & bit)) {
        best = d;
        break;
      }
      next &= ~seen[p];
      if (!next) break;
      seen[p] |= next;
      frontier = next;
    }
    if (best == 3) break;
  }
  return best;
}

struct ClassScore {
  std::size_t girth;  // n + 1 when bipartite
  std::size_t tight;  // vertices whose shortest odd walk equals girth
};

ClassScore score_class(const Graph& g) {
  ClassScore s{g.order() + 1, 0};
  for (const auto& w : shortest_odd_walks(g)) {
    if (!w) continue;
    if (*w < s.girth) s = {*w, 0};
    if (*w == s.girth) ++s.tight;
  }
  return s;
}

}  // namespace

std::size_t colouring_objective(const EdgeColouring& c) {
  std::size_t best = c.order() + 1;
  for (const Graph& g : colour_classes(c))
    if (auto og = odd_girth(g, best - 1)) best = std::min(best, og->length);
  return best;
}

ExhaustiveResult exhaustive_L(std::size_t q, std::size_t n) {
  if (q == 0) throw InputError("lq-exact: q must be positive");
  if (q > kMaxColours) throw InputError("lq-exact: too many colours");
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  const long double needed = pairs == 0 ? 1.0L : std::pow(static_cast<long double>(q), static_cast<long double>(pairs - 1));
  if (needed > static_cast<long double>(kMaxEnumeration))
    throw InfeasibleEnumeration("lq-exact: enumeration would visit " + std::to_string(static_cast<double>(needed)) +
                                    " colourings, limit is " + std::to_string(kMaxEnumeration),
                                needed);

  EdgeColouring c(n, q);
  auto& table = c.mutable_table();
  ExhaustiveResult res;
  std::size_t best = 0;
  auto evaluate = [&]() -> std::size_t {
    if (n > 64) return colouring_objective(c);
    std::vector<std::uint64_t> adj(q * n, 0);
    std::size_t idx = 0;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v, ++idx) {
        std::uint64_t* rows = adj.data() + table[idx] * n;
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
      }
    std::size_t m = n + 1;
    for (std::size_t i = 0; i < q; ++i)
      if (std::size_t g = mask_odd_girth(adj.data() + i * n, n, m); g) m = std::min(m, g);
    return m;
  };

  // Odometer over pairs 1.. with pair 0 ({0,1}) pinned to colour 0.
  for (;;) {
    ++res.enumerated;
    const std::size_t m = evaluate();
    if (m > best) {
      best = m;
      res.witness = c;
      if (best == n + 1) break;
    }
    std::size_t pos = 1;
    while (pos < pairs && table[pos] + 1u == q) table[pos++] = 0;
    if (pos >= pairs) break;
    ++table[pos];
  }
  if (best <= n) res.value = best;
  res.witness.header.provenance = "lq-exact q=" + std::to_string(q) + " n=" + std::to_string(n);
  return res;
}

AnnealResult anneal_search(std::size_t q, std::size_t n, std::size_t iterations, std::uint64_t seed) {
  if (q == 0 || n < 2) throw InputError("search: need q >= 1 and n >= 2");
  if (iterations == 0) throw InputError("search: iterations must be positive");

  EdgeColouring cur;
  if (q < 64 && n <= (std::size_t{1} << q)) {
    const EdgeColouring full = binary_colouring(q);
    cur = EdgeColouring(n, q);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) cur.set_colour(u, v, full.colour(u, v));
  } else {
    cur = random_colouring(n, q, seed);
  }

  std::vector<ClassScore> scores;
  for (const Graph& g : colour_classes(cur)) scores.push_back(score_class(g));
  const double weight = static_cast<double>(q * n + 1);
  auto energy = [&](std::size_t* objective) {
    std::size_t girth = n + 1, tight = 0;
    for (const auto& s : scores) girth = std::min(girth, s.girth);
    for (const auto& s : scores)
      if (s.girth == girth && girth <= n) tight += s.tight;
    if (objective) *objective = girth;
    return static_cast<double>(girth) * weight - static_cast<double>(tight);
  };

  AnnealResult res;
  double e = energy(&res.objective);
  res.colouring = cur;
  if (q == 1 || res.objective == n + 1) {
    res.colouring.header.provenance = "search seed=" + std::to_string(seed);
    return res;
  }

  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

  Rng rng(seed);
  const double t_start = 2.0 * weight, t_end = 0.05;
  for (std::size_t it = 0; it < iterations; ++it) {
    const double t = t_start * std::pow(t_end / t_start, static_cast<double>(it) / static_cast<double>(iterations));
    const auto [u, v] = pairs[uniform_below(rng, pairs.size())];
    const Colour old = cur.colour(u, v);
    Colour fresh = static_cast<Colour>(uniform_below(rng, q - 1));
    if (fresh >= old) ++fresh;

    cur.set_colour(u, v, fresh);
    const ClassScore keep_old = scores[old], keep_new = scores[fresh];
    scores[old] = score_class(colour_class(cur, old));
    scores[fresh] = score_class(colour_class(cur, fresh));
    std::size_t obj;
    const double e2 = energy(&obj);
    const double gain = e2 - e;
    if (gain >= 0 || uniform_unit(rng) < std::exp(gain / t)) {
      e = e2;
      ++res.accepted;
      if (obj > res.objective) {
        res.objective = obj;
        res.colouring = cur;
        res.best_iteration = it + 1;
        if (obj == n + 1) break;
      }
    } else {
      cur.set_colour(u, v, old);
      scores[old] = keep_old;
      scores[fresh] = keep_new;
    }
  }
  res.colouring.header.provenance = "search seed=" + std::to_string(seed);
  return res;
}

}  // namespace oddcycle
