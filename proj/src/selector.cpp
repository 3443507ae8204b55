#include <algorithm>
#include <cmath>
#include <string>

#include "oddcycle/errors.hpp"
#include "oddcycle/lemmas.hpp"
#include "oddcycle/random.hpp"

namespace oddcycle {

namespace {

// Exact sum of terms 2^-r held as a count per exponent.
class DyadicSum {
 public:
  explicit DyadicSum(std::size_t max_exp) : counts_(max_exp + 1, 0) {}

  void add(std::size_t exp) { ++counts_[exp]; }

  // Carry so that every count above exponent 0 is 0 or 1.
  void normalize() {
    for (std::size_t r = counts_.size() - 1; r > 0; --r) {
      counts_[r - 1] += counts_[r] / 2;
      counts_[r] %= 2;
    }
  }

  friend bool operator>=(DyadicSum a, DyadicSum b) {
    a.normalize();
    b.normalize();
    for (std::size_t r = 0; r < a.counts_.size(); ++r)
      if (a.counts_[r] != b.counts_[r]) return a.counts_[r] > b.counts_[r];
    return true;
  }

 private:
  std::vector<std::size_t> counts_;
};

}  // namespace

void validate_instance(const SelectorInstance& inst) {
  VertexBitset in_a(inst.n);
  for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
    in_a.clear();
    for (Vertex x : inst.pairs[i].a) {
      if (x >= inst.n) throw InputError("selector: pair " + std::to_string(i) + " has element " + std::to_string(x) + " outside [n]");
      in_a.set(x);
    }
    for (Vertex x : inst.pairs[i].b) {
      if (x >= inst.n) throw InputError("selector: pair " + std::to_string(i) + " has element " + std::to_string(x) + " outside [n]");
      if (in_a.test(x)) throw InputError("selector: pair " + std::to_string(i) + " sides share element " + std::to_string(x));
    }
  }
}

SelectorStats selector_stats(const SelectorInstance& inst) {
  SelectorStats s;
  s.membership.assign(inst.n, 0);
  for (const auto& p : inst.pairs) {
    for (Vertex x : p.a) ++s.membership[x];
    for (Vertex x : p.b) ++s.membership[x];
  }
  for (auto d : s.membership) s.total += d;
  s.average = inst.n == 0 ? 0.0 : static_cast<double>(s.total) / static_cast<double>(inst.n);
  return s;
}

std::size_t expectation_bound(const SelectorInstance& inst) {
  if (inst.n == 0) return 0;
  const SelectorStats s = selector_stats(inst);
  // n * 2^(-D/n) is an integer only when n divides D; then it is exact.
  if (s.total % inst.n == 0) {
    const std::size_t shift = s.total / inst.n;
    if (shift >= 64) return 1;
    const std::size_t div = std::size_t{1} << shift;
    return (inst.n + div - 1) / div;
  }
  const long double v = static_cast<long double>(inst.n) * std::exp2(-static_cast<long double>(s.total) / static_cast<long double>(inst.n));
  return static_cast<std::size_t>(std::ceil(v));
}

SelectorResult apply_choices(const SelectorInstance& inst, const std::vector<Side>& choices) {
  if (choices.size() != inst.pairs.size()) throw InputError("selector: choice vector length mismatch");
  VertexBitset removed(inst.n);
  for (std::size_t i = 0; i < choices.size(); ++i)
    for (Vertex x : choices[i] == Side::A ? inst.pairs[i].a : inst.pairs[i].b) removed.set(x);
  SelectorResult res;
  res.choices = choices;
  res.chosen_union = removed.to_list();
  VertexBitset alive(inst.n, true);
  alive.subtract(removed);
  res.survivors = alive.to_list();
  return res;
}

namespace {

SelectorResult derandomized(const SelectorInstance& inst) {
  const std::size_t q = inst.pairs.size();
  std::vector<std::size_t> remaining = selector_stats(inst).membership;
  VertexBitset alive(inst.n, true);
  std::vector<Side> choices;
  choices.reserve(q);
  for (std::size_t i = 0; i < q; ++i) {
    const auto& [a, b] = inst.pairs[i];
    for (Vertex x : a) --remaining[x];
    for (Vertex x : b) --remaining[x];
    // Taking A keeps B's live weight and vice versa.
    DyadicSum keep_if_a(q), keep_if_b(q);
    for (Vertex x : b)
      if (alive.test(x)) keep_if_a.add(remaining[x]);
    for (Vertex x : a)
      if (alive.test(x)) keep_if_b.add(remaining[x]);
    const Side side = keep_if_a >= keep_if_b ? Side::A : Side::B;
    for (Vertex x : side == Side::A ? a : b) alive.reset(x);
    choices.push_back(side);
  }
  return apply_choices(inst, choices);
}

SelectorResult randomized(const SelectorInstance& inst, const RandomizedSelection& mode) {
  const std::size_t target = mode.target.value_or(expectation_bound(inst));
  Rng rng(mode.seed);
  std::vector<Side> choices(inst.pairs.size());
  for (std::size_t attempt = 0; attempt < mode.max_tries; ++attempt) {
    for (auto& c : choices) c = (rng() >> 63) ? Side::B : Side::A;
    auto res = apply_choices(inst, choices);
    if (res.survivors.size() >= target) return res;
  }
  throw RetryExhausted("selector: no choice vector reached |L| >= " + std::to_string(target) + " in " +
                       std::to_string(mode.max_tries) + " tries");
}

}  // namespace

SelectorResult select_complement(const SelectorInstance& inst, const SelectorMode& mode) {
  validate_instance(inst);
  if (const auto* r = std::get_if<RandomizedSelection>(&mode)) return randomized(inst, *r);
  return derandomized(inst);
}

}  // namespace oddcycle
