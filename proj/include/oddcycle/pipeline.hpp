#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddcycle/colouring.hpp"
#include "oddcycle/errors.hpp"
#include "oddcycle/graph.hpp"
#include "oddcycle/lemmas.hpp"
#include "oddcycle/size_rule.hpp"

namespace oddcycle {

// Colour classes over a common vertex mask. A complete colouring puts every
// active pair in exactly one class; the pipeline treats a pair in no class as
// an uncoloured edge.
struct ColourClasses {
  std::vector<Graph> classes;
  std::vector<Colour> labels;  // original colour of each class

  static ColourClasses from(const EdgeColouring& c);
  std::size_t colours() const noexcept { return classes.size(); }
  std::size_t order() const noexcept { return classes.empty() ? 0 : classes.front().active_count(); }
};

enum class Fallback { oracle, fail };

struct PipelineParams {
  double eps = 0.5;
  double C = 4.0;
  SizeRule k_of_q{"8*q^3"};
  SizeRule small_threshold_of_q{"4*q^10"};
  Fallback fallback = Fallback::oracle;

  bool default_rules() const;
};

enum class Branch { base, bipartite_reduction, short_cycle, lemma2_branch, selector_branch, signature_collision, oracle_fallback };
const char* to_string(Branch b);

struct TraceAssert {
  std::string name;
  bool holds;
};

// One record per recursion level; sizes are observations, not inputs.
struct TraceLevel {
  std::size_t level = 0;
  Branch branch = Branch::base;
  std::vector<int> steps;  // numbered steps of the induction that ran here
  std::size_t n = 0;
  std::size_t q = 0;
  double eps = 0;
  double C = 0;
  double formula_bound = 0;  // C * 2^q / q^(1-eps)
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> small_threshold;
  std::optional<std::size_t> deleted_size;  // |S|
  std::vector<std::size_t> small_sizes;     // |V(B_i)| per colour
  std::vector<std::size_t> big_counts;      // big components per colour
  std::optional<std::size_t> n_prime;
  std::optional<double> delta;
  std::optional<std::size_t> survivors;  // |L|
  std::optional<Colour> colour;          // colour acted on (reduced, shortened, ...)
  std::optional<std::size_t> bound_claimed;
  std::optional<std::size_t> cycle_length;
  std::vector<TraceAssert> asserts;
  bool fallback_used = false;
};

struct PipelineTrace {
  std::vector<TraceLevel> levels;
};

struct MonoOddCycle {
  OddCycleCertificate certificate;  // colour always set
  std::optional<std::size_t> bound_claimed;
  PipelineTrace trace;
};

// A branch of the case analysis that cannot occur for a complete colouring
// was reached; carries the offending pair.
class InternalInconsistency : public std::logic_error {
 public:
  InternalInconsistency(const std::string& reason, Vertex x, Vertex y, std::optional<Colour> colour, PipelineTrace trace)
      : std::logic_error(reason), x(x), y(y), colour(colour), trace(std::move(trace)) {}
  Vertex x;
  Vertex y;
  std::optional<Colour> colour;  // colour of {x,y}, if any class has it
  PipelineTrace trace;
};

// Fallback::fail and a regime where the closing argument's preconditions do
// not hold.
class RegimeFailure : public std::runtime_error {
 public:
  RegimeFailure(const std::string& what, std::vector<std::string> failed, PipelineTrace trace)
      : std::runtime_error(what), failed_asserts(std::move(failed)), trace(std::move(trace)) {}
  std::vector<std::string> failed_asserts;
  PipelineTrace trace;
};

// Every colour class is bipartite.
class NoMonochromaticOddCycle : public InputError {
 public:
  using InputError::InputError;
};

MonoOddCycle find_mono_odd_cycle(const EdgeColouring& c, const PipelineParams& p = {});
MonoOddCycle find_mono_odd_cycle(const ColourClasses& classes, const PipelineParams& p = {});

// Shortest monochromatic odd cycle over all classes.
MonoOddCycle oracle_mono_odd_cycle(const EdgeColouring& c);
MonoOddCycle oracle_mono_odd_cycle(const ColourClasses& classes);

struct Reduction {
  EdgeColouring colouring;
  VertexList vertex_map;  // new index -> old vertex
};

// Induced colouring on the larger side of a bipartition of colour i (side0 on
// ties), with colour i dropped and later colours shifted down.
Reduction reduce_bipartite_colour(const EdgeColouring& c, Colour i, const Bipartition& b);

struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  // "a/b", an integer, or a finite decimal such as "0.25".
  static Rational parse(const std::string& text);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

std::size_t proposition_radius(std::size_t q, Rational delta);       // ceil(2q(q+1)/delta)
std::size_t proposition_min_order(std::size_t q, Rational delta);    // ceil((1+delta) 2^q)

MonoOddCycle proposition_pipeline(const EdgeColouring& c, std::size_t q, Rational delta);
MonoOddCycle proposition_pipeline(const ColourClasses& classes, std::size_t q, Rational delta);

struct Signatures {
  VertexList vertices;              // V \ S, ascending
  std::vector<std::uint64_t> bits;  // bit i = side in colour i
};

// Side labels are normalized per component so its lowest vertex has side 0.
Signatures signatures(const EdgeColouring& c, const VertexList& deleted, const std::vector<Bipartition>& bipartitions);
Signatures signatures(const ColourClasses& classes, const VertexList& deleted, const std::vector<Bipartition>& bipartitions);

}  // namespace oddcycle
