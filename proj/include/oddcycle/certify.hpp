#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "oddcycle/colouring.hpp"
#include "oddcycle/graph.hpp"
#include "oddcycle/lemmas.hpp"

namespace oddcycle {

enum class ViolationKind { parity, adjacency, colour_mismatch, duplicate_vertex, cover, radius, side_conflict, bound };

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> detail;  // offending indices (positions, vertices or pair ids)
  std::string message;
};

// nullopt means the certificate checks out.
using Verdict = std::optional<Violation>;

// All verifiers recompute from raw adjacency with naive loops and share no
// code with the producers.
Verdict verify_mono_odd_cycle(const EdgeColouring& c, const OddCycleCertificate& cert);
Verdict verify_odd_cycle(const Graph& g, const OddCycleCertificate& cert);
Verdict verify_bipartition(const Graph& g, const Bipartition& b);
Verdict verify_peel(const Graph& g, std::size_t k, const PeelOutcome& outcome);
Verdict verify_selector(const SelectorInstance& inst, const SelectorResult& res, std::size_t target);

}  // namespace oddcycle
