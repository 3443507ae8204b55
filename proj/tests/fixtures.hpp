#pragma once

// Crafted colourings for reaching the deeper pipeline branches.

#include <vector>

#include "oddcycle/colouring.hpp"
#include "oddcycle/pipeline.hpp"

namespace fixtures {

using oddcycle::Vertex;

// K_9 split into four Hamiltonian 9-cycles (Walecki: Z_8 plus a hub at 8,
// base path 0,1,7,2,6,3,5,4 rotated). Every class has odd girth 9. The
// relabelling keeps the pooled peel deletions at k = 3 down to 5 vertices.
inline oddcycle::EdgeColouring walecki9() {
  const Vertex relabel[9] = {0, 1, 4, 2, 5, 3, 6, 7, 8};
  const Vertex path[8] = {0, 1, 7, 2, 6, 3, 5, 4};
  oddcycle::EdgeColouring c(9, 4);
  for (Vertex j = 0; j < 4; ++j) {
    std::vector<Vertex> cyc{relabel[8]};
    for (Vertex t = 0; t < 8; ++t) cyc.push_back(relabel[(path[t] + j) % 8]);
    for (std::size_t t = 0; t < 9; ++t) c.set_colour(cyc[t], cyc[(t + 1) % 9], j);
  }
  return c;
}

// The Walecki classes plus a tenth vertex joined in no colour.
inline oddcycle::ColourClasses walecki9_with_loose_vertex() {
  const oddcycle::EdgeColouring c = walecki9();
  oddcycle::ColourClasses out;
  for (oddcycle::Colour i = 0; i < 4; ++i) {
    out.classes.push_back(oddcycle::Graph::from_edges(10, oddcycle::colour_class(c, i).edges()));
    out.labels.push_back(i);
  }
  return out;
}

inline oddcycle::PipelineParams small_rules(double eps) {
  oddcycle::PipelineParams p;
  p.C = 0;
  p.eps = eps;
  p.k_of_q = oddcycle::SizeRule("3");
  p.small_threshold_of_q = oddcycle::SizeRule("4");
  return p;
}

}  // namespace fixtures
