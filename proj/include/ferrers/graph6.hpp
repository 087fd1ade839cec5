#pragma once
// graph6 interchange with a sidecar bipartition mask.  The combined text form
// is "<graph6>:<mask>" where the mask is one '0'/'1' character per vertex in
// graph6 vertex order ('0' = X side).  Vertices are emitted X-side first.

#include <string>

#include "ferrers/bigraph.hpp"

namespace ferrers {

std::string to_graph6(const BipartiteGraph& g);

// Accepts "<graph6>:<mask>".  Edges crossing within one side are rejected.
BipartiteGraph from_graph6(const std::string& text);

}  // namespace ferrers
