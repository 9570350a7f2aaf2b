#pragma once

// Graphviz rendering.  Flagged vertices are filled white, unflagged ones
// black with a white label; skipped vertices get a double outline.  Arcs
// carry the answer they stand for (j, or * out of a skipped vertex).

#include <string>

#include "qflow/fsdigraph.hpp"
#include "qflow/fstree.hpp"

namespace qflow {

std::string export_dot(const FsTree& tree);
std::string export_dot(const FsDigraph& d);

}  // namespace qflow
