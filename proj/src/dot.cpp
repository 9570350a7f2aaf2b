#include "qflow/dot.hpp"

#include <sstream>

namespace qflow {

namespace {

template <typename Graph>
std::string render(const Graph& g, const std::vector<bool>& skipped, const std::vector<bool>& flag,
                   const char* name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=circle, style=filled];\n";
  for (Vertex v = 0; v < g.out.size(); ++v) {
    out << "  " << v << " [label=\"" << v << "\", ";
    out << (flag[v] ? "fillcolor=white, fontcolor=black" : "fillcolor=black, fontcolor=white");
    if (skipped[v]) {
      out << ", peripheries=2";
    }
    out << "];\n";
  }
  for (Vertex v = 0; v < g.out.size(); ++v) {
    for (std::size_t j = 0; j < g.out[v].size(); ++j) {
      out << "  " << v << " -> " << g.out[v][j] << " [label=\"";
      if (skipped[v]) {
        out << '*';
      } else {
        out << j;
      }
      out << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string export_dot(const FsTree& tree) { return render(tree, tree.skipped, tree.flag, "fs_tree"); }

std::string export_dot(const FsDigraph& d) { return render(d, d.skipped, d.flag, "fs_digraph"); }

}  // namespace qflow
