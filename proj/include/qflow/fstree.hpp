#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qflow/core.hpp"

namespace qflow {

using Vertex = std::size_t;

/// Ordered rooted tree of every reachable answer state.  Vertex 0 is the
/// root; labels follow the breadth-first creation order.
struct FsTree {
  std::vector<std::vector<Vertex>> out;  // ordered children
  std::vector<bool> skipped;             // U
  std::vector<int> question;             // kappa, equal to depth
  std::vector<AnswerString> answer;      // alpha
  std::vector<bool> flag;                // phi

  std::size_t vertex_count() const { return out.size(); }

  friend bool operator==(const FsTree&, const FsTree&) = default;
};

struct BuildOptions {
  /// Run validate_skip_list / validate_flag_compat before building.
  bool validate = true;
};

/// Breadth-first construction of the FS-decision tree.  Throws RejectedInput
/// when validation is enabled and fails.
FsTree build_fs_tree(const Questionnaire& q, const FlagSet& flags, const SkipList& skips,
                     BuildOptions options = {});

/// S_q = { alpha(v) : v in U, kappa(v) = q }.
SkipList skip_list_of_tree(const FsTree& tree, const Questionnaire& q);

/// Read-only view of the subtree rooted at `root`.  `vertices` lists the
/// members in breadth-first order, root first; child order is the tree's.
struct SubtreeView {
  const FsTree* tree = nullptr;
  Vertex root = 0;
  std::vector<Vertex> vertices;

  std::size_t size() const { return vertices.size(); }
};

SubtreeView subtree(const FsTree& tree, Vertex root);

/// Vertex whose answer string is `a`, if any.
std::optional<Vertex> find_vertex(const FsTree& tree, const AnswerString& a);

}  // namespace qflow
