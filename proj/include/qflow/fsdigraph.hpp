#pragma once

// Fully reduced FS-decision digraphs.  Two tree vertices on the same level
// are equivalent exactly when their local flag-sets and local skip-lists
// coincide (every m_i >= 2 and a compatible flag-set assumed), which lets the
// reduced digraph be built breadth-first without materialising the tree.

#include <vector>

#include "qflow/core.hpp"
#include "qflow/fstree.hpp"

namespace qflow {

/// Ordered levelled digraph; out-lists may repeat a vertex (parallel arcs).
/// Vertex 0 is the unique level-0 vertex.
struct FsDigraph {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> skipped;
  std::vector<int> level;
  /// Answer strings represented by each vertex, in insertion order.
  std::vector<std::vector<AnswerString>> answers;
  std::vector<bool> flag;

  std::size_t vertex_count() const { return out.size(); }

  friend bool operator==(const FsDigraph&, const FsDigraph&) = default;
};

/// Local flag-set and local skip-list at a (0,k)-answer string.
struct LocalSets {
  /// {*...*} when the base string is flagged, otherwise the flag suffixes.
  AnswerSet flag;
  /// S^a_{k+1}, ..., S^a_N.
  std::vector<AnswerSet> skip;

  friend bool operator==(const LocalSets&, const LocalSets&) = default;
};

AnswerSet local_flag_set(const AnswerString& a, const FlagSet& flags, const Questionnaire& q);
std::vector<AnswerSet> local_skip_list(const AnswerString& a, const SkipList& skips, const Questionnaire& q);
LocalSets local_sets(const AnswerString& a, const FlagSet& flags, const SkipList& skips, const Questionnaire& q);

/// Equivalence of the tree vertices carrying `a` and `b` via their local sets.
/// Compares flag sets first, then skip components in increasing order,
/// stopping at the first difference.
bool equiv(const AnswerString& a, const AnswerString& b, const FlagSet& flags, const SkipList& skips,
           const Questionnaire& q);

FsDigraph build_fs_digraph(const Questionnaire& q, const FlagSet& flags, const SkipList& skips,
                           BuildOptions options = {});

/// D_T: the tree with arcs directed away from the root.
FsDigraph digraph_of_tree(const FsTree& tree);

/// merge(v, w): w and everything only reachable through it is folded into
/// the corresponding vertices below v.  Surviving vertices keep their
/// relative label order and are relabelled densely.  Throws ContractError
/// unless v != w and both are equivalent in `tree`.
FsDigraph merge(const FsDigraph& d, Vertex v, Vertex w, const FsTree& tree);

/// Thrown by unfold() for digraphs that break the level or degree rules.
class MalformedDigraph : public InputError {
 public:
  using InputError::InputError;
};

/// Expands the digraph back into the ordered tree it represents, labelling
/// vertices breadth-first.
FsTree unfold(const FsDigraph& d, const Questionnaire& q);

namespace detail {
// merge() without the equivalence check; used by the exhaustive reducer that
// has already established equivalence.
FsDigraph merge_unchecked(const FsDigraph& d, Vertex v, Vertex w);
}  // namespace detail

}  // namespace qflow
