#pragma once

// JSON spec files and the JSON documents emitted by the command line tool.
//
// Spec file:
//   {"questions": [int, ...],
//    "precedence": [[a, b], ...],          optional
//    "question_order": [int, ...],         optional permutation of Z_N
//    "pre_skip": {"<q>": ["<pattern>"]},   optional
//    "pre_flag": ["<pattern>", ...]}       optional
//
// With a question_order the questionnaire is re-indexed so that position i
// holds original question question_order[i].  A pre_skip key names an
// original question and its patterns list the questions asked before it, in
// asking order.  pre_flag patterns are written against the original question
// indices and are permuted into asking order.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qflow/core.hpp"
#include "qflow/fsdigraph.hpp"
#include "qflow/fstree.hpp"
#include "qflow/ordering.hpp"
#include "qflow/preprocess.hpp"

namespace qflow {

class SpecError : public InputError {
 public:
  enum class Kind {
    schema,        // malformed document; message carries a JSON path
    semantic,      // well-formed but violates a questionnaire rule
    inadmissible,  // precedence relation has a directed cycle
  };

  SpecError(Kind kind, const std::string& what) : InputError(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct SpecFile {
  /// Answer counts in original question order.
  std::vector<int> questions;
  PrecedenceRelation precedence;
  std::optional<Ordering> question_order;

  /// The questionnaire in asking order, with patterns re-indexed to match.
  Questionnaire questionnaire{std::vector<int>{1}};
  PreSkipList pre_skip;
  PreFlagSet pre_flag;
};

SpecFile parse_spec(std::string_view json_text);
/// Reads and parses a file; unreadable files raise SpecError(schema).
SpecFile load_spec(const std::string& path);

/// {"flag": [...], "skip": {"<q>": [...]}}; keys sorted, lists lexicographic,
/// only non-empty skip components listed.
std::string emit_expanded(const Questionnaire& q, const SkipList& skips, const FlagSet& flags);

std::string emit_orderings(const std::vector<Ordering>& orders);
std::string emit_tree(const FsTree& tree, const Questionnaire& q);
std::string emit_digraph(const FsDigraph& d, const Questionnaire& q);

}  // namespace qflow
