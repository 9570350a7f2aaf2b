#pragma once

// Terminal walk-through of a built digraph: answers are requested for
// non-skipped questions, skipped questions advance automatically with *.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qflow/core.hpp"
#include "qflow/fsdigraph.hpp"

namespace qflow {

class WalkError : public InputError {
 public:
  using InputError::InputError;
};

struct WalkResult {
  AnswerString answers;
  bool flagged = false;
  /// Digraph vertices visited, level 0 first.
  std::vector<Vertex> path;
  /// Human-readable log, one line per question plus a summary.
  std::string transcript;
};

/// Consumes one scripted answer per non-skipped question.  Out-of-range
/// answers, an exhausted script, and unused answers raise WalkError.
WalkResult walk_scripted(const FsDigraph& d, const Questionnaire& q, std::span<const int> script);

/// Prompts on `out` and reads answers from `in`, re-prompting on invalid
/// input.  End of input before the last question raises WalkError.
WalkResult walk_interactive(const FsDigraph& d, const Questionnaire& q, std::istream& in, std::ostream& out);

}  // namespace qflow
