#pragma once

// Expansion of designer-level pattern lists into a valid skip-list and a
// flag-set compatible with it.

#include <vector>

#include "qflow/core.hpp"

namespace qflow {

/// (P_0, ..., P_N); P_q holds generalized (0,q-1)-patterns that skip question q.
/// Patterns are processed in the order given.
struct PreSkipList {
  std::vector<std::vector<GeneralizedPattern>> patterns;

  PreSkipList() = default;
  explicit PreSkipList(int n_questions) : patterns(static_cast<std::size_t>(n_questions) + 1) {}
};

/// Generalized (0,N-1)-patterns, processed in the order given.
using PreFlagSet = std::vector<GeneralizedPattern>;

/// Throws InputError if P_0 or P_N is non-empty or a pattern has the wrong
/// length or alphabet.  A wildcard in a P_1 pattern is expanded to every
/// answer of question 0 before use.
SkipList expand_skip_list(const Questionnaire& q, const PreSkipList& pre);

/// Thrown when the expanded flag-set fails validate_flag_compat.
class IncompatibleFlagSet : public RejectedInput {
 public:
  using RejectedInput::RejectedInput;
};

/// Precondition: `skips` is a valid skip-list.  The result is checked with
/// validate_flag_compat; a failure raises IncompatibleFlagSet.
FlagSet expand_flag_set(const Questionnaire& q, const SkipList& skips, const PreFlagSet& pre);

/// True iff g padded with stars to length n_questions is a member of F.
bool is_contained(const AnswerString& g, const FlagSet& flags, int n_questions);

/// True iff g and f are (0,N-1)-strings, differ somewhere, and g is all
/// stars from the first position where they differ: g = g_0..g_k*...* is a
/// strictly shorter star-padded prefix of f.
bool replaces(const AnswerString& g, const AnswerString& f);

}  // namespace qflow
