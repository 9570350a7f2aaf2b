#pragma once

// Value types shared by every stage of the questionnaire-flow pipeline:
// the abstract questionnaire (N, M), answer strings, generalized patterns,
// skip-lists and flag-sets, plus the validators for skip-list validity and
// flag-set compatibility.

#include <compare>
#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qflow {

using Symbol = std::int32_t;

/// Placeholder recorded for a skipped question.
inline constexpr Symbol kStar = std::numeric_limits<Symbol>::max();
/// "Anything" wildcard, only valid inside a GeneralizedPattern.
inline constexpr Symbol kAny = std::numeric_limits<Symbol>::max() - 1;

/// Broken precondition on the caller's side (mismatched ranges, unknown vertex, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input data that cannot be accepted (malformed strings, invalid skip-lists, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation needs every question to offer at least two answers.
class UnsupportedHypothesis : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Notation {
  compact,   // one character per symbol: "0*0"
  extended,  // comma separated tokens: "0,*,0"
};

class Questionnaire {
 public:
  explicit Questionnaire(std::vector<int> answer_counts);

  int size() const { return static_cast<int>(answer_counts_.size()); }
  int answers(int question) const { return answer_counts_.at(static_cast<std::size_t>(question)); }
  std::span<const int> answer_counts() const { return answer_counts_; }

  /// Compact digit notation is usable iff every m_i <= 10.
  Notation notation() const;
  /// True iff every question has at least two answers.
  bool all_branching() const;

  friend bool operator==(const Questionnaire&, const Questionnaire&) = default;

 private:
  std::vector<int> answer_counts_;
};

namespace detail {

// Shared storage for answer strings and patterns: a run of symbols that
// occupies positions start .. start+size-1.  The empty run has no position;
// its start is normalised to zero so that every empty run compares equal.
class SymbolRun {
 public:
  SymbolRun() = default;
  SymbolRun(int start, std::vector<Symbol> symbols);

  bool empty() const { return symbols_.empty(); }
  std::size_t size() const { return symbols_.size(); }
  int start() const { return start_; }
  /// One past the last occupied position.
  int end() const { return start_ + static_cast<int>(symbols_.size()); }
  std::span<const Symbol> symbols() const { return symbols_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol at_position(int position) const;

  friend bool operator==(const SymbolRun&, const SymbolRun&) = default;
  // Lexicographic on the symbol sequence first; stars and wildcards sort
  // after every concrete answer.
  friend std::strong_ordering operator<=>(const SymbolRun& a, const SymbolRun& b);

 protected:
  int start_ = 0;
  std::vector<Symbol> symbols_;
};

}  // namespace detail

/// A (k,l)-answer string: symbol at position i is in Z_{m_i} or kStar.
/// Default constructed value is the empty string.
class AnswerString : public detail::SymbolRun {
 public:
  using SymbolRun::SymbolRun;

  /// A (0,k)-string built from its symbols.
  static AnswerString prefix(std::vector<Symbol> symbols) { return AnswerString(0, std::move(symbols)); }

  /// The first `length` symbols.
  AnswerString head(std::size_t length) const;
  /// Everything from relative offset `offset` on; keeps absolute positions.
  AnswerString tail(std::size_t offset) const;
  /// Appends one symbol at position end().
  AnswerString extended(Symbol symbol) const;
  /// Appends stars until the string ends at position `length` - 1.
  AnswerString padded(int length) const;

  bool has_prefix(const AnswerString& prefix) const;
};

/// A generalized answer string: symbols in Z_{m_i} or kAny.
class GeneralizedPattern : public detail::SymbolRun {
 public:
  using SymbolRun::SymbolRun;
  static GeneralizedPattern prefix(std::vector<Symbol> symbols) {
    return GeneralizedPattern(0, std::move(symbols));
  }
};

using AnswerSet = std::set<AnswerString>;
/// Set of (0,N-1)-answer strings.
using FlagSet = AnswerSet;

/// (S_0, ..., S_N); S_q holds (0,q-1)-answer strings whose question q is skipped.
class SkipList {
 public:
  SkipList() = default;
  /// All-empty skip-list for N questions.
  explicit SkipList(int n_questions) : sets_(static_cast<std::size_t>(n_questions) + 1) {}
  explicit SkipList(std::vector<AnswerSet> sets) : sets_(std::move(sets)) {}

  /// Number of components, N + 1.
  std::size_t size() const { return sets_.size(); }
  const AnswerSet& at(int q) const { return sets_.at(static_cast<std::size_t>(q)); }
  AnswerSet& at(int q) { return sets_.at(static_cast<std::size_t>(q)); }
  bool contains(int q, const AnswerString& a) const;
  void add(int q, AnswerString a) { at(q).insert(std::move(a)); }
  std::size_t total() const;
  const std::vector<AnswerSet>& sets() const { return sets_; }

  friend bool operator==(const SkipList&, const SkipList&) = default;

 private:
  std::vector<AnswerSet> sets_;
};

AnswerString concat(const AnswerString& a, const AnswerString& b);

/// True iff p and a cover the same positions and p_i is kAny or equals a_i everywhere.
bool matches(const GeneralizedPattern& p, const AnswerString& a);

/// True iff some a_0..a_i*...* (i < |a|) belongs to F.  The empty string is never flagged.
bool is_flagged(const AnswerString& a, const FlagSet& flags, const Questionnaire& q);

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  std::string clause;   // e.g. "(iii)"
  std::string subject;  // offending string, formatted in the questionnaire's notation
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Thrown by builders that refuse invalid skip-lists or flag-sets.
class RejectedInput : public InputError {
 public:
  RejectedInput(const std::string& what, ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

ValidationReport validate_skip_list(const Questionnaire& q, const SkipList& skips);

/// Precondition: validate_skip_list(q, skips) is ok.
ValidationReport validate_flag_compat(const Questionnaire& q, const SkipList& skips,
                                      const FlagSet& flags);

// ---------------------------------------------------------------------------
// Text form

std::string format(const AnswerString& a, Notation notation);
std::string format(const GeneralizedPattern& p, Notation notation);
/// Like format(), but renders the empty string as "eps".
std::string display(const AnswerString& a, Notation notation);

/// Parses the questionnaire's notation; "" is the empty string.  Symbols are
/// checked against the alphabets of positions start, start+1, ...
AnswerString parse_answer_string(std::string_view text, const Questionnaire& q, int start = 0);
GeneralizedPattern parse_pattern(std::string_view text, const Questionnaire& q, int start = 0);

}  // namespace qflow
