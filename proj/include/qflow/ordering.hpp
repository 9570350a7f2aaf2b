#pragma once

// Admissibility of precedence relations between questions and enumeration of
// every total order extending them.

#include <set>
#include <utility>
#include <variant>
#include <vector>

namespace qflow {

using Question = int;
using Ordering = std::vector<Question>;

/// Binary relation on Z_n; (a, b) means question a must be asked before b.
class PrecedenceRelation {
 public:
  using Pair = std::pair<Question, Question>;

  PrecedenceRelation() = default;
  /// Throws InputError for out-of-range elements.  Pairs (a, a) are accepted
  /// here so that reflexive partial orders can be represented; the ordering
  /// operations themselves expect irreflexive input.
  PrecedenceRelation(int n, std::set<Pair> pairs);

  int n() const { return n_; }
  const std::set<Pair>& pairs() const { return pairs_; }
  bool contains(Question a, Question b) const { return pairs_.count({a, b}) != 0; }
  bool irreflexive() const;

  friend bool operator==(const PrecedenceRelation&, const PrecedenceRelation&) = default;

 private:
  int n_ = 0;
  std::set<Pair> pairs_;
};

/// Roy-Warshall closure.
PrecedenceRelation transitive_closure(const PrecedenceRelation& r);

/// True iff the closure of `r` has no loop (a, a), i.e. r is acyclic.
bool is_admissible(const PrecedenceRelation& r);

/// Elements m of `subset` such that (x, m) in `order` implies x == m, for x in `subset`.
std::set<Question> minimal_elements(const std::set<Question>& subset, const PrecedenceRelation& order);

/// Returned instead of orderings when the relation has a directed cycle.
struct Inadmissible {
  /// Witness cycle q0 -> q1 -> ... -> q0 through pairs of the input relation.
  std::vector<Question> cycle;
};

using OrderingsResult = std::variant<std::vector<Ordering>, Inadmissible>;

/// All total orders extending `r`, in lexicographic order.  The result is
/// materialised, so it grows factorially for sparse relations; keep n small
/// (around 10 or fewer unless the relation is dense).
OrderingsResult enumerate_orderings(const PrecedenceRelation& r);

/// True iff `order` is a permutation of Z_n placing a before b for all (a, b) in r.
bool extends(const Ordering& order, const PrecedenceRelation& r);

}  // namespace qflow
