#pragma once

// Brute-force reference implementations.  They follow the definitions
// literally and share no code path with the fast constructions they check.

#include <cstdint>
#include <vector>

#include "qflow/core.hpp"
#include "qflow/fsdigraph.hpp"
#include "qflow/fstree.hpp"
#include "qflow/ordering.hpp"

namespace qflow {

/// Definition check: the map u -> vertex with answer alpha(w)x, where
/// alpha(u) = alpha(v)x, must be a bijection between the subtrees that
/// preserves flags.  Throws ContractError if v and w lie on different levels.
bool equiv_bruteforce(const FsTree& tree, Vertex v, Vertex w);

/// All same-level equivalent pairs (v < w) of the tree, by equiv_bruteforce.
std::vector<std::pair<Vertex, Vertex>> equivalent_pairs_bruteforce(const FsTree& tree);

/// Largest tree reduce_exhaustive() accepts.
inline constexpr std::size_t kReduceExhaustiveLimit = 5000;

/// Starting from D_T, merges randomly chosen equivalent pairs (seeded) until
/// none is left.  Requires every m_i >= 2 and at most kReduceExhaustiveLimit vertices.
FsDigraph reduce_exhaustive(const FsTree& tree, const Questionnaire& q, std::uint64_t order_seed);

/// Largest ground set orderings_bruteforce() accepts.
inline constexpr int kOrderingsBruteforceLimit = 8;

/// Every permutation of Z_n that extends r, sorted lexicographically.
/// Cyclic relations yield an empty list.
std::vector<Ordering> orderings_bruteforce(const PrecedenceRelation& r);

/// True iff some relabelling maps d1 onto d2 preserving levels, ordered
/// out-lists with multiplicities, skipped and flagged status, and answer sets.
bool digraph_isomorphic(const FsDigraph& d1, const FsDigraph& d2);

}  // namespace qflow
