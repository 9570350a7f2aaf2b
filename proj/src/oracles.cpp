#include "qflow/oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <string>

namespace qflow {

namespace {

using AnswerIndex = std::map<AnswerString, Vertex>;

AnswerIndex index_answers(const FsTree& tree) {
  AnswerIndex index;
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    index.emplace(tree.answer[v], v);
  }
  return index;
}

bool equiv_with_index(const FsTree& tree, const AnswerIndex& index, Vertex v, Vertex w) {
  if (tree.question[v] != tree.question[w]) {
    throw ContractError("equiv_bruteforce: vertices on different levels");
  }
  const auto from = subtree(tree, v);
  const auto to = subtree(tree, w);
  if (from.size() != to.size()) {
    return false;
  }
  const std::size_t k = tree.answer[v].size();
  for (Vertex u : from.vertices) {
    const AnswerString target = concat(tree.answer[w], tree.answer[u].tail(k));
    const auto it = index.find(target);
    if (it == index.end()) {
      return false;
    }
    if (tree.flag[u] != tree.flag[it->second]) {
      return false;
    }
  }
  // Distinct suffixes give distinct images, so the map is injective; equal
  // subtree sizes make it a bijection onto V(T_w).
  return true;
}

}  // namespace

bool equiv_bruteforce(const FsTree& tree, Vertex v, Vertex w) {
  if (v >= tree.vertex_count() || w >= tree.vertex_count()) {
    throw ContractError("equiv_bruteforce: unknown vertex");
  }
  if (v == w) {
    return true;
  }
  return equiv_with_index(tree, index_answers(tree), v, w);
}

std::vector<std::pair<Vertex, Vertex>> equivalent_pairs_bruteforce(const FsTree& tree) {
  const AnswerIndex index = index_answers(tree);
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    for (Vertex w = v + 1; w < tree.vertex_count(); ++w) {
      if (tree.question[v] == tree.question[w] && equiv_with_index(tree, index, v, w)) {
        out.emplace_back(v, w);
      }
    }
  }
  return out;
}

FsDigraph reduce_exhaustive(const FsTree& tree, const Questionnaire& q, std::uint64_t order_seed) {
  if (!q.all_branching()) {
    throw UnsupportedHypothesis("reduce_exhaustive requires every question to have at least two answers");
  }
  if (tree.vertex_count() > kReduceExhaustiveLimit) {
    throw InputError("reduce_exhaustive: tree has " + std::to_string(tree.vertex_count()) + " vertices, limit is " +
                     std::to_string(kReduceExhaustiveLimit));
  }
  const AnswerIndex index = index_answers(tree);

  // Lazily filled equivalence table, one square block per level; every
  // level of a tree is a non-empty contiguous label block.
  std::vector<Vertex> level_start(static_cast<std::size_t>(q.size()) + 2, tree.vertex_count());
  for (Vertex v = tree.vertex_count(); v-- > 0;) {
    level_start[static_cast<std::size_t>(tree.question[v])] = v;
  }
  std::vector<std::vector<signed char>> known(static_cast<std::size_t>(q.size()) + 1);
  for (std::size_t l = 0; l < known.size(); ++l) {
    const std::size_t width = level_start[l + 1] - level_start[l];
    known[l].assign(width * width, -1);
  }
  auto equivalent = [&](Vertex a, Vertex b) {
    const auto l = static_cast<std::size_t>(tree.question[a]);
    const std::size_t width = level_start[l + 1] - level_start[l];
    signed char& slot = known[l][(a - level_start[l]) * width + (b - level_start[l])];
    if (slot < 0) {
      slot = equiv_with_index(tree, index, a, b) ? 1 : 0;
    }
    return slot == 1;
  };

  std::mt19937_64 rng(order_seed);
  FsDigraph d = digraph_of_tree(tree);
  while (true) {
    std::vector<Vertex> representative(d.vertex_count());
    for (Vertex x = 0; x < d.vertex_count(); ++x) {
      representative[x] = index.at(d.answers[x].front());
    }
    std::vector<std::pair<Vertex, Vertex>> candidates;
    for (Vertex x = 0; x < d.vertex_count(); ++x) {
      for (Vertex y = x + 1; y < d.vertex_count(); ++y) {
        if (d.level[x] == d.level[y] && equivalent(representative[x], representative[y])) {
          candidates.emplace_back(x, y);
        }
      }
    }
    if (candidates.empty()) {
      return d;
    }
    auto [v, w] = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    if (std::bernoulli_distribution(0.5)(rng)) {
      std::swap(v, w);
    }
    d = detail::merge_unchecked(d, v, w);
  }
}

std::vector<Ordering> orderings_bruteforce(const PrecedenceRelation& r) {
  if (r.n() > kOrderingsBruteforceLimit) {
    throw InputError("orderings_bruteforce: n = " + std::to_string(r.n()) + " exceeds limit " +
                     std::to_string(kOrderingsBruteforceLimit));
  }
  Ordering perm(static_cast<std::size_t>(r.n()));
  for (int i = 0; i < r.n(); ++i) {
    perm[static_cast<std::size_t>(i)] = i;
  }
  std::vector<Ordering> out;
  do {
    if (extends(perm, r)) {
      out.push_back(perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool digraph_isomorphic(const FsDigraph& d1, const FsDigraph& d2) {
  if (d1.vertex_count() != d2.vertex_count()) {
    return false;
  }
  auto root_of = [](const FsDigraph& d) -> std::optional<Vertex> {
    std::optional<Vertex> root;
    for (Vertex x = 0; x < d.vertex_count(); ++x) {
      if (d.level[x] == 0) {
        if (root) {
          return std::nullopt;
        }
        root = x;
      }
    }
    return root;
  };
  const auto r1 = root_of(d1);
  const auto r2 = root_of(d2);
  if (!r1 || !r2) {
    return false;
  }
  auto sorted = [](std::vector<AnswerString> v) {
    std::sort(v.begin(), v.end());
    return v;
  };

  constexpr Vertex kUnmapped = static_cast<Vertex>(-1);
  std::vector<Vertex> forward(d1.vertex_count(), kUnmapped);
  std::vector<Vertex> backward(d2.vertex_count(), kUnmapped);
  std::deque<std::pair<Vertex, Vertex>> queue{{*r1, *r2}};
  forward[*r1] = *r2;
  backward[*r2] = *r1;
  std::size_t mapped = 1;
  while (!queue.empty()) {
    const auto [a, b] = queue.front();
    queue.pop_front();
    if (d1.level[a] != d2.level[b] || d1.skipped[a] != d2.skipped[b] || d1.flag[a] != d2.flag[b] ||
        d1.out[a].size() != d2.out[b].size() || sorted(d1.answers[a]) != sorted(d2.answers[b])) {
      return false;
    }
    for (std::size_t i = 0; i < d1.out[a].size(); ++i) {
      const Vertex x = d1.out[a][i];
      const Vertex y = d2.out[b][i];
      if (forward[x] == kUnmapped && backward[y] == kUnmapped) {
        forward[x] = y;
        backward[y] = x;
        ++mapped;
        queue.emplace_back(x, y);
      } else if (forward[x] != y || backward[y] != x) {
        return false;
      }
    }
  }
  // Vertices not reachable from the root cannot be matched by the traversal.
  return mapped == d1.vertex_count();
}

}  // namespace qflow
