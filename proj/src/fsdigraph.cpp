#include "qflow/fsdigraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "qflow/oracles.hpp"

namespace qflow {

AnswerSet local_flag_set(const AnswerString& a, const FlagSet& flags, const Questionnaire& q) {
  const auto suffix_start = static_cast<int>(a.size());
  if (is_flagged(a, flags, q)) {
    return {AnswerString(suffix_start, std::vector<Symbol>(static_cast<std::size_t>(q.size() - suffix_start), kStar))};
  }
  AnswerSet out;
  for (const auto& f : flags) {
    if (f.size() == static_cast<std::size_t>(q.size()) && f.has_prefix(a)) {
      out.insert(f.tail(a.size()));
    }
  }
  return out;
}

namespace {

AnswerSet local_skip_component(const AnswerString& a, const SkipList& skips, int i) {
  AnswerSet out;
  for (const auto& s : skips.at(i)) {
    if (s.has_prefix(a)) {
      out.insert(s.tail(a.size()));
    }
  }
  return out;
}

}  // namespace

std::vector<AnswerSet> local_skip_list(const AnswerString& a, const SkipList& skips, const Questionnaire& q) {
  std::vector<AnswerSet> out;
  for (int i = static_cast<int>(a.size()); i <= q.size(); ++i) {
    out.push_back(local_skip_component(a, skips, i));
  }
  return out;
}

LocalSets local_sets(const AnswerString& a, const FlagSet& flags, const SkipList& skips, const Questionnaire& q) {
  return {local_flag_set(a, flags, q), local_skip_list(a, skips, q)};
}

bool equiv(const AnswerString& a, const AnswerString& b, const FlagSet& flags, const SkipList& skips,
           const Questionnaire& q) {
  if (a.size() != b.size()) {
    throw ContractError("equiv: answer strings of different length");
  }
  if (!q.all_branching()) {
    throw UnsupportedHypothesis("equiv: local-set equivalence requires every question to have at least two answers");
  }
  if (local_flag_set(a, flags, q) != local_flag_set(b, flags, q)) {
    return false;
  }
  for (int i = static_cast<int>(a.size()); i <= q.size(); ++i) {
    if (local_skip_component(a, skips, i) != local_skip_component(b, skips, i)) {
      return false;
    }
  }
  return true;
}

FsDigraph build_fs_digraph(const Questionnaire& q, const FlagSet& flags, const SkipList& skips,
                           BuildOptions options) {
  if (!q.all_branching()) {
    throw UnsupportedHypothesis(
        "digraph reduction requires every question to have at least two answers (m_i >= 2)");
  }
  if (options.validate) {
    if (auto report = validate_skip_list(q, skips); !report.ok()) {
      throw RejectedInput("invalid skip-list", std::move(report));
    }
    if (auto report = validate_flag_compat(q, skips, flags); !report.ok()) {
      throw RejectedInput("flag-set is not compatible with the skip-list", std::move(report));
    }
  }

  FsDigraph d;
  std::vector<LocalSets> signature;  // local sets of each vertex's first answer string
  auto add_vertex = [&](int level, std::vector<AnswerString> answers, LocalSets sets) {
    const AnswerString& representative = answers.front();
    d.out.emplace_back();
    d.skipped.push_back(skips.contains(level, representative));
    d.level.push_back(level);
    d.flag.push_back(is_flagged(representative, flags, q));
    d.answers.push_back(std::move(answers));
    signature.push_back(std::move(sets));
    return d.out.size() - 1;
  };
  add_vertex(0, {AnswerString{}}, {});

  // first[k]: label of the first vertex on level k; levels occupy contiguous label blocks
  std::vector<long> first(static_cast<std::size_t>(q.size()) + 1, -1);
  first[0] = 0;
  std::deque<Vertex> queue{0};
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    const int level = d.level[u];
    if (level >= q.size()) {
      continue;
    }
    std::vector<Symbol> choices;
    if (d.skipped[u]) {
      choices.push_back(kStar);
    } else {
      for (Symbol j = 0; j < q.answers(level); ++j) {
        choices.push_back(j);
      }
    }
    const auto next = static_cast<std::size_t>(level + 1);
    for (Symbol a : choices) {
      std::vector<AnswerString> candidate;
      candidate.reserve(d.answers[u].size());
      for (const auto& b : d.answers[u]) {
        candidate.push_back(b.extended(a));
      }
      LocalSets sets = local_sets(candidate.front(), flags, skips, q);

      std::optional<Vertex> match;
      if (first[next] != -1) {
        for (auto w = static_cast<Vertex>(first[next]); w < d.vertex_count(); ++w) {
          if (signature[w] == sets) {
            match = w;
            break;
          }
        }
      } else {
        first[next] = static_cast<long>(d.vertex_count());
      }

      if (match) {
        auto& into = d.answers[*match];
        into.insert(into.end(), std::make_move_iterator(candidate.begin()), std::make_move_iterator(candidate.end()));
        d.out[u].push_back(*match);
      } else {
        const Vertex c = add_vertex(level + 1, std::move(candidate), std::move(sets));
        d.out[u].push_back(c);
        queue.push_back(c);
      }
    }
  }
  return d;
}

FsDigraph digraph_of_tree(const FsTree& tree) {
  FsDigraph d;
  d.out = tree.out;
  d.skipped = tree.skipped;
  d.level = tree.question;
  d.flag = tree.flag;
  d.answers.reserve(tree.vertex_count());
  for (const auto& a : tree.answer) {
    d.answers.push_back({a});
  }
  return d;
}

namespace detail {

FsDigraph merge_unchecked(const FsDigraph& d, Vertex v, Vertex w) {
  const std::size_t n = d.vertex_count();
  if (v >= n || w >= n) {
    throw ContractError("merge: unknown vertex");
  }
  if (v == w) {
    throw ContractError("merge: vertices must be distinct");
  }
  FsDigraph work = d;
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  std::vector<bool> alive(n, true);
  auto find = [&](Vertex x) {
    while (parent[x] != x) {
      x = parent[x] = parent[parent[x]];
    }
    return x;
  };

  // Corresponding vertices below v and w are folded pairwise; a vertex
  // reachable from both sides is matched with itself and left alone.
  std::deque<std::pair<Vertex, Vertex>> pending{{v, w}};
  while (!pending.empty()) {
    auto [keep, drop] = pending.front();
    pending.pop_front();
    keep = find(keep);
    drop = find(drop);
    if (keep == drop) {
      continue;
    }
    if (work.level[keep] != work.level[drop] || work.out[keep].size() != work.out[drop].size() ||
        work.flag[keep] != work.flag[drop] || work.skipped[keep] != work.skipped[drop]) {
      throw ContractError("merge: vertices " + std::to_string(keep) + " and " + std::to_string(drop) +
                          " do not correspond");
    }
    auto& into = work.answers[keep];
    into.insert(into.end(), work.answers[drop].begin(), work.answers[drop].end());
    alive[drop] = false;
    parent[drop] = keep;
    for (Vertex p = 0; p < n; ++p) {
      if (alive[p]) {
        std::replace(work.out[p].begin(), work.out[p].end(), drop, keep);
      }
    }
    for (std::size_t i = 0; i < work.out[keep].size(); ++i) {
      pending.emplace_back(work.out[keep][i], work.out[drop][i]);
    }
  }

  std::vector<Vertex> relabel(n, 0);
  FsDigraph result;
  for (Vertex x = 0; x < n; ++x) {
    if (!alive[x]) {
      continue;
    }
    relabel[x] = result.vertex_count();
    result.out.push_back(work.out[x]);
    result.skipped.push_back(work.skipped[x]);
    result.level.push_back(work.level[x]);
    result.answers.push_back(std::move(work.answers[x]));
    result.flag.push_back(work.flag[x]);
  }
  for (auto& targets : result.out) {
    for (auto& t : targets) {
      t = relabel[find(t)];
    }
  }
  return result;
}

}  // namespace detail

FsDigraph merge(const FsDigraph& d, Vertex v, Vertex w, const FsTree& tree) {
  if (v >= d.vertex_count() || w >= d.vertex_count()) {
    throw ContractError("merge: unknown vertex");
  }
  if (v == w) {
    throw ContractError("merge: vertices must be distinct");
  }
  if (d.level[v] != d.level[w]) {
    throw ContractError("merge: vertices lie on different levels");
  }
  const auto tv = find_vertex(tree, d.answers[v].front());
  const auto tw = find_vertex(tree, d.answers[w].front());
  if (!tv || !tw) {
    throw ContractError("merge: digraph answer strings do not belong to the tree");
  }
  if (!equiv_bruteforce(tree, *tv, *tw)) {
    throw ContractError("merge: vertices " + std::to_string(v) + " and " + std::to_string(w) +
                        " are not equivalent");
  }
  return detail::merge_unchecked(d, v, w);
}

FsTree unfold(const FsDigraph& d, const Questionnaire& q) {
  if (d.vertex_count() == 0 || d.level[0] != 0) {
    throw MalformedDigraph("unfold: vertex 0 must be the level-0 vertex");
  }
  FsTree t;
  std::deque<std::pair<Vertex, Vertex>> queue;  // (tree vertex, digraph vertex)
  auto add_vertex = [&](Vertex source, AnswerString alpha) {
    const auto& known = d.answers[source];
    if (std::find(known.begin(), known.end(), alpha) == known.end()) {
      throw MalformedDigraph("unfold: path string \"" + format(alpha, q.notation()) + "\" is not recorded at vertex " +
                             std::to_string(source));
    }
    t.out.emplace_back();
    t.skipped.push_back(d.skipped[source]);
    t.question.push_back(d.level[source]);
    t.flag.push_back(d.flag[source]);
    t.answer.push_back(std::move(alpha));
    queue.emplace_back(t.out.size() - 1, source);
    return t.out.size() - 1;
  };
  add_vertex(0, AnswerString{});

  while (!queue.empty()) {
    const auto [tv, dv] = queue.front();
    queue.pop_front();
    const int level = d.level[dv];
    const auto& targets = d.out[dv];
    std::size_t expected = 0;
    if (level < q.size()) {
      expected = d.skipped[dv] ? 1 : static_cast<std::size_t>(q.answers(level));
    }
    if (targets.size() != expected) {
      throw MalformedDigraph("unfold: vertex " + std::to_string(dv) + " has out-degree " +
                             std::to_string(targets.size()) + ", expected " + std::to_string(expected));
    }
    for (std::size_t j = 0; j < targets.size(); ++j) {
      const Vertex target = targets[j];
      if (target >= d.vertex_count() || d.level[target] != level + 1) {
        throw MalformedDigraph("unfold: arc from vertex " + std::to_string(dv) + " does not go one level down");
      }
      const Symbol symbol = d.skipped[dv] ? kStar : static_cast<Symbol>(j);
      const Vertex child = add_vertex(target, t.answer[tv].extended(symbol));
      t.out[tv].push_back(child);
    }
  }
  return t;
}

}  // namespace qflow
