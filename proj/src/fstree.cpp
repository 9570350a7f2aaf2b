#include "qflow/fstree.hpp"

#include <deque>
#include <string>

namespace qflow {

FsTree build_fs_tree(const Questionnaire& q, const FlagSet& flags, const SkipList& skips, BuildOptions options) {
  if (options.validate) {
    if (auto report = validate_skip_list(q, skips); !report.ok()) {
      throw RejectedInput("invalid skip-list", std::move(report));
    }
    if (auto report = validate_flag_compat(q, skips, flags); !report.ok()) {
      throw RejectedInput("flag-set is not compatible with the skip-list", std::move(report));
    }
  }

  FsTree t;
  auto add_vertex = [&](int level, AnswerString alpha) {
    t.out.emplace_back();
    t.skipped.push_back(skips.contains(level, alpha));
    t.question.push_back(level);
    t.flag.push_back(is_flagged(alpha, flags, q));
    t.answer.push_back(std::move(alpha));
    return t.out.size() - 1;
  };
  add_vertex(0, AnswerString{});

  std::deque<Vertex> queue{0};
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    const int level = t.question[u];
    if (level >= q.size()) {
      continue;
    }
    std::vector<Symbol> choices;
    if (t.skipped[u]) {
      choices.push_back(kStar);
    } else {
      for (Symbol j = 0; j < q.answers(level); ++j) {
        choices.push_back(j);
      }
    }
    for (Symbol a : choices) {
      const Vertex c = add_vertex(level + 1, t.answer[u].extended(a));
      t.out[u].push_back(c);
      queue.push_back(c);
    }
  }
  return t;
}

SkipList skip_list_of_tree(const FsTree& tree, const Questionnaire& q) {
  SkipList s(q.size());
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    if (tree.skipped[v] && tree.question[v] > 0 && tree.question[v] < q.size()) {
      s.add(tree.question[v], tree.answer[v]);
    }
  }
  return s;
}

SubtreeView subtree(const FsTree& tree, Vertex root) {
  if (root >= tree.vertex_count()) {
    throw ContractError("subtree: unknown vertex " + std::to_string(root));
  }
  SubtreeView view{&tree, root, {root}};
  for (std::size_t i = 0; i < view.vertices.size(); ++i) {
    for (Vertex c : tree.out[view.vertices[i]]) {
      view.vertices.push_back(c);
    }
  }
  return view;
}

std::optional<Vertex> find_vertex(const FsTree& tree, const AnswerString& a) {
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    if (tree.question[v] == static_cast<int>(a.size()) && tree.answer[v] == a) {
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace qflow
