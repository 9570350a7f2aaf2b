#include "qflow/spec_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qflow {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
  throw SpecError(SpecError::Kind::schema, path + ": " + message);
}

[[noreturn]] void semantic_error(const std::string& path, const std::string& message) {
  throw SpecError(SpecError::Kind::semantic, path + ": " + message);
}

int as_int(const json& value, const std::string& path) {
  if (!value.is_number_integer()) {
    schema_error(path, "expected an integer");
  }
  return value.get<int>();
}

const json& as_array(const json& value, const std::string& path) {
  if (!value.is_array()) {
    schema_error(path, "expected an array");
  }
  return value;
}

std::string as_string(const json& value, const std::string& path) {
  if (!value.is_string()) {
    schema_error(path, "expected a string");
  }
  return value.get<std::string>();
}

GeneralizedPattern pattern_at(const json& value, const std::string& path, const Questionnaire& q,
                              std::size_t length) {
  const std::string text = as_string(value, path);
  GeneralizedPattern p;
  try {
    p = parse_pattern(text, q);
  } catch (const InputError& e) {
    schema_error(path, e.what());
  }
  if (p.size() != length) {
    schema_error(path, "pattern \"" + text + "\" has length " + std::to_string(p.size()) + ", expected " +
                           std::to_string(length));
  }
  return p;
}

}  // namespace

SpecFile parse_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    schema_error("$", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    schema_error("$", "expected an object");
  }
  for (const auto& [key, value] : doc.items()) {
    static const std::vector<std::string> known{"questions", "precedence", "question_order", "pre_skip", "pre_flag"};
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      schema_error("$." + key, "unknown key");
    }
  }

  SpecFile spec;
  if (!doc.contains("questions")) {
    schema_error("$.questions", "missing");
  }
  const json& questions = as_array(doc["questions"], "$.questions");
  if (questions.empty()) {
    schema_error("$.questions", "needs at least one question");
  }
  for (std::size_t i = 0; i < questions.size(); ++i) {
    const std::string path = "$.questions[" + std::to_string(i) + "]";
    const int m = as_int(questions[i], path);
    if (m < 1) {
      schema_error(path, "answer count must be positive");
    }
    spec.questions.push_back(m);
  }
  const int n = static_cast<int>(spec.questions.size());
  const Questionnaire original(spec.questions);

  std::set<PrecedenceRelation::Pair> pairs;
  if (doc.contains("precedence")) {
    const json& list = as_array(doc["precedence"], "$.precedence");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = "$.precedence[" + std::to_string(i) + "]";
      const json& pair = as_array(list[i], path);
      if (pair.size() != 2) {
        schema_error(path, "expected a pair [before, after]");
      }
      const int a = as_int(pair[0], path + "[0]");
      const int b = as_int(pair[1], path + "[1]");
      if (a < 0 || a >= n || b < 0 || b >= n) {
        schema_error(path, "question index out of range");
      }
      if (a == b) {
        semantic_error(path, "a question cannot precede itself");
      }
      pairs.emplace(a, b);
    }
  }
  spec.precedence = PrecedenceRelation(n, std::move(pairs));

  Ordering order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    order[static_cast<std::size_t>(i)] = i;
  }
  if (doc.contains("question_order")) {
    const json& list = as_array(doc["question_order"], "$.question_order");
    if (list.size() != static_cast<std::size_t>(n)) {
      schema_error("$.question_order", "must list every question exactly once");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = "$.question_order[" + std::to_string(i) + "]";
      const int qn = as_int(list[i], path);
      if (qn < 0 || qn >= n || seen[static_cast<std::size_t>(qn)]) {
        schema_error(path, "not a permutation of the question indices");
      }
      seen[static_cast<std::size_t>(qn)] = true;
      order[i] = qn;
    }
    spec.question_order = order;
  }
  if (!spec.precedence.pairs().empty()) {
    if (const auto result = enumerate_orderings(spec.precedence); std::holds_alternative<Inadmissible>(result)) {
      std::string cycle;
      for (Question x : std::get<Inadmissible>(result).cycle) {
        cycle += (cycle.empty() ? "" : " -> ") + std::to_string(x);
      }
      throw SpecError(SpecError::Kind::inadmissible, "$.precedence: directed cycle " + cycle);
    }
    if (spec.question_order && !extends(*spec.question_order, spec.precedence)) {
      semantic_error("$.question_order", "does not respect the precedence relation");
    }
  }

  std::vector<int> position(static_cast<std::size_t>(n));
  std::vector<int> asked_counts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    asked_counts[static_cast<std::size_t>(i)] = spec.questions[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
  }
  spec.questionnaire = Questionnaire(asked_counts);
  const Questionnaire& q = spec.questionnaire;

  spec.pre_skip = PreSkipList(n);
  if (doc.contains("pre_skip")) {
    const json& skips = doc["pre_skip"];
    if (!skips.is_object()) {
      schema_error("$.pre_skip", "expected an object keyed by question index");
    }
    for (const auto& [key, list] : skips.items()) {
      const std::string path = "$.pre_skip." + key;
      int original_q = -1;
      const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), original_q);
      if (ec != std::errc() || ptr != key.data() + key.size() || original_q < 0 || original_q > n) {
        schema_error(path, "key must be a question index in 0.." + std::to_string(n));
      }
      const int target = original_q == n ? n : position[static_cast<std::size_t>(original_q)];
      as_array(list, path);
      if (!list.empty() && (target == 0 || target == n)) {
        semantic_error(path, "question " + std::to_string(target) + " cannot be skipped (P_0 and P_N must be empty)");
      }
      for (std::size_t i = 0; i < list.size(); ++i) {
        spec.pre_skip.patterns[static_cast<std::size_t>(target)].push_back(
            pattern_at(list[i], path + "[" + std::to_string(i) + "]", q, static_cast<std::size_t>(target)));
      }
    }
  }

  if (doc.contains("pre_flag")) {
    const json& list = as_array(doc["pre_flag"], "$.pre_flag");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const GeneralizedPattern p =
          pattern_at(list[i], "$.pre_flag[" + std::to_string(i) + "]", original, static_cast<std::size_t>(n));
      std::vector<Symbol> permuted(static_cast<std::size_t>(n));
      for (std::size_t j = 0; j < permuted.size(); ++j) {
        permuted[j] = p[static_cast<std::size_t>(order[j])];
      }
      spec.pre_flag.push_back(GeneralizedPattern::prefix(std::move(permuted)));
    }
  }
  return spec;
}

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw SpecError(SpecError::Kind::schema, path + ": cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

namespace {

json string_list(const AnswerSet& set, Notation notation) {
  json out = json::array();
  for (const auto& a : set) {
    out.push_back(format(a, notation));
  }
  return out;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string emit_expanded(const Questionnaire& q, const SkipList& skips, const FlagSet& flags) {
  const Notation notation = q.notation();
  json doc;
  doc["flag"] = string_list(flags, notation);
  doc["skip"] = json::object();
  for (int i = 0; i < static_cast<int>(skips.size()); ++i) {
    if (!skips.at(i).empty()) {
      doc["skip"][std::to_string(i)] = string_list(skips.at(i), notation);
    }
  }
  return dump(doc);
}

std::string emit_orderings(const std::vector<Ordering>& orders) { return json(orders).dump() + "\n"; }

std::string emit_tree(const FsTree& tree, const Questionnaire& q) {
  json vertices = json::array();
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    vertices.push_back({{"id", v},
                        {"level", tree.question[v]},
                        {"answer", format(tree.answer[v], q.notation())},
                        {"skipped", static_cast<bool>(tree.skipped[v])},
                        {"flagged", static_cast<bool>(tree.flag[v])},
                        {"out", tree.out[v]}});
  }
  return dump(json{{"kind", "fs_tree"}, {"vertices", std::move(vertices)}});
}

std::string emit_digraph(const FsDigraph& d, const Questionnaire& q) {
  json vertices = json::array();
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    AnswerSet answers(d.answers[v].begin(), d.answers[v].end());
    vertices.push_back({{"id", v},
                        {"level", d.level[v]},
                        {"answers", string_list(answers, q.notation())},
                        {"skipped", static_cast<bool>(d.skipped[v])},
                        {"flagged", static_cast<bool>(d.flag[v])},
                        {"out", d.out[v]}});
  }
  return dump(json{{"kind", "fs_digraph"}, {"vertices", std::move(vertices)}});
}

}  // namespace qflow
