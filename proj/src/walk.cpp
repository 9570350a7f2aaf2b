#include "qflow/walk.hpp"

#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace qflow {

namespace {

using AskFn = std::function<int(int question, int answer_count)>;

WalkResult walk(const FsDigraph& d, const Questionnaire& q, const AskFn& ask) {
  if (d.vertex_count() == 0 || d.level[0] != 0) {
    throw WalkError("walk: digraph has no level-0 vertex 0");
  }
  WalkResult result;
  std::ostringstream log;
  Vertex v = 0;
  result.path.push_back(v);
  std::vector<Symbol> answers;
  while (d.level[v] < q.size()) {
    const int question = d.level[v];
    Symbol symbol = kStar;
    Vertex next = 0;
    if (d.skipped[v]) {
      next = d.out[v].at(0);
      log << "question " << question << ": skipped\n";
    } else {
      const int answer = ask(question, q.answers(question));
      symbol = answer;
      next = d.out[v].at(static_cast<std::size_t>(answer));
      log << "question " << question << ": " << answer << "\n";
    }
    answers.push_back(symbol);
    v = next;
    result.path.push_back(v);
  }
  result.answers = AnswerString::prefix(std::move(answers));
  result.flagged = d.flag[v];
  log << "answers: " << display(result.answers, q.notation()) << "\n";
  log << "flagged: " << (result.flagged ? "yes" : "no") << "\n";
  result.transcript = log.str();
  return result;
}

}  // namespace

WalkResult walk_scripted(const FsDigraph& d, const Questionnaire& q, std::span<const int> script) {
  std::size_t next = 0;
  WalkResult result = walk(d, q, [&](int question, int answer_count) {
    if (next >= script.size()) {
      throw WalkError("walk: script exhausted at question " + std::to_string(question));
    }
    const int answer = script[next++];
    if (answer < 0 || answer >= answer_count) {
      throw WalkError("walk: answer " + std::to_string(answer) + " out of range for question " +
                      std::to_string(question) + " (0.." + std::to_string(answer_count - 1) + ")");
    }
    return answer;
  });
  if (next != script.size()) {
    throw WalkError("walk: " + std::to_string(script.size() - next) + " scripted answer(s) left unused");
  }
  return result;
}

WalkResult walk_interactive(const FsDigraph& d, const Questionnaire& q, std::istream& in, std::ostream& out) {
  return walk(d, q, [&](int question, int answer_count) {
    while (true) {
      out << "question " << question << " [0-" << answer_count - 1 << "]: " << std::flush;
      std::string line;
      if (!std::getline(in, line)) {
        throw WalkError("walk: input ended at question " + std::to_string(question));
      }
      std::istringstream parse(line);
      int answer = -1;
      std::string rest;
      if (parse >> answer && !(parse >> rest) && answer >= 0 && answer < answer_count) {
        return answer;
      }
      out << "please enter a number between 0 and " << answer_count - 1 << "\n";
    }
  });
}

}  // namespace qflow
