// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qflow/core.hpp"
#include "qflow/fsdigraph.hpp"
#include "qflow/fstree.hpp"
#include "qflow/oracles.hpp"
#include "qflow/ordering.hpp"
#include "qflow/preprocess.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace qflow;
using namespace qflow::test;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
  std::cout << "criterion " << id << " [" << name << "]: " << (o.pass ? "PASS" : "FAIL");
  if (!o.detail.empty()) {
    std::cout << " (" << o.detail << ")";
  }
  std::cout << "\n";
  if (!o.pass) {
    ++failures;
  }
}

template <typename F>
void run(int id, const std::string& name, F&& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  report(id, name, o);
}

struct Case {
  Questionnaire q;
  PreSkipList pre_skip;
  PreFlagSet pre_flag;
  SkipList skips;
  FlagSet flags;
};

std::vector<Case> cases(const Corpus& corpus) {
  std::vector<Case> out{{q5(), pre_skip5(), pre_flag5(), s5(), f5()}};
  for (const auto& i : corpus.instances) {
    out.push_back({i.q, i.pre_skip, i.pre_flag, i.skips, i.flags});
  }
  return out;
}

Outcome orderings_golden() {
  const auto result = enumerate_orderings(r5());
  if (!std::holds_alternative<std::vector<Ordering>>(result)) {
    return {false, "relation reported inadmissible"};
  }
  const auto& got = std::get<std::vector<Ordering>>(result);
  return {got == orders5(), std::to_string(got.size()) + " orders"};
}

Outcome skip_golden() {
  const auto got = expand_skip_list(q5(), pre_skip5());
  return {got == s5(), "total " + std::to_string(got.total()) + " strings"};
}

Outcome flag_golden() {
  const auto got = expand_flag_set(q5(), s5(), pre_flag5());
  const bool compat = validate_flag_compat(q5(), s5(), got).ok();
  return {got == f5() && compat, std::to_string(got.size()) + " strings, compatible=" + (compat ? "yes" : "no")};
}

Outcome tree_size() {
  const std::vector<int> m{2, 3, 4, 2, 2};
  const auto expected = decision_tree_size(m);
  const auto t = build_fs_tree(Questionnaire(m), {}, SkipList(5));
  return {t.vertex_count() == expected && expected == 177,
          std::to_string(t.vertex_count()) + " vertices, formula " + std::to_string(expected)};
}

Outcome round_trip(const std::vector<Case>& all) {
  const auto start = std::chrono::steady_clock::now();
  int bad = 0;
  for (const auto& c : all) {
    if (unfold(build_fs_digraph(c.q, c.flags, c.skips), c.q) != build_fs_tree(c.q, c.flags, c.skips)) {
      ++bad;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << all.size() << " instances, " << bad << " mismatches, " << secs << " s";
  return {bad == 0 && secs < 60.0, d.str()};
}

Outcome equivalence(const std::vector<Case>& all) {
  long pairs = 0;
  long equivalent = 0;
  long disagreements = 0;
  for (const auto& c : all) {
    const auto t = build_fs_tree(c.q, c.flags, c.skips);
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
      for (Vertex w = v + 1; w < t.vertex_count(); ++w) {
        if (t.question[v] != t.question[w]) {
          continue;
        }
        ++pairs;
        const bool fast = equiv(t.answer[v], t.answer[w], c.flags, c.skips, c.q);
        const bool brute = equiv_bruteforce(t, v, w);
        equivalent += brute ? 1 : 0;
        disagreements += fast != brute ? 1 : 0;
      }
    }
  }
  return {disagreements == 0 && pairs > 0, std::to_string(pairs) + " pairs, " + std::to_string(equivalent) +
                                               " equivalent, " + std::to_string(disagreements) + " disagreements"};
}

Outcome confluence(const std::vector<Case>& all) {
  constexpr int kSeeds = 10;
  int failed = 0;
  for (const auto& c : all) {
    const auto t = build_fs_tree(c.q, c.flags, c.skips);
    const auto d = build_fs_digraph(c.q, c.flags, c.skips);
    for (int s = 0; s < kSeeds; ++s) {
      if (!digraph_isomorphic(reduce_exhaustive(t, c.q, static_cast<std::uint64_t>(s)), d)) {
        ++failed;
      }
    }
  }
  return {failed == 0, std::to_string(all.size() * kSeeds) + " reductions, " + std::to_string(failed) + " failures"};
}

Outcome semantics(const std::vector<Case>& all) {
  long checked = 0;
  long bad = 0;
  for (const auto& c : all) {
    const auto t = build_fs_tree(c.q, c.flags, c.skips);
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
      const int level = t.question[v];
      const auto& a = t.answer[v];
      if (level < c.q.size()) {
        const auto& pats = c.pre_skip.patterns[static_cast<std::size_t>(level)];
        const bool expect = std::any_of(pats.begin(), pats.end(), [&](const auto& p) { return pattern_covers(p, a); });
        ++checked;
        bad += expect != t.skipped[v] ? 1 : 0;
      } else {
        const bool expect =
            std::any_of(c.pre_flag.begin(), c.pre_flag.end(), [&](const auto& p) { return pattern_covers(p, a); });
        ++checked;
        bad += expect != t.flag[v] ? 1 : 0;
      }
    }
  }
  return {bad == 0, std::to_string(checked) + " vertices, " + std::to_string(bad) + " disagreements"};
}

Outcome ordering_oracle() {
  std::mt19937_64 rng(kCorpusSeed);
  int bad = 0;
  int cyclic = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const double density = std::uniform_real_distribution<double>(0.0, 0.4)(rng);
    const auto r = random_relation(rng, n, density);
    const auto fast = enumerate_orderings(r);
    const auto brute = orderings_bruteforce(r);
    if (std::holds_alternative<Inadmissible>(fast)) {
      ++cyclic;
      bad += brute.empty() ? 0 : 1;
      continue;
    }
    const auto& got = std::get<std::vector<Ordering>>(fast);
    const std::set<Ordering> a(got.begin(), got.end());
    const std::set<Ordering> b(brute.begin(), brute.end());
    bad += a == b ? 0 : 1;
  }
  return {bad == 0, "200 relations, " + std::to_string(cyclic) + " cyclic, " + std::to_string(bad) + " disagreements"};
}

Outcome skip_uniqueness(const std::vector<Case>& all) {
  int bad = 0;
  for (const auto& c : all) {
    if (skip_list_of_tree(build_fs_tree(c.q, c.flags, c.skips), c.q) != c.skips) {
      ++bad;
    }
  }
  return {bad == 0, std::to_string(all.size()) + " instances, " + std::to_string(bad) + " mismatches"};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  const fs::path dir = fs::path(QFLOW_WORK_DIR) / "determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cli = QFLOW_CLI;
  const std::string spec = QFLOW_SAMPLE;

  struct Command {
    std::string name;
    std::string args;
    std::vector<std::string> outputs;
  };
  const std::vector<Command> commands{
      {"expand", "expand", {"json"}},
      {"tree", "tree", {"json", "dot"}},
      {"digraph", "digraph", {"json", "dot"}},
  };
  int compared = 0;
  for (const auto& cmd : commands) {
    for (int run = 0; run < 2; ++run) {
      const std::string base = (dir / (cmd.name + "." + std::to_string(run))).string();
      std::string line = "\"" + cli + "\" " + cmd.args + " \"" + spec + "\" -o \"" + base + ".json\"";
      if (cmd.outputs.size() > 1) {
        line += " --dot \"" + base + ".dot\"";
      }
      if (std::system(line.c_str()) != 0) {
        return {false, cmd.name + " run " + std::to_string(run) + " exited non-zero"};
      }
    }
    for (const auto& ext : cmd.outputs) {
      const auto a = slurp(dir / (cmd.name + ".0." + ext));
      const auto b = slurp(dir / (cmd.name + ".1." + ext));
      if (a.empty() || a != b) {
        return {false, cmd.name + " " + ext + " output differs between runs"};
      }
      ++compared;
    }
  }
  return {true, std::to_string(compared) + " output files byte-identical"};
}

}  // namespace

int main() {
  const auto corpus = random_corpus(kCorpusSize, kCorpusSeed);
  const auto all = cases(corpus);
  std::cout << "corpus: " << corpus.instances.size() << " random instances (seed " << kCorpusSeed << ", "
            << corpus.rejected << " incompatible draws discarded) plus the worked example\n";
  int with_skips = 0;
  int with_flags = 0;
  int four = 0;
  for (const auto& i : corpus.instances) {
    with_skips += i.skips.total() > 0 ? 1 : 0;
    with_flags += i.flags.empty() ? 0 : 1;
    four += i.q.size() == 4 ? 1 : 0;
  }
  std::cout << "corpus: " << with_skips << " with skips, " << with_flags << " with flags, " << four
            << " with N = 4\n";

  run(1, "orderings golden", orderings_golden);
  run(2, "skip-list expansion golden", skip_golden);
  run(3, "flag-set expansion golden", flag_golden);
  run(4, "decision tree size", tree_size);
  run(5, "unfold round trip", [&] { return round_trip(all); });
  run(6, "local-set equivalence vs bijection", [&] { return equivalence(all); });
  run(7, "confluence of exhaustive merging", [&] { return confluence(all); });
  run(8, "skip and flag semantics", [&] { return semantics(all); });
  run(9, "ordering oracle", ordering_oracle);
  run(10, "skip-list uniqueness", [&] { return skip_uniqueness(all); });
  run(11, "CLI determinism", determinism);

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
