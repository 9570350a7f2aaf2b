#pragma once

// Fixtures and test-side reference helpers shared by the unit tests and the
// acceptance runner.  Nothing here calls the code paths it is used to check.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qflow/core.hpp"
#include "qflow/ordering.hpp"
#include "qflow/preprocess.hpp"

namespace qflow::test {

// ---------------------------------------------------------------------------
// Worked example: five questions, M = (2, 3, 4, 2, 2).

inline Questionnaire q5() { return Questionnaire({2, 3, 4, 2, 2}); }

inline AnswerString str(const std::string& text, const Questionnaire& q, int start = 0) {
  return parse_answer_string(text, q, start);
}

inline AnswerSet strs(std::initializer_list<const char*> texts, const Questionnaire& q) {
  AnswerSet out;
  for (const char* t : texts) {
    out.insert(parse_answer_string(t, q));
  }
  return out;
}

inline PrecedenceRelation r5() { return PrecedenceRelation(5, {{0, 1}, {0, 2}, {1, 4}, {2, 3}}); }

inline std::vector<Ordering> orders5() {
  return {{0, 1, 2, 3, 4}, {0, 1, 2, 4, 3}, {0, 1, 4, 2, 3}, {0, 2, 1, 3, 4}, {0, 2, 1, 4, 3}, {0, 2, 3, 1, 4}};
}

inline PreSkipList pre_skip5() {
  const auto q = q5();
  PreSkipList p(5);
  p.patterns[1] = {parse_pattern("0", q)};
  p.patterns[3] = {parse_pattern("??0", q)};
  return p;
}

inline PreFlagSet pre_flag5() {
  const auto q = q5();
  return {parse_pattern("?00??", q), parse_pattern("?1??1", q), parse_pattern("0?0??", q)};
}

inline SkipList s5() {
  const auto q = q5();
  SkipList s(5);
  s.at(1) = strs({"0"}, q);
  s.at(3) = strs({"0*0", "100", "110", "120"}, q);
  return s;
}

inline FlagSet f5() {
  return strs({"100**", "110*1", "11101", "11111", "11201", "11211", "11301", "11311", "0*0**"}, q5());
}

// ---------------------------------------------------------------------------
// Reference helpers

/// Decision tree size without skips: 1 + sum over k of m_0 * ... * m_{k-1}.
inline std::size_t decision_tree_size(const std::vector<int>& m) {
  std::size_t total = 1;
  std::size_t layer = 1;
  for (int mi : m) {
    layer *= static_cast<std::size_t>(mi);
    total += layer;
  }
  return total;
}

/// Pattern match written out position by position; a wildcard also covers *.
inline bool pattern_covers(const GeneralizedPattern& p, const AnswerString& a) {
  if (p.size() != a.size()) {
    return false;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != kAny && p[i] != a[i]) {
      return false;
    }
  }
  return true;
}

/// Every full answer string of the questionnaire under `skips`, found by
/// depth-first recursion on the skip rule alone.
inline std::vector<AnswerString> full_strings(const Questionnaire& q, const SkipList& skips) {
  std::vector<AnswerString> out;
  std::function<void(std::vector<Symbol>&)> rec = [&](std::vector<Symbol>& prefix) {
    const int level = static_cast<int>(prefix.size());
    if (level == q.size()) {
      out.push_back(AnswerString::prefix(prefix));
      return;
    }
    if (skips.at(level).count(AnswerString::prefix(prefix)) != 0) {
      prefix.push_back(kStar);
      rec(prefix);
      prefix.pop_back();
      return;
    }
    for (Symbol j = 0; j < q.answers(level); ++j) {
      prefix.push_back(j);
      rec(prefix);
      prefix.pop_back();
    }
  };
  std::vector<Symbol> start;
  rec(start);
  return out;
}

// ---------------------------------------------------------------------------
// Random corpus: N <= 4, m_i in {2, 3}, random pre-lists.

struct Instance {
  Questionnaire q{std::vector<int>{2}};
  PreSkipList pre_skip;
  PreFlagSet pre_flag;
  SkipList skips;
  FlagSet flags;
};

struct Corpus {
  std::vector<Instance> instances;
  /// Draws thrown away because the expanded flag-set was not compatible.
  int rejected = 0;
};

inline GeneralizedPattern random_pattern(std::mt19937_64& rng, const Questionnaire& q, int length,
                                         double wildcard) {
  std::bernoulli_distribution any(wildcard);
  std::vector<Symbol> symbols;
  for (int i = 0; i < length; ++i) {
    if (any(rng)) {
      symbols.push_back(kAny);
    } else {
      symbols.push_back(std::uniform_int_distribution<Symbol>(0, q.answers(i) - 1)(rng));
    }
  }
  return GeneralizedPattern::prefix(std::move(symbols));
}

inline Corpus random_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Corpus corpus;
  while (corpus.instances.size() < count) {
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<int> m;
    for (int i = 0; i < n; ++i) {
      m.push_back(std::uniform_int_distribution<int>(2, 3)(rng));
    }
    Instance inst;
    inst.q = Questionnaire(m);
    inst.pre_skip = PreSkipList(n);
    for (int qi = 1; qi < n; ++qi) {
      const int k = std::uniform_int_distribution<int>(0, 2)(rng);
      for (int j = 0; j < k; ++j) {
        inst.pre_skip.patterns[static_cast<std::size_t>(qi)].push_back(random_pattern(rng, inst.q, qi, 0.35));
      }
    }
    const int flags = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int j = 0; j < flags; ++j) {
      inst.pre_flag.push_back(random_pattern(rng, inst.q, n, 0.5));
    }
    inst.skips = expand_skip_list(inst.q, inst.pre_skip);
    try {
      inst.flags = expand_flag_set(inst.q, inst.skips, inst.pre_flag);
    } catch (const IncompatibleFlagSet&) {
      ++corpus.rejected;
      continue;
    }
    corpus.instances.push_back(std::move(inst));
  }
  return corpus;
}

inline constexpr std::uint64_t kCorpusSeed = 20240611;
inline constexpr std::size_t kCorpusSize = 120;

/// Random irreflexive relation on Z_n with roughly `density` of all ordered pairs.
inline PrecedenceRelation random_relation(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution pick(density);
  std::set<PrecedenceRelation::Pair> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && pick(rng)) {
        pairs.emplace(a, b);
      }
    }
  }
  return PrecedenceRelation(n, std::move(pairs));
}

}  // namespace qflow::test
