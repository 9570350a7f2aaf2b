#include "qflow/preprocess.hpp"

#include <algorithm>
#include <string>

namespace qflow {

namespace {

void check_pattern(const GeneralizedPattern& p, const Questionnaire& q, std::size_t length, const std::string& where) {
  if (p.size() != length || (!p.empty() && p.start() != 0)) {
    throw InputError(where + ": pattern \"" + format(p, q.notation()) + "\" must have length " +
                     std::to_string(length));
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Symbol s = p[i];
    if (s != kAny && (s < 0 || s >= q.answers(static_cast<int>(i)))) {
      throw InputError(where + ": pattern \"" + format(p, q.notation()) + "\" has an invalid symbol at position " +
                       std::to_string(i));
    }
  }
}

AnswerSet first_position(const GeneralizedPattern& p, const Questionnaire& q) {
  AnswerSet out;
  if (p[0] == kAny) {
    for (Symbol j = 0; j < q.answers(0); ++j) {
      out.insert(AnswerString::prefix({j}));
    }
  } else {
    out.insert(AnswerString::prefix({p[0]}));
  }
  return out;
}

// One step of the expansion shared by skip-lists and flag-sets: prefixes
// already skipped at question i take a star (or are dropped when the
// pattern demands a concrete answer there); the others take p_i, or every
// answer when p_i is the wildcard.
AnswerSet expand_position(const AnswerSet& current, Symbol p_i, int i, const Questionnaire& q,
                          const SkipList& skips) {
  AnswerSet out;
  for (const auto& t : current) {
    if (skips.contains(i, t)) {
      if (p_i == kAny) {
        out.insert(t.extended(kStar));
      }
    } else if (p_i == kAny) {
      for (Symbol j = 0; j < q.answers(i); ++j) {
        out.insert(t.extended(j));
      }
    } else {
      out.insert(t.extended(p_i));
    }
  }
  return out;
}

void drop_contained(AnswerSet& candidates, const FlagSet& flags, int n) {
  std::erase_if(candidates, [&](const AnswerString& g) { return is_contained(g, flags, n); });
}

}  // namespace

SkipList expand_skip_list(const Questionnaire& q, const PreSkipList& pre) {
  const int n = q.size();
  if (pre.patterns.size() != static_cast<std::size_t>(n) + 1) {
    throw InputError("pre-skip-list needs " + std::to_string(n + 1) + " components");
  }
  for (int edge : {0, n}) {
    if (!pre.patterns[static_cast<std::size_t>(edge)].empty()) {
      throw InputError("pre-skip-list component P_" + std::to_string(edge) + " must be empty");
    }
  }
  for (int len = 1; len < n; ++len) {
    for (const auto& p : pre.patterns[static_cast<std::size_t>(len)]) {
      check_pattern(p, q, static_cast<std::size_t>(len), "P_" + std::to_string(len));
    }
  }

  SkipList skips(n);
  if (n >= 2) {
    for (const auto& p : pre.patterns[1]) {
      for (auto& a : first_position(p, q)) {
        skips.add(1, a);
      }
    }
  }
  for (int len = 2; len < n; ++len) {
    for (const auto& p : pre.patterns[static_cast<std::size_t>(len)]) {
      AnswerSet current = first_position(p, q);
      for (int i = 1; i < len; ++i) {
        current = expand_position(current, p[static_cast<std::size_t>(i)], i, q, skips);
      }
      skips.at(len).merge(current);
    }
  }
  return skips;
}

FlagSet expand_flag_set(const Questionnaire& q, const SkipList& skips, const PreFlagSet& pre) {
  const int n = q.size();
  for (const auto& p : pre) {
    check_pattern(p, q, static_cast<std::size_t>(n), "pre-flag-set");
  }

  FlagSet flags;
  for (const auto& p : pre) {
    AnswerSet current = first_position(p, q);
    drop_contained(current, flags, n);
    for (int i = 1; i < n; ++i) {
      const auto rest = p.symbols().subspan(static_cast<std::size_t>(i));
      if (std::all_of(rest.begin(), rest.end(), [](Symbol s) { return s == kAny; })) {
        AnswerSet padded;
        for (const auto& g : current) {
          padded.insert(g.padded(n));
        }
        drop_contained(padded, flags, n);
        current = std::move(padded);
        break;
      }
      current = expand_position(current, p[static_cast<std::size_t>(i)], i, q, skips);
      drop_contained(current, flags, n);
    }
    for (const auto& g : current) {
      std::erase_if(flags, [&](const AnswerString& f) { return replaces(g, f); });
    }
    flags.merge(current);
  }

  if (auto report = validate_flag_compat(q, skips, flags); !report.ok()) {
    throw IncompatibleFlagSet("expanded flag-set is not compatible with the skip-list", std::move(report));
  }
  return flags;
}

bool is_contained(const AnswerString& g, const FlagSet& flags, int n_questions) {
  return flags.count(g.padded(n_questions)) != 0;
}

bool replaces(const AnswerString& g, const AnswerString& f) {
  if (g.size() != f.size()) {
    throw ContractError("replaces: strings of different length");
  }
  std::size_t i = 0;
  while (i < g.size() && g[i] == f[i]) {
    ++i;
  }
  if (i == g.size()) {
    return false;
  }
  const auto rest = g.symbols().subspan(i);
  return std::all_of(rest.begin(), rest.end(), [](Symbol s) { return s == kStar; });
}

}  // namespace qflow
