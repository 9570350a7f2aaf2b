#include "qflow/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace qflow {

Questionnaire::Questionnaire(std::vector<int> answer_counts) : answer_counts_(std::move(answer_counts)) {
  if (answer_counts_.empty()) {
    throw InputError("questionnaire needs at least one question");
  }
  for (std::size_t i = 0; i < answer_counts_.size(); ++i) {
    if (answer_counts_[i] < 1) {
      throw InputError("question " + std::to_string(i) + " must have at least one answer");
    }
  }
}

Notation Questionnaire::notation() const {
  const bool small = std::all_of(answer_counts_.begin(), answer_counts_.end(), [](int m) { return m <= 10; });
  return small ? Notation::compact : Notation::extended;
}

bool Questionnaire::all_branching() const {
  return std::all_of(answer_counts_.begin(), answer_counts_.end(), [](int m) { return m >= 2; });
}

namespace detail {

SymbolRun::SymbolRun(int start, std::vector<Symbol> symbols) : start_(start), symbols_(std::move(symbols)) {
  if (symbols_.empty()) {
    start_ = 0;
  } else if (start_ < 0) {
    throw ContractError("answer string cannot start at a negative position");
  }
}

Symbol SymbolRun::at_position(int position) const {
  if (position < start_ || position >= end()) {
    throw ContractError("position " + std::to_string(position) + " outside of string");
  }
  return symbols_[static_cast<std::size_t>(position - start_)];
}

std::strong_ordering operator<=>(const SymbolRun& a, const SymbolRun& b) {
  const auto by_symbols = std::lexicographical_compare_three_way(a.symbols_.begin(), a.symbols_.end(),
                                                                 b.symbols_.begin(), b.symbols_.end());
  if (by_symbols != 0) {
    return by_symbols;
  }
  return a.start_ <=> b.start_;
}

}  // namespace detail

AnswerString AnswerString::head(std::size_t length) const {
  if (length > size()) {
    throw ContractError("head longer than string");
  }
  return AnswerString(start_, std::vector<Symbol>(symbols_.begin(), symbols_.begin() + static_cast<std::ptrdiff_t>(length)));
}

AnswerString AnswerString::tail(std::size_t offset) const {
  if (offset > size()) {
    throw ContractError("tail offset beyond string");
  }
  return AnswerString(start_ + static_cast<int>(offset),
                      std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(offset), symbols_.end()));
}

AnswerString AnswerString::extended(Symbol symbol) const {
  std::vector<Symbol> out = symbols_;
  out.push_back(symbol);
  return AnswerString(start_, std::move(out));
}

AnswerString AnswerString::padded(int length) const {
  std::vector<Symbol> out = symbols_;
  const int begin = empty() ? 0 : start_;
  while (begin + static_cast<int>(out.size()) < length) {
    out.push_back(kStar);
  }
  return AnswerString(begin, std::move(out));
}

bool AnswerString::has_prefix(const AnswerString& prefix) const {
  if (prefix.empty()) {
    return true;
  }
  if (prefix.start() != start_ || prefix.size() > size()) {
    return false;
  }
  return std::equal(prefix.symbols().begin(), prefix.symbols().end(), symbols_.begin());
}

bool SkipList::contains(int q, const AnswerString& a) const {
  if (q < 0 || static_cast<std::size_t>(q) >= sets_.size()) {
    return false;
  }
  return sets_[static_cast<std::size_t>(q)].count(a) != 0;
}

std::size_t SkipList::total() const {
  std::size_t n = 0;
  for (const auto& s : sets_) {
    n += s.size();
  }
  return n;
}

AnswerString concat(const AnswerString& a, const AnswerString& b) {
  if (a.empty()) {
    return b;
  }
  if (b.empty()) {
    return a;
  }
  if (b.start() != a.end()) {
    throw ContractError("concat: second string starts at " + std::to_string(b.start()) + ", expected " +
                        std::to_string(a.end()));
  }
  std::vector<Symbol> out(a.symbols().begin(), a.symbols().end());
  out.insert(out.end(), b.symbols().begin(), b.symbols().end());
  return AnswerString(a.start(), std::move(out));
}

bool matches(const GeneralizedPattern& p, const AnswerString& a) {
  if (p.size() != a.size() || (!p.empty() && p.start() != a.start())) {
    throw ContractError("matches: pattern and string cover different positions");
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != kAny && p[i] != a[i]) {
      return false;
    }
  }
  return true;
}

bool is_flagged(const AnswerString& a, const FlagSet& flags, const Questionnaire& q) {
  if (flags.empty()) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (flags.count(a.head(i + 1).padded(q.size())) != 0) {
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  if (ok()) {
    out << "ok\n";
  }
  for (const auto& v : violations) {
    out << v.clause << ' ' << (v.subject.empty() ? "eps" : v.subject) << ": " << v.detail << '\n';
  }
  return out.str();
}

RejectedInput::RejectedInput(const std::string& what, ValidationReport report)
    : InputError(what + "\n" + report.to_string()), report_(std::move(report)) {}

namespace {

bool symbol_in_alphabet(Symbol s, int m, bool allow_star) {
  return (s >= 0 && s < m) || (allow_star && s == kStar);
}

// Checks that `a` is a (0,len-1)-string over A_i^*.
bool well_formed(const AnswerString& a, const Questionnaire& q, std::size_t len) {
  if (a.size() != len || (!a.empty() && a.start() != 0)) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!symbol_in_alphabet(a[i], q.answers(static_cast<int>(i)), true)) {
      return false;
    }
  }
  return true;
}

}  // namespace

ValidationReport validate_skip_list(const Questionnaire& q, const SkipList& skips) {
  ValidationReport report;
  const Notation notation = q.notation();
  const int n = q.size();
  if (skips.size() != static_cast<std::size_t>(n) + 1) {
    report.violations.push_back({"(i)", "", "skip-list has " + std::to_string(skips.size()) +
                                                " components, expected " + std::to_string(n + 1)});
    return report;
  }
  for (int edge : {0, n}) {
    for (const auto& a : skips.at(edge)) {
      report.violations.push_back({"(i)", format(a, notation), "S_" + std::to_string(edge) + " must be empty"});
    }
  }
  for (int len = 1; len < n; ++len) {
    for (const auto& a : skips.at(len)) {
      const std::string text = format(a, notation);
      if (!well_formed(a, q, static_cast<std::size_t>(len))) {
        report.violations.push_back({"(ii)", text, "S_" + std::to_string(len) + " requires a (0," +
                                                       std::to_string(len - 1) + ")-answer string"});
        continue;
      }
      // Every prefix a_0..a_{i-1} decides whether position i is a star.
      // Position 0 is never skipped since S_0 is empty.
      for (int i = 0; i < len; ++i) {
        const bool prefix_skipped = i > 0 && skips.contains(i, a.head(static_cast<std::size_t>(i)));
        const bool star = a[static_cast<std::size_t>(i)] == kStar;
        if (prefix_skipped && !star) {
          report.violations.push_back(
              {"(iii)", text,
               "extends skipped \"" + format(a.head(static_cast<std::size_t>(i)), notation) +
                   "\" with a concrete answer at position " + std::to_string(i)});
        } else if (!prefix_skipped && star) {
          report.violations.push_back(
              {"(iii)", text,
               "has * at position " + std::to_string(i) + " but \"" +
                   format(a.head(static_cast<std::size_t>(i)), notation) + "\" is not in S_" + std::to_string(i)});
        }
      }
    }
  }
  return report;
}

ValidationReport validate_flag_compat(const Questionnaire& q, const SkipList& skips, const FlagSet& flags) {
  ValidationReport report;
  const Notation notation = q.notation();
  const int n = q.size();
  for (const auto& f : flags) {
    const std::string text = format(f, notation);
    if (!well_formed(f, q, static_cast<std::size_t>(n))) {
      report.violations.push_back({"(i)", text, "flags must be (0," + std::to_string(n - 1) + ")-answer strings"});
      continue;
    }
    // (iv) forbids any l beyond the last concrete symbol, so l is forced.
    int last = n - 1;
    while (last >= 0 && f[static_cast<std::size_t>(last)] == kStar) {
      --last;
    }
    if (last < 0) {
      report.violations.push_back({"(ii)", text, "first symbol must not be *"});
      continue;
    }
    const auto ell = static_cast<std::size_t>(last);
    for (std::size_t i = 0; i <= ell; ++i) {
      const bool prefix_skipped = i > 0 && skips.contains(static_cast<int>(i), f.head(i));
      const bool star = f[i] == kStar;
      if (prefix_skipped != star) {
        report.violations.push_back(
            {"(ii)", text,
             std::string(star ? "* at position " : "answer at position ") + std::to_string(i) +
                 (prefix_skipped ? " although the question is skipped" : " although the question is not skipped")});
      }
    }
    bool sibling_missing = false;
    for (int j = 0; j < q.answers(last) && !sibling_missing; ++j) {
      sibling_missing = flags.count(f.head(ell).extended(j).padded(n)) == 0;
    }
    if (!sibling_missing) {
      report.violations.push_back(
          {"(iii)", text, "every sibling " + format(f.head(ell), notation) + "j*...* is flagged"});
    }
    for (std::size_t i = 0; i < ell; ++i) {
      const AnswerString shorter = f.head(i + 1).padded(n);
      if (flags.count(shorter) != 0) {
        report.violations.push_back(
            {"(iv)", text, "star-padded prefix " + format(shorter, notation) + " is also flagged"});
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

std::string render(std::span<const Symbol> symbols, Notation notation, Symbol wildcard, char wildcard_char) {
  // Out-of-range symbols (only seen while reporting invalid input) force the token form.
  if (std::any_of(symbols.begin(), symbols.end(), [&](Symbol s) { return s != wildcard && (s < 0 || s > 9); })) {
    notation = Notation::extended;
  }
  std::string out;
  bool first = true;
  for (Symbol s : symbols) {
    if (notation == Notation::extended && !first) {
      out += ',';
    }
    first = false;
    if (s == wildcard) {
      out += wildcard_char;
    } else if (notation == Notation::compact) {
      out += static_cast<char>('0' + s);
    } else {
      out += std::to_string(s);
    }
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view text, Notation notation) {
  std::vector<std::string_view> out;
  if (text.empty()) {
    return out;
  }
  if (notation == Notation::compact && text.find(',') == std::string_view::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      out.push_back(text.substr(i, 1));
    }
    return out;
  }
  std::size_t begin = 0;
  while (true) {
    const std::size_t comma = text.find(',', begin);
    out.push_back(text.substr(begin, comma == std::string_view::npos ? std::string_view::npos : comma - begin));
    if (comma == std::string_view::npos) {
      break;
    }
    begin = comma + 1;
  }
  return out;
}

std::vector<Symbol> parse_symbols(std::string_view text, const Questionnaire& q, int start, char wildcard_char,
                                  Symbol wildcard) {
  std::vector<Symbol> out;
  int position = start;
  for (std::string_view token : tokens(text, q.notation())) {
    if (position >= q.size()) {
      throw InputError("\"" + std::string(text) + "\" is longer than the questionnaire");
    }
    Symbol s = 0;
    if (token.size() == 1 && token[0] == wildcard_char) {
      s = wildcard;
    } else {
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), s);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw InputError("\"" + std::string(text) + "\": invalid token \"" + std::string(token) + "\"");
      }
      if (s < 0 || s >= q.answers(position)) {
        throw InputError("\"" + std::string(text) + "\": answer " + std::to_string(s) + " out of range for question " +
                         std::to_string(position));
      }
    }
    out.push_back(s);
    ++position;
  }
  return out;
}

}  // namespace

std::string format(const AnswerString& a, Notation notation) { return render(a.symbols(), notation, kStar, '*'); }

std::string format(const GeneralizedPattern& p, Notation notation) { return render(p.symbols(), notation, kAny, '?'); }

std::string display(const AnswerString& a, Notation notation) { return a.empty() ? "eps" : format(a, notation); }

AnswerString parse_answer_string(std::string_view text, const Questionnaire& q, int start) {
  return AnswerString(start, parse_symbols(text, q, start, '*', kStar));
}

GeneralizedPattern parse_pattern(std::string_view text, const Questionnaire& q, int start) {
  return GeneralizedPattern(start, parse_symbols(text, q, start, '?', kAny));
}

}  // namespace qflow
