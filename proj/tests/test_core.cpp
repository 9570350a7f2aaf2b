#include <doctest.h>

#include <algorithm>

#include "qflow/core.hpp"
#include "support.hpp"

using namespace qflow;
using namespace qflow::test;

namespace {

bool has_clause(const ValidationReport& r, const std::string& clause) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.clause == clause; });
}

}  // namespace

TEST_CASE("questionnaire construction") {
  CHECK_THROWS_AS(Questionnaire(std::vector<int>{}), InputError);
  CHECK_THROWS_AS(Questionnaire({2, 0}), InputError);

  const Questionnaire q({2, 3, 1});
  CHECK(q.size() == 3);
  CHECK(q.answers(1) == 3);
  CHECK_FALSE(q.all_branching());
  CHECK(q5().all_branching());
  CHECK(q5().notation() == Notation::compact);
  CHECK(Questionnaire({10, 2}).notation() == Notation::compact);
  CHECK(Questionnaire({11, 2}).notation() == Notation::extended);
}

TEST_CASE("answer string text form") {
  const auto q = q5();
  const auto a = parse_answer_string("0*0", q);
  CHECK(a.size() == 3);
  CHECK(a[1] == kStar);
  CHECK(format(a, Notation::compact) == "0*0");
  CHECK(format(a, Notation::extended) == "0,*,0");
  CHECK(display(AnswerString{}, Notation::compact) == "eps");
  CHECK(format(AnswerString{}, Notation::compact).empty());

  SUBCASE("extended input is accepted for compact questionnaires") {
    CHECK(parse_answer_string("1,0,3", q) == parse_answer_string("103", q));
  }
  SUBCASE("extended questionnaire") {
    const Questionnaire big({12, 2});
    const auto b = parse_answer_string("11,1", big);
    CHECK(b[0] == 11);
    CHECK(format(b, big.notation()) == "11,1");
    CHECK_THROWS_AS(parse_answer_string("12,0", big), InputError);
  }
  SUBCASE("offset start") {
    const auto t = parse_answer_string("01", q, 3);
    CHECK(t.start() == 3);
    CHECK(t.end() == 5);
  }
  SUBCASE("rejects bad symbols") {
    CHECK_THROWS_AS(parse_answer_string("2", q), InputError);
    CHECK_THROWS_AS(parse_answer_string("0?", q), InputError);
    CHECK_THROWS_AS(parse_answer_string("000000", q), InputError);
    CHECK_THROWS_AS(parse_answer_string("x", q), InputError);
  }
  SUBCASE("patterns") {
    const auto p = parse_pattern("?1??1", q);
    CHECK(p[0] == kAny);
    CHECK(format(p, Notation::compact) == "?1??1");
    CHECK_THROWS_AS(parse_pattern("0*", q), InputError);
  }
}

TEST_CASE("answer string ordering and slicing") {
  const auto q = q5();
  CHECK(str("01", q) < str("0*", q));
  CHECK(str("0", q) < str("00", q));
  const auto a = str("1030", q);
  CHECK(a.head(2) == str("10", q));
  CHECK(a.tail(2) == str("30", q, 2));
  CHECK(a.tail(2).start() == 2);
  CHECK(a.extended(1) == str("10301", q));
  CHECK(str("0*0", q).padded(5) == str("0*0**", q));
  CHECK(a.has_prefix(str("10", q)));
  CHECK_FALSE(a.has_prefix(str("11", q)));
  CHECK(a.tail(4).empty());
  CHECK(a.tail(4) == AnswerString{});
  CHECK_THROWS_AS((void)a.head(5), ContractError);
}

TEST_CASE("concat and matches") {
  const auto q = q5();
  CHECK(concat(str("10", q), parse_answer_string("30", q, 2)) == str("1030", q));
  CHECK(concat(AnswerString{}, str("1", q)) == str("1", q));
  CHECK_THROWS_AS(concat(str("10", q), str("00", q)), ContractError);

  CHECK(matches(parse_pattern("??0", q), str("0*0", q)));
  CHECK(matches(parse_pattern("??0", q), str("120", q)));
  CHECK_FALSE(matches(parse_pattern("?00", q), str("0*0", q)));
  CHECK_THROWS_AS(matches(parse_pattern("??", q), str("120", q)), ContractError);
}

TEST_CASE("is_flagged against the worked example flag-set") {
  const auto q = q5();
  const auto f = f5();
  CHECK(is_flagged(str("0*0*1", q), f, q));
  CHECK(is_flagged(str("0*0", q), f, q));
  CHECK(is_flagged(str("11101", q), f, q));
  CHECK(is_flagged(str("110*1", q), f, q));
  CHECK_FALSE(is_flagged(str("110*0", q), f, q));
  CHECK_FALSE(is_flagged(str("10300", q), f, q));
  CHECK_FALSE(is_flagged(str("10", q), f, q));
  CHECK_FALSE(is_flagged(AnswerString{}, f, q));
  CHECK_FALSE(is_flagged(str("0*0*1", q), {}, q));
}

TEST_CASE("skip-list validation") {
  const auto q = q5();
  CHECK(validate_skip_list(q, s5()).ok());
  CHECK(validate_skip_list(q, SkipList(5)).ok());

  SUBCASE("component count") { CHECK(has_clause(validate_skip_list(q, SkipList(4)), "(i)")); }
  SUBCASE("last component must be empty") {
    auto s = s5();
    s.add(5, str("0*000", q));
    CHECK(has_clause(validate_skip_list(q, s), "(i)"));
  }
  SUBCASE("wrong length") {
    auto s = s5();
    s.add(2, str("1", q));
    CHECK(has_clause(validate_skip_list(q, s), "(ii)"));
  }
  SUBCASE("non-star after a skipped prefix") {
    auto s = s5();
    s.add(3, str("000", q));
    const auto r = validate_skip_list(q, s);
    CHECK(has_clause(r, "(iii)"));
    CHECK(r.to_string().find("000") != std::string::npos);
  }
  SUBCASE("star without a skipped prefix") {
    auto s = s5();
    s.add(3, str("1*0", q));
    CHECK(has_clause(validate_skip_list(q, s), "(iii)"));
  }
  SUBCASE("star in the first position") {
    SkipList s(5);
    s.add(2, str("*0", q));
    CHECK(has_clause(validate_skip_list(q, s), "(iii)"));
  }
}

TEST_CASE("flag-set compatibility") {
  const auto q = q5();
  const auto s = s5();
  CHECK(validate_flag_compat(q, s, f5()).ok());
  CHECK(validate_flag_compat(q, s, {}).ok());

  SUBCASE("short string") { CHECK(has_clause(validate_flag_compat(q, s, strs({"100*"}, q)), "(i)")); }
  SUBCASE("all stars") { CHECK(has_clause(validate_flag_compat(q, s, strs({"*****"}, q)), "(ii)")); }
  SUBCASE("answer where the question is skipped") {
    CHECK(has_clause(validate_flag_compat(q, s, strs({"01***"}, q)), "(ii)"));
  }
  SUBCASE("every sibling flagged") {
    const Questionnaire small({2, 2});
    CHECK(has_clause(validate_flag_compat(small, SkipList(2), strs({"00", "01"}, small)), "(iii)"));
  }
  SUBCASE("redundant longer flag") {
    const Questionnaire small({2, 2});
    CHECK(has_clause(validate_flag_compat(small, SkipList(2), strs({"0*", "00"}, small)), "(iv)"));
  }
}
