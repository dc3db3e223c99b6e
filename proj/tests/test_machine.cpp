#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aarm/machine.hpp"
#include "aarm/zoo.hpp"

using namespace aarm;

namespace {

Word w(const Aarm& m, const std::string& text) { return m.gamma().parse_word(text); }

}  // namespace

TEST_CASE("validate accepts the example machines") {
  CHECK(validate(zoo::accept_all_machine()).ok());
  CHECK(validate(zoo::zeros_ones_machine()).ok());
}

TEST_CASE("validate flags foreign alphabets and unbounded instructions") {
  Alphabet g({"0", "1"});
  Alphabet other({"x"});
  AutomaticRelation foreign = identity_on(all_words(other));
  Aarm bad1(g, g, {{"I1", foreign}}, {});
  CHECK(!validate(bad1).ok());

  AutomaticRelation unbounded = AutomaticRelation::from_pair_regex(
      g, Regex::parse("(0:0|1:1)* '_:0'*"));
  Aarm bad2(g, g, {{"I1", unbounded}}, {});
  auto rep = validate(bad2);
  CHECK(!rep.ok());
  bool mentioned = false;
  for (const std::string& p : rep.problems)
    if (p.find("boundedness") != std::string::npos) mentioned = true;
  CHECK(mentioned);

  Aarm bad3(g, g, {{"I1", identity_on(all_words(g))}, {"I1", identity_on(word_language(g, {}))}},
            {});
  CHECK(!validate(bad3).ok());
}

TEST_CASE("legal_moves on Example 2") {
  Aarm m = zoo::accept_all_machine();
  auto mv = legal_moves(m, Player::Anke, w(m, "0110"));
  REQUIRE(mv.size() == 1);
  CHECK(mv[0].label == "I1");
  CHECK(mv[0].to == w(m, "0110"));
  CHECK(legal_moves(m, Player::Boris, w(m, "0110")).empty());
}

TEST_CASE("legal_moves on Example 3") {
  Aarm m = zoo::zeros_ones_machine();
  // Marking is a function: a single successor.
  auto mv = legal_moves(m, Player::Anke, w(m, "0011"));
  REQUIRE(mv.size() == 1);
  CHECK(mv[0].label == "I1");
  CHECK(mv[0].to == w(m, "•0 0 •1 1"));

  // Odd unmarked count: Boris must append ■.
  auto mb = legal_moves(m, Player::Boris, w(m, "•0 0 •1"));
  REQUIRE(mb.size() == 1);
  CHECK(mb[0].label == "I3");
  CHECK(mb[0].to == w(m, "•0 0 •1 ■"));

  // Even unmarked count: Boris copies.
  auto mc = legal_moves(m, Player::Boris, w(m, "•0 0 •1 1"));
  REQUIRE(mc.size() == 1);
  CHECK(mc[0].to == w(m, "•0 0 •1 1"));

  // legal_moves agrees with the relations layer, exhaustively to length 4
  // (successor candidates enumerated one symbol longer).
  std::vector<Word> words{{}};
  for (std::size_t begin = 0, len = 1; len <= 5; ++len) {
    std::size_t end = words.size();
    for (std::size_t i = begin; i < end; ++i)
      for (SymbolId s = 0; s < m.gamma().size(); ++s) {
        Word x = words[i];
        x.push_back(s);
        words.push_back(std::move(x));
      }
    begin = end;
  }
  for (const Word& r : words) {
    if (r.size() > 4) continue;
    for (Player p : {Player::Anke, Player::Boris}) {
      auto moves = legal_moves(m, p, r);
      std::size_t expected = 0;
      for (const Instruction& ins : m.instructions(p))
        for (const Word& y : words)
          if (y.size() <= r.size() + 1 && related(ins.relation, r, y)) ++expected;
      // successors are complete up to the bound, and all moves are related
      for (const Move& mv2 : moves) {
        const Instruction* ins = m.find(p, mv2.label);
        REQUIRE(ins != nullptr);
        CHECK(related(ins->relation, r, mv2.to));
      }
      CHECK(moves.size() == expected);
    }
  }
}

TEST_CASE("check_history validates the five conditions") {
  Aarm m2 = zoo::accept_all_machine();
  History h{{"I1", w(m2, "01"), w(m2, "01")}};
  auto c = check_history(m2, w(m2, "01"), h);
  CHECK(c.ok);
  CHECK(c.complete);  // B empty: Boris stuck after term 1

  History bad{{"I1", w(m2, "10"), w(m2, "10")}};
  auto cb = check_history(m2, w(m2, "01"), bad);
  CHECK(!cb.ok);
  CHECK(cb.index == 1);

  // Example 3: mark, Boris copies, mark.
  Aarm m3 = zoo::zeros_ones_machine();
  History h3{{"I1", w(m3, "0011"), w(m3, "•0 0 •1 1")},
             {"I3", w(m3, "•0 0 •1 1"), w(m3, "•0 0 •1 1")},
             {"I1", w(m3, "•0 0 •1 1"), w(m3, "•0 •0 •1 •1")}};
  auto c3 = check_history(m3, w(m3, "0011"), h3);
  CHECK(c3.ok);
  CHECK(!c3.complete);  // Boris can still copy

  History wrongOrder{{"I3", w(m3, "0011"), w(m3, "0011")}};
  CHECK(!check_history(m3, w(m3, "0011"), wrongOrder).ok);

  History notRelated{{"I1", w(m3, "0011"), w(m3, "0011")}};
  auto cn = check_history(m3, w(m3, "0011"), notRelated);
  CHECK(!cn.ok);
  CHECK(cn.index == 1);

  History chainBreak{{"I1", w(m3, "0011"), w(m3, "•0 0 •1 1")},
                     {"I3", w(m3, "0011"), w(m3, "0011")}};
  auto cc = check_history(m3, w(m3, "0011"), chainBreak);
  CHECK(!cc.ok);
  CHECK(cc.index == 2);
}

TEST_CASE("padded_inputs") {
  Aarm base = zoo::accept_all_machine();
  Alphabet gamma({"0", "1", "@"});
  // rebuild accept-all over {0,1,@}
  Alphabet sigma({"0", "1"});
  AutomaticRelation id = identity_on(Regex::parse("(0|1)*").compile(gamma));
  Aarm over(gamma, sigma, {{"I1", id}}, {});

  Paarm p0{over, "@", {0}};
  Automaton a0 = padded_inputs(p0, gamma.parse_word("01"));
  CHECK(accepts(a0, gamma.parse_word("01")));
  CHECK(accepts(a0, gamma.parse_word("01@")));
  CHECK(!accepts(a0, gamma.parse_word("0@1")));

  Paarm p1{over, "@", {0, 1}};  // p(n) = n
  Automaton a1 = padded_inputs(p1, gamma.parse_word("01"));
  CHECK(!accepts(a1, gamma.parse_word("01@")));
  CHECK(accepts(a1, gamma.parse_word("01@@")));
  CHECK(accepts(a1, gamma.parse_word("01@@@@@")));

  Paarm p2{over, "@", {1, 0, 1}};  // p(n) = n² + 1
  Automaton a2 = padded_inputs(p2, gamma.parse_word("1"));
  CHECK(!accepts(a2, gamma.parse_word("1@")));
  CHECK(accepts(a2, gamma.parse_word("1@@")));
  for (std::uint64_t k = 0; k <= poly_eval({1, 0, 1}, 1) + 3; ++k) {
    Word word = gamma.parse_word("1");
    for (std::uint64_t i = 0; i < k; ++i) word.push_back(gamma.index_of("@"));
    CHECK(accepts(a2, word) == (k >= 2));
  }

  CHECK_THROWS(padded_inputs(p1, gamma.parse_word("0@")));
}
