#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aarm/regex.hpp"

using namespace aarm;

namespace {

Alphabet binary() { return Alphabet({"0", "1"}); }

std::vector<Word> all_words(const Alphabet& a, std::size_t max_len) {
  std::vector<Word> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (SymbolId s = 0; s < a.size(); ++s) {
        Word w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

Automaton zeros_then_ones_dfa() {
  Automaton::Builder b(binary(), 2, 0);
  b.add_transition(0, 0, 0);
  b.add_transition(0, 1, 1);
  b.add_transition(1, 1, 1);
  b.set_accepting(0);
  b.set_accepting(1);
  return std::move(b).build();
}

}  // namespace

TEST_CASE("empty set compiles to the empty language") {
  CHECK(is_empty(Regex::empty_set().compile(binary())));
  CHECK(is_empty(Regex::parse("@empty").compile(binary())));
}

TEST_CASE("0*1* agrees with the hand-built DFA on all words up to 8") {
  Automaton a = Regex::parse("0* 1*").compile(binary());
  Automaton d = zeros_then_ones_dfa();
  for (const Word& w : all_words(binary(), 8)) CHECK(accepts(a, w) == accepts(d, w));
}

TEST_CASE("(0|1)* accepts every binary word up to 8") {
  Automaton a = Regex::parse("(0|1)*").compile(binary());
  for (const Word& w : all_words(binary(), 8)) CHECK(accepts(a, w));
}

TEST_CASE("unknown leaf symbol is rejected") {
  CHECK_THROWS(Regex::parse("2").compile(binary()));
}

TEST_CASE("plus, opt, eps, quoting and multi-byte tokens") {
  Alphabet marks({"•0", "•1", "0"});
  Automaton a = Regex::parse("'•0'+ 0?").compile(marks);
  CHECK(accepts(a, marks.word({"•0"})));
  CHECK(accepts(a, marks.word({"•0", "•0", "0"})));
  CHECK(!accepts(a, marks.word({"0"})));
  CHECK(accepts(Regex::parse("@eps").compile(marks), {}));
  Regex round = Regex::parse(Regex::parse("('•0'|'•1')* 0").to_string());
  CHECK(equal_language(round.compile(marks), Regex::parse("('•0'|'•1')* 0").compile(marks)));
}

TEST_CASE("programmatic builders match parsed forms") {
  Regex built = Regex::cat(Regex::star(Regex::symbol("0")),
                           Regex::plus(Regex::symbol("1")));
  CHECK(equal_language(built.compile(binary()), Regex::parse("0* 1 1*").compile(binary())));
}
