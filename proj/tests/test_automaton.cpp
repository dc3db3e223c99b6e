#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "aarm/automaton.hpp"

using namespace aarm;

namespace {

Alphabet binary() { return Alphabet({"0", "1"}); }

// Independent membership oracle: plain recursive NFA walk.
bool oracle_accepts(const Automaton& a, const Word& w, std::uint32_t q, std::size_t i) {
  if (i == w.size()) return a.is_accepting(q);
  for (const Transition& t : a.from(q, w[i]))
    if (oracle_accepts(a, w, t.to, i + 1)) return true;
  return false;
}
bool oracle_accepts(const Automaton& a, const Word& w) {
  return oracle_accepts(a, w, a.start(), 0);
}

std::vector<Word> all_words(std::size_t nsym, std::size_t max_len) {
  std::vector<Word> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (SymbolId s = 0; s < nsym; ++s) {
        Word w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

Automaton random_nfa(std::mt19937& rng, const Alphabet& alpha, std::uint32_t max_states) {
  std::uniform_int_distribution<std::uint32_t> nd(1, max_states);
  std::uint32_t n = nd(rng);
  Automaton::Builder b(alpha, n, 0);
  std::uniform_int_distribution<std::uint32_t> sd(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 3);
  for (std::uint32_t q = 0; q < n; ++q) {
    b.set_accepting(q, coin(rng) == 0);
    for (SymbolId s = 0; s < alpha.size(); ++s) {
      int edges = coin(rng) - 1;  // -1..2 outgoing edges per symbol
      for (int e = 0; e < edges; ++e) b.add_transition(q, s, sd(rng));
    }
  }
  return std::move(b).build();
}

// 2-state NFA for "binary words ending in 1".
Automaton ends_in_one() {
  Automaton::Builder b(binary(), 2, 0);
  b.add_transition(0, 0, 0);
  b.add_transition(0, 1, 0);
  b.add_transition(0, 1, 1);
  b.set_accepting(1);
  return std::move(b).build();
}

Automaton zeros_then_ones() {  // 0*1*
  Automaton::Builder b(binary(), 2, 0);
  b.add_transition(0, 0, 0);
  b.add_transition(0, 1, 1);
  b.add_transition(1, 1, 1);
  b.set_accepting(0);
  b.set_accepting(1);
  return std::move(b).build();
}

Automaton zeros_only() {  // 0*
  Automaton::Builder b(binary(), 1, 0);
  b.add_transition(0, 0, 0);
  b.set_accepting(0);
  return std::move(b).build();
}

}  // namespace

TEST_CASE("determinize: deterministic input stays language-equal") {
  Automaton d = determinize(zeros_then_ones());
  CHECK(d.deterministic());
  for (const Word& w : all_words(2, 8)) CHECK(accepts(d, w) == oracle_accepts(zeros_then_ones(), w));
}

TEST_CASE("determinize: ends-in-1 NFA agrees on all words up to 8") {
  Automaton nfa = ends_in_one();
  Automaton dfa = determinize(nfa);
  CHECK(dfa.deterministic());
  for (const Word& w : all_words(2, 8)) {
    bool expect = !w.empty() && w.back() == 1;
    CHECK(oracle_accepts(nfa, w) == expect);
    CHECK(accepts(dfa, w) == expect);
  }
}

TEST_CASE("determinize: unreachable states do not affect the language") {
  Automaton::Builder b(binary(), 3, 0);
  b.add_transition(0, 0, 0);
  b.add_transition(2, 1, 0);  // unreachable
  b.set_accepting(0);
  b.set_accepting(2);
  Automaton a = std::move(b).build();
  Automaton t = trim(determinize(a));
  for (const Word& w : all_words(2, 8)) {
    bool expect = std::all_of(w.begin(), w.end(), [](SymbolId s) { return s == 0; });
    CHECK(accepts(t, w) == expect);
  }
}

TEST_CASE("minimize: idempotent and canonical") {
  Automaton m1 = minimize(determinize(zeros_then_ones()));
  CHECK(minimize(m1) == m1);

  // Two different DFAs for (01)*.
  Automaton::Builder b1(binary(), 3, 0);
  // states: 0 = expect 0 (accepting), 1 = expect 1, 2 = dead
  b1.set_accepting(0);
  b1.add_transition(0, 0, 1);
  b1.add_transition(0, 1, 2);
  b1.add_transition(1, 1, 0);
  b1.add_transition(1, 0, 2);
  b1.add_transition(2, 0, 2);
  b1.add_transition(2, 1, 2);
  Automaton d1 = std::move(b1).build();

  Automaton::Builder b2(binary(), 5, 4);  // same language, shuffled + redundant dead states
  b2.set_accepting(4);
  b2.add_transition(4, 0, 1);
  b2.add_transition(4, 1, 0);
  b2.add_transition(1, 1, 4);
  b2.add_transition(1, 0, 3);
  b2.add_transition(0, 0, 3);
  b2.add_transition(0, 1, 0);
  b2.add_transition(3, 0, 0);  // dead: states 0 and 3 never accept
  b2.add_transition(3, 1, 3);
  b2.add_transition(2, 0, 2);
  b2.add_transition(2, 1, 2);
  Automaton d2 = std::move(b2).build();

  CHECK(d1.deterministic());
  CHECK(d2.deterministic());
  Automaton c1 = minimize(d1), c2 = minimize(d2);
  CHECK(c1 == c2);
  for (const Word& w : all_words(2, 8)) CHECK(accepts(c1, w) == oracle_accepts(d1, w));
}

TEST_CASE("minimize: sigma-star with redundant states collapses to one state") {
  Automaton::Builder b(binary(), 4, 0);
  for (std::uint32_t q = 0; q < 4; ++q) {
    b.set_accepting(q);
    b.add_transition(q, 0, (q + 1) % 4);
    b.add_transition(q, 1, (q + 2) % 4);
  }
  Automaton m = minimize(std::move(b).build());
  CHECK(m.num_states() == 1);
  CHECK(m.is_accepting(0));
}

TEST_CASE("minimize rejects nondeterministic input") {
  CHECK_THROWS(minimize(ends_in_one()));
}

TEST_CASE("boolean: identities and exhaustive cross-checks") {
  Automaton L = zeros_then_ones();
  Automaton empty = empty_language(binary());
  CHECK(equal_language(boolean(BoolOp::Union, L, empty), L));

  Automaton cc = complement(complement(L));
  for (const Word& w : all_words(2, 8)) CHECK(accepts(cc, w) == oracle_accepts(L, w));

  Automaton inter = boolean(BoolOp::Intersection, zeros_then_ones(), zeros_only());
  CHECK(equal_language(inter, zeros_only()));
  for (const Word& w : all_words(2, 8)) {
    bool expect = std::all_of(w.begin(), w.end(), [](SymbolId s) { return s == 0; });
    CHECK(accepts(inter, w) == expect);
  }
}

TEST_CASE("emptiness and witnesses") {
  CHECK(is_empty(empty_language(binary())));
  CHECK(!shortest_witness(empty_language(binary())));
  CHECK(shortest_witness(zeros_then_ones()) == Word{});
  Word w = binary().parse_word("0011");
  CHECK(shortest_witness(word_language(binary(), w)) == w);
}

TEST_CASE("is_subset with counterexample") {
  CHECK(is_subset(zeros_then_ones(), zeros_then_ones()).holds);
  CHECK(is_subset(zeros_only(), zeros_then_ones()).holds);
  SubsetResult r = is_subset(zeros_then_ones(), zeros_only());
  CHECK(!r.holds);
  REQUIRE(r.counterexample.has_value());
  CHECK(*r.counterexample == binary().parse_word("1"));
}

TEST_CASE("enumerate in length-lex order") {
  CHECK(enumerate_words(empty_language(binary()), 5).empty());
  auto ws = enumerate_words(aarm::all_words(binary()), 1);
  REQUIRE(ws.size() == 3);
  CHECK(ws[0] == Word{});
  CHECK(ws[1] == binary().parse_word("0"));
  CHECK(ws[2] == binary().parse_word("1"));

  auto zo = enumerate_words(zeros_then_ones(), 2);
  std::vector<Word> expect = {{}, {0}, {1}, {0, 0}, {0, 1}, {1, 1}};
  CHECK(zo == expect);
}

TEST_CASE("property: determinization, De Morgan, canonical equality, enumeration") {
  std::mt19937 rng(20240811);
  Alphabet alpha({"0", "1", "2"});
  auto words = all_words(3, 8);
  for (int round = 0; round < 60; ++round) {
    Automaton a = random_nfa(rng, alpha, 6);
    Automaton b = random_nfa(rng, alpha, 6);
    Automaton da = determinize(a);
    for (const Word& w : words)
      if (oracle_accepts(a, w) != accepts(da, w)) {
        CHECK(false);
        break;
      }
    // De Morgan: ¬(a ∪ b) ≡ ¬a ∩ ¬b (canonical forms equal).
    Automaton lhs = complement(boolean(BoolOp::Union, a, b));
    Automaton rhs = boolean(BoolOp::Intersection, complement(a), complement(b));
    CHECK(canonical(lhs) == canonical(rhs));
    // Subset in both directions iff canonical equality.
    bool sub = is_subset(a, b).holds && is_subset(b, a).holds;
    CHECK(sub == (canonical(a) == canonical(b)));
    // Enumeration equals the exhaustive filter.
    auto got = enumerate_words(a, 4);
    std::vector<Word> expect;
    for (const Word& w : words)
      if (w.size() <= 4 && oracle_accepts(a, w)) expect.push_back(w);
    CHECK(got == expect);
  }
}

TEST_CASE("agree_up_to matches exhaustive membership comparison") {
  std::mt19937 rng(7);
  Alphabet alpha({"0", "1"});
  auto words = all_words(2, 6);
  for (int round = 0; round < 40; ++round) {
    Automaton a = random_nfa(rng, alpha, 5);
    Automaton b = random_nfa(rng, alpha, 5);
    bool brute = true;
    for (const Word& w : words)
      if (w.size() <= 6 && oracle_accepts(a, w) != oracle_accepts(b, w)) {
        brute = false;
        break;
      }
    CHECK(agree_up_to(a, b, 6) == brute);
  }
}
