#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "aarm/solver.hpp"
#include "aarm/zoo.hpp"

using namespace aarm;

namespace {

Word w(const Aarm& m, const std::string& text) { return m.gamma().parse_word(text); }

std::vector<Word> words_up_to(const Alphabet& a, std::size_t max_len) {
  std::vector<Word> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (SymbolId s = 0; s < a.size(); ++s) {
        Word x = out[i];
        x.push_back(s);
        out.push_back(std::move(x));
      }
    begin = end;
  }
  return out;
}

}  // namespace

TEST_CASE("Example 2: Anke wins every word in one turn") {
  Aarm m = zoo::accept_all_machine();
  GameOutcome o = solve_explicit(m, w(m, "0110"), 8);
  CHECK(o.verdict == Verdict::AnkeWins);
  CHECK(o.turns == 1);
  CHECK(!o.empty_history);
  REQUIRE(o.principal_variation.size() == 1);
  CHECK(check_history(m, w(m, "0110"), o.principal_variation).ok);
}

TEST_CASE("Example 3: selected verdicts") {
  Aarm m = zoo::zeros_ones_machine();

  GameOutcome bad = solve_explicit(m, w(m, "10"), 16);
  CHECK(bad.verdict == Verdict::BorisWins);
  CHECK(bad.turns == 0);
  CHECK(bad.empty_history);

  GameOutcome odd = solve_explicit(m, w(m, "001"), 16);
  CHECK(odd.verdict == Verdict::BorisWins);
  CHECK(odd.turns % 2 == 0);
  CHECK(odd.turns > 0);

  GameOutcome eps = solve_explicit(m, {}, 16);
  CHECK(eps.verdict == Verdict::AnkeWins);

  GameOutcome good = solve_explicit(m, w(m, "0011"), 16);
  CHECK(good.verdict == Verdict::AnkeWins);
  CHECK(good.turns == 5);
  CHECK(check_history(m, w(m, "0011"), good.principal_variation).ok);
  CHECK(check_history(m, w(m, "0011"), good.principal_variation).complete);
  CHECK(good.principal_variation.size() == 5);
}

TEST_CASE("solve_explicit rejects unbounded instructions and zero depth") {
  Aarm m = zoo::accept_all_machine();
  CHECK_THROWS(solve_explicit(m, {}, 0));
  Alphabet g({"0", "1"});
  AutomaticRelation unbounded =
      AutomaticRelation::from_pair_regex(g, Regex::parse("(0:0|1:1)* '_:0'*"));
  Aarm bad(g, g, {{"I1", unbounded}}, {});
  CHECK_THROWS(solve_explicit(bad, {}, 4));
}

TEST_CASE("winsets on Example 2: Boris is always stuck") {
  Aarm m = zoo::accept_all_machine();
  WinSets ws = winsets_symbolic(m, 3);
  Automaton all = canonical(all_words(m.gamma()));
  CHECK(ws.anke_wins_boris_moves[0] == all);          // WB[0] = Γ*
  CHECK(ws.anke_wins_anke_moves[1] == all);           // WA[1] = Γ*
  CHECK(is_empty(ws.anke_wins_anke_moves[0]));        // WA[0] = ∅
  CHECK(is_empty(ws.boris_wins_boris_moves[0]));      // Anke can always move
}

TEST_CASE("winsets agree with the explicit solver on Examples 2 and 3") {
  for (Aarm m : {zoo::accept_all_machine(), zoo::zeros_ones_machine()}) {
    const std::uint32_t K = 5;
    WinSets ws = winsets_symbolic(m, K);
    auto sigmaWords = words_up_to(m.sigma(), 6);
    for (const Word& x : sigmaWords) {
      Word gx;  // over Γ
      for (SymbolId s : x) gx.push_back(m.gamma().index_of(m.sigma().token(s)));
      GameOutcome o = solve_explicit(m, gx, K);
      for (std::uint32_t k = 0; k <= K; ++k) {
        bool inWA = accepts(ws.anke_wins_anke_moves[k], gx);
        bool inBA = accepts(ws.boris_wins_anke_moves[k], gx);
        CHECK(inWA == (o.verdict == Verdict::AnkeWins && o.turns <= k));
        CHECK(inBA == (o.verdict == Verdict::BorisWins && o.turns <= k));
      }
    }
    // Monotonicity.
    for (std::uint32_t k = 0; k < K; ++k) {
      CHECK(is_subset(ws.anke_wins_anke_moves[k], ws.anke_wins_anke_moves[k + 1]).holds);
      CHECK(is_subset(ws.anke_wins_boris_moves[k], ws.anke_wins_boris_moves[k + 1]).holds);
      CHECK(is_subset(ws.boris_wins_anke_moves[k], ws.boris_wins_anke_moves[k + 1]).holds);
      CHECK(is_subset(ws.boris_wins_boris_moves[k], ws.boris_wins_boris_moves[k + 1]).holds);
    }
  }
}

TEST_CASE("state bound report holds on the example machines") {
  for (Aarm m : {zoo::accept_all_machine(), zoo::zeros_ones_machine()}) {
    WinSets ws = winsets_symbolic(m, 4);
    StateBoundReport rep = state_bound_report(ws);
    CHECK(rep.ok());
    REQUIRE(rep.rows.size() == 5);
    CHECK(rep.rows[0].k == 0);
  }
}

TEST_CASE("tower and log_star") {
  CHECK(tower(0, 7).value.to_string() == "1");
  CHECK(tower(3, 1).value.to_string() == "16");
  CHECK(tower(4, 1).value.to_string() == "65536");
  CHECK(tower(1, 6).value.to_string() == "64");
  TowerValue big = tower(5, 1);  // 2^65536
  CHECK(big.exact);
  CHECK(big.value.bit_count() == 65537);
  CHECK(!tower(6, 1).exact);
  CHECK(tower_at_least(6, 1, UINT64_MAX));
  CHECK(tower_at_least(3, 1, 16));
  CHECK(!tower_at_least(3, 1, 17));

  CHECK(log_star(1) == 0);
  CHECK(log_star(2) == 1);
  CHECK(log_star(4) == 2);
  CHECK(log_star(16) == 3);
  CHECK(log_star(64) == 4);
  CHECK(log_star(256) == 4);
  CHECK(log_star(65536) == 4);
}

TEST_CASE("play_match runs strategies and rejects illegal moves") {
  Aarm m2 = zoo::accept_all_machine();
  Strategy trivial = [&](const History&, const Word& r) -> std::optional<Move> {
    return Move{"I1", r};
  };
  MatchResult r = play_match(m2, w(m2, "01"), trivial, trivial, 10);
  CHECK(r.verdict == Verdict::AnkeWins);
  CHECK(r.turns == 1);
  CHECK(check_history(m2, w(m2, "01"), r.history).ok);

  Aarm m3 = zoo::zeros_ones_machine();
  Strategy follow = [&](const History&, const Word& reg) -> std::optional<Move> {
    auto mv = legal_moves(m3, Player::Anke, reg);
    if (mv.empty()) return std::nullopt;
    // Prefer the accepting move when available (I2 before I1 at the end).
    for (const Move& cand : mv)
      if (cand.label == "I2") return cand;
    return mv.front();
  };
  Strategy borisRef = [&](const History&, const Word& reg) -> std::optional<Move> {
    auto mv = legal_moves(m3, Player::Boris, reg);
    if (mv.empty()) return std::nullopt;
    return mv.front();
  };
  MatchResult r3 = play_match(m3, w(m3, "0011"), follow, borisRef, 20);
  CHECK(r3.verdict == Verdict::AnkeWins);
  CHECK(r3.turns == 5);  // mark, copy, mark, copy, append ★
  CHECK(check_history(m3, w(m3, "0011"), r3.history).ok);

  Strategy cheat = [&](const History&, const Word& reg) -> std::optional<Move> {
    Word wrong = reg;
    wrong.push_back(m3.gamma().index_of("★"));  // not a legal I1/I2 move from 0011
    return Move{"I1", wrong};
  };
  MatchResult rc = play_match(m3, w(m3, "0011"), cheat, borisRef, 20);
  CHECK(rc.verdict == Verdict::BorisWins);
  CHECK(rc.illegal_move);
}

TEST_CASE("paarm wrappers accept like the base machines") {
  Paarm p2 = zoo::padded_wrapper(zoo::accept_all_machine(), {0, 1});
  const Aarm& base = p2.base;
  PaarmOutcome o = paarm_accepts(p2, base.gamma().parse_word("01"), 6);
  CHECK(o.verdict == PaarmVerdict::Accept);

  Paarm p3 = zoo::padded_wrapper(zoo::zeros_ones_machine(), {0, 1});
  CHECK(paarm_accepts(p3, p3.base.gamma().parse_word("01"), 8).verdict ==
        PaarmVerdict::Accept);
  CHECK(paarm_accepts(p3, p3.base.gamma().parse_word("10"), 8).verdict ==
        PaarmVerdict::Reject);

  PaarmOutcome split = paarm_accepts(zoo::padding_parity_machine(),
                                     Alphabet({"0", "1", "@", "★"}).parse_word("01"), 6);
  CHECK(split.verdict == PaarmVerdict::Undetermined);
  CHECK(split.note.find("invalid pair") != std::string::npos);
}
