#include <algorithm>
#include <stdexcept>

#include "aarm/zoo.hpp"

namespace aarm::zoo {

namespace {

AutomaticRelation rebase(const AutomaticRelation& r, const Alphabet& gamma) {
  if (r.base() == gamma) return r;
  PairAlphabet pa(gamma);
  return AutomaticRelation::from_automaton(gamma, with_alphabet(r.automaton(), pa.pairs()));
}

std::vector<Instruction> rebase_all(const std::vector<Instruction>& list, const Alphabet& gamma) {
  std::vector<Instruction> out;
  for (const Instruction& i : list) out.push_back({i.label, rebase(i.relation, gamma)});
  return out;
}

}  // namespace

Aarm accept_all_machine() {
  Alphabet gamma({"0", "1"});
  AutomaticRelation id = identity_on(all_words(gamma));
  return Aarm(gamma, gamma, {{"I1", id}}, {});
}

Aarm zeros_ones_machine() {
  Alphabet gamma({"0", "1", "•0", "•1", "■", "★"});
  PairAlphabet pa(gamma);
  auto P = [&](const char* y, const char* x) { return pa.pair(gamma.index_of(y), gamma.index_of(x)); };

  // I1: y ∈ {0,•0}*{1,•1}*; x marks every alternate unmarked 0 starting with
  // the first unmarked 0, likewise for 1, other symbols unchanged.
  // States: (phase zeros/ones) × (mark next unmarked symbol?).
  Automaton i1;
  {
    Automaton::Builder b(pa.pairs(), 4, 0);  // 0=Zm 1=Zk 2=Om 3=Ok
    for (std::uint32_t q = 0; q < 4; ++q) b.set_accepting(q);
    b.add_transition(0, P("0", "•0"), 1);
    b.add_transition(0, P("•0", "•0"), 0);
    b.add_transition(1, P("0", "0"), 0);
    b.add_transition(1, P("•0", "•0"), 1);
    for (std::uint32_t z : {0u, 1u}) {
      b.add_transition(z, P("1", "•1"), 3);
      b.add_transition(z, P("•1", "•1"), 2);
    }
    b.add_transition(2, P("1", "•1"), 3);
    b.add_transition(2, P("•1", "•1"), 2);
    b.add_transition(3, P("1", "1"), 2);
    b.add_transition(3, P("•1", "•1"), 3);
    i1 = std::move(b).build();
  }

  // I2: y over {•0,•1,★} (no unmarked digits), x = y·★.
  Automaton i2 = Regex::parse("('•0:•0'|'•1:•1'|'★:★')* '_:★'").compile(pa.pairs());

  // I3 (Boris): x = y·■ when the number of unmarked digits in y is odd,
  // x = y otherwise; y over {0,1,•0,•1}.
  Automaton i3;
  {
    Automaton::Builder b(pa.pairs(), 3, 0);  // 0=even 1=odd 2=done(■ appended)
    b.set_accepting(0);
    b.set_accepting(2);
    for (std::uint32_t q : {0u, 1u}) {
      std::uint32_t other = 1u - q;
      b.add_transition(q, P("0", "0"), other);
      b.add_transition(q, P("1", "1"), other);
      b.add_transition(q, P("•0", "•0"), q);
      b.add_transition(q, P("•1", "•1"), q);
    }
    b.add_transition(1, pa.pair(pa.pad(), gamma.index_of("■")), 2);
    i3 = std::move(b).build();
  }

  Alphabet sigma({"0", "1"});
  return Aarm(gamma, sigma,
              {{"I1", AutomaticRelation::from_automaton(gamma, i1)},
               {"I2", AutomaticRelation::from_automaton(gamma, i2)}},
              {{"I3", AutomaticRelation::from_automaton(gamma, i3)}});
}

namespace {

constexpr const char* kTagLeft = "⊞";
constexpr const char* kTagRight = "◊";

Alphabet combined_alphabet(const Aarm& m1, const Aarm* m2, bool with_split_marks) {
  std::vector<std::string> toks = m1.gamma().tokens();
  auto add = [&](const std::string& t) {
    if (std::find(toks.begin(), toks.end(), t) == toks.end()) toks.push_back(t);
  };
  if (m2)
    for (const std::string& t : m2->gamma().tokens()) add(t);
  for (const char* t : {kTagLeft, kTagRight}) {
    if (std::find(toks.begin(), toks.end(), t) != toks.end())
      throw std::invalid_argument(std::string("combine: register alphabet clashes with "
                                              "reserved symbol ") + t);
    toks.push_back(t);
  }
  if (with_split_marks)
    for (const std::string& s : m1.sigma().tokens()) {
      std::string marked = "^" + s;
      if (std::find(toks.begin(), toks.end(), marked) != toks.end())
        throw std::invalid_argument("combine: register alphabet clashes with split mark " +
                                    marked);
      toks.push_back(marked);
    }
  return Alphabet(toks);
}

Regex id_any(const Alphabet& sigma) {
  std::vector<Regex> parts;
  for (const std::string& t : sigma.tokens())
    parts.push_back(Regex::symbol(t + ":" + t));
  return Regex::alt(std::move(parts));
}

Regex any_sym(const Alphabet& sigma) {
  std::vector<Regex> parts;
  for (const std::string& t : sigma.tokens()) parts.push_back(Regex::symbol(t));
  return Regex::alt(std::move(parts));
}

Automaton sigma_star(const Alphabet& sigma, const Alphabet& gamma) {
  return Regex::star(any_sym(sigma)).compile(gamma);
}

std::vector<Instruction> lift_all(const std::vector<Instruction>& list, const Alphabet& gamma,
                                  const Automaton& prefix, bool absorb_tail,
                                  const std::string& label_prefix) {
  std::vector<Instruction> out;
  for (const Instruction& i : list) {
    AutomaticRelation r = rebase(i.relation, gamma);
    if (absorb_tail) r = pad_tail(r, kTagRight);
    out.push_back({label_prefix + i.label, lift_prefix(prefix, r)});
  }
  return out;
}

}  // namespace

Aarm combine(CombineOp op, const Aarm& m1, const Aarm& m2) {
  if (op == CombineOp::Star) return combine_star(m1);
  if (m1.sigma() != m2.sigma())
    throw std::invalid_argument("combine: machines must share the input alphabet");
  const Alphabet sigma = m1.sigma();
  Alphabet gamma = combined_alphabet(m1, &m2, op == CombineOp::Concat);
  Automaton sigmaStar = sigma_star(sigma, gamma);
  Automaton tagL = word_language(gamma, gamma.word({kTagLeft}));
  Automaton tagR = word_language(gamma, gamma.word({kTagRight}));

  std::vector<Instruction> anke, boris;
  switch (op) {
    case CombineOp::Union: {
      // Anke tags her branch; Boris can only confirm it; the doubly tagged
      // register then runs the chosen machine.
      anke.push_back({"pick-left", prepend_symbol(gamma, kTagLeft, sigmaStar)});
      anke.push_back({"pick-right", prepend_symbol(gamma, kTagRight, sigmaStar)});
      Automaton domTagL =
          Regex::cat(Regex::symbol(kTagLeft), Regex::star(any_sym(sigma))).compile(gamma);
      Automaton domTagR =
          Regex::cat(Regex::symbol(kTagRight), Regex::star(any_sym(sigma))).compile(gamma);
      boris.push_back({"confirm-left", prepend_symbol(gamma, kTagLeft, domTagL)});
      boris.push_back({"confirm-right", prepend_symbol(gamma, kTagRight, domTagR)});
      Automaton prefL = word_language(gamma, {gamma.index_of(kTagLeft), gamma.index_of(kTagLeft)});
      Automaton prefR =
          word_language(gamma, {gamma.index_of(kTagRight), gamma.index_of(kTagRight)});
      for (auto& i : lift_all(m1.anke(), gamma, prefL, false, "L.")) anke.push_back(i);
      for (auto& i : lift_all(m2.anke(), gamma, prefR, false, "R.")) anke.push_back(i);
      for (auto& i : lift_all(m1.boris(), gamma, prefL, false, "L.")) boris.push_back(i);
      for (auto& i : lift_all(m2.boris(), gamma, prefR, false, "R.")) boris.push_back(i);
      break;
    }
    case CombineOp::Intersection: {
      // Anke skips, Boris picks the branch with a single tag.
      anke.push_back({"skip", identity_on(sigmaStar)});
      boris.push_back({"pick-left", prepend_symbol(gamma, kTagLeft, sigmaStar)});
      boris.push_back({"pick-right", prepend_symbol(gamma, kTagRight, sigmaStar)});
      for (auto& i : lift_all(m1.anke(), gamma, tagL, false, "L.")) anke.push_back(i);
      for (auto& i : lift_all(m2.anke(), gamma, tagR, false, "R.")) anke.push_back(i);
      for (auto& i : lift_all(m1.boris(), gamma, tagL, false, "L.")) boris.push_back(i);
      for (auto& i : lift_all(m2.boris(), gamma, tagR, false, "R.")) boris.push_back(i);
      break;
    }
    case CombineOp::Concat: {
      // Anke marks the split: either the first symbol of the second factor
      // (^s) or a trailing ⊞ when the second factor is empty.
      std::vector<Regex> markAlts, unmarkL, unmarkR;
      for (const std::string& s : sigma.tokens()) {
        markAlts.push_back(Regex::symbol(s + ":^" + s));
        unmarkL.push_back(Regex::symbol("^" + s + ":" + std::string(kTagRight)));
        unmarkR.push_back(Regex::symbol("^" + s + ":" + s));
      }
      Regex ID = id_any(sigma);
      std::vector<Regex> blankParts;
      for (const std::string& s : sigma.tokens())
        blankParts.push_back(Regex::symbol(s + ":" + std::string(kTagRight)));
      Regex blankAny = Regex::alt(std::move(blankParts));
      anke.push_back({"split",
                      AutomaticRelation::from_pair_regex(
                          gamma, Regex::cat({Regex::star(ID), Regex::alt(markAlts),
                                             Regex::star(ID)}))});
      anke.push_back({"split-end",
                      AutomaticRelation::from_pair_regex(
                          gamma, Regex::cat(Regex::star(ID),
                                            Regex::symbol(std::string("_:") + kTagLeft)))});
      // Boris picks a side: blank the other side, tag the front.
      Regex tagToBlank = Regex::symbol(std::string(kTagLeft) + ":" + kTagRight);
      AutomaticRelation rewriteL = AutomaticRelation::from_pair_regex(
          gamma, Regex::alt(Regex::cat({Regex::star(ID), Regex::alt(unmarkL),
                                        Regex::star(blankAny)}),
                            Regex::cat(Regex::star(ID), tagToBlank)));
      AutomaticRelation rewriteR = AutomaticRelation::from_pair_regex(
          gamma, Regex::alt(Regex::cat({Regex::star(blankAny), Regex::alt(unmarkR),
                                        Regex::star(ID)}),
                            Regex::cat(Regex::star(blankAny), tagToBlank)));
      Automaton anything = all_words(gamma);
      boris.push_back({"pick-left",
                       compose(rewriteL, prepend_symbol(gamma, kTagLeft, anything))});
      boris.push_back({"pick-right",
                       compose(rewriteR, prepend_symbol(gamma, kTagRight, anything))});
      // Left machine runs under ⊞ with a ◊ junk tail; right machine runs
      // after a ◊+ junk prefix.
      Automaton junkPlus = Regex::plus(Regex::symbol(kTagRight)).compile(gamma);
      for (auto& i : lift_all(m1.anke(), gamma, tagL, true, "L.")) anke.push_back(i);
      for (auto& i : lift_all(m2.anke(), gamma, junkPlus, false, "R.")) anke.push_back(i);
      for (auto& i : lift_all(m1.boris(), gamma, tagL, true, "L.")) boris.push_back(i);
      for (auto& i : lift_all(m2.boris(), gamma, junkPlus, false, "R.")) boris.push_back(i);
      break;
    }
    case CombineOp::Star:
      break;  // handled above
  }
  return Aarm(gamma, sigma, std::move(anke), std::move(boris));
}

Paarm padded_wrapper(const Aarm& m, std::vector<std::uint64_t> poly) {
  std::vector<std::string> toks = m.gamma().tokens();
  if (std::find(toks.begin(), toks.end(), "@") != toks.end())
    throw std::invalid_argument("padded_wrapper: register alphabet already contains @");
  toks.push_back("@");
  Alphabet gamma(toks);
  std::vector<Instruction> anke, boris;
  for (const Instruction& i : m.anke())
    anke.push_back({i.label, pad_tail(rebase(i.relation, gamma), "@")});
  for (const Instruction& i : m.boris())
    boris.push_back({i.label, pad_tail(rebase(i.relation, gamma), "@")});
  return Paarm{Aarm(gamma, m.sigma(), std::move(anke), std::move(boris)), "@",
               std::move(poly)};
}

Paarm padding_parity_machine() {
  Alphabet gamma({"0", "1", "@", "★"});
  Alphabet sigma({"0", "1"});
  // Anke appends ★ only when the @-tail has even length; Boris has nothing.
  Regex ID = Regex::parse("(0:0|1:1)");
  Regex evenPad = Regex::star(Regex::parse("'@:@' '@:@'"));
  AutomaticRelation accept = AutomaticRelation::from_pair_regex(
      gamma, Regex::cat({Regex::star(ID), evenPad, Regex::parse("'_:★'")}));
  Aarm base(gamma, sigma, {{"I1", accept}}, {});
  return Paarm{std::move(base), "@", {0}};
}

Aarm combine_star(const Aarm& m1) {
  const Alphabet sigma = m1.sigma();
  Alphabet gamma = combined_alphabet(m1, nullptr, true);
  Regex ID = id_any(sigma);
  std::vector<Regex> markAlts, unmark, blankPlain, blankMark;
  for (const std::string& s : sigma.tokens()) {
    markAlts.push_back(Regex::symbol(s + ":^" + s));
    unmark.push_back(Regex::symbol("^" + s + ":" + s));
    blankPlain.push_back(Regex::symbol(s + ":" + std::string(kTagRight)));
    blankMark.push_back(Regex::symbol("^" + s + ":" + std::string(kTagRight)));
  }
  Regex blankAny = Regex::alt(Regex::alt(blankPlain), Regex::alt(blankMark));

  std::vector<Instruction> anke, boris;
  // Anke marks every factor start beyond the first position (a marking with
  // no marks declares the whole word a single factor; ε stays ε).
  anke.push_back({"mark-factors",
                  AutomaticRelation::from_pair_regex(
                      gamma, Regex::alt(Regex::epsilon(),
                                        Regex::cat(ID, Regex::star(Regex::alt(
                                                           ID, Regex::alt(markAlts))))))});
  // Boris picks one factor: blank everything else, unmark its head, tag the
  // front with ⊞.
  Regex pickFirst = Regex::cat(
      Regex::plus(ID),
      Regex::opt(Regex::cat(Regex::alt(blankMark), Regex::star(blankAny))));
  Regex pickLater = Regex::cat(
      {Regex::plus(blankAny), Regex::alt(unmark), Regex::star(ID),
       Regex::opt(Regex::cat(Regex::alt(blankMark), Regex::star(blankAny)))});
  AutomaticRelation pick = AutomaticRelation::from_pair_regex(
      gamma, Regex::alt(pickFirst, pickLater));
  boris.push_back({"pick-factor",
                   compose(pick, prepend_symbol(gamma, kTagLeft, all_words(gamma)))});
  // The factor then runs m1 after ⊞·◊* with a ◊ junk tail.
  Automaton pref =
      Regex::cat(Regex::symbol(kTagLeft), Regex::star(Regex::symbol(kTagRight))).compile(gamma);
  for (const Instruction& i : m1.anke()) {
    AutomaticRelation r = pad_tail(rebase(i.relation, gamma), kTagRight);
    anke.push_back({"L." + i.label, lift_prefix(pref, r)});
  }
  for (const Instruction& i : m1.boris()) {
    AutomaticRelation r = pad_tail(rebase(i.relation, gamma), kTagRight);
    boris.push_back({"L." + i.label, lift_prefix(pref, r)});
  }
  return Aarm(gamma, sigma, std::move(anke), std::move(boris));
}

}  // namespace aarm::zoo
