#include "aarm/machine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace aarm {

Player opponent(Player p) { return p == Player::Anke ? Player::Boris : Player::Anke; }
std::string player_name(Player p) { return p == Player::Anke ? "Anke" : "Boris"; }

Aarm::Aarm(Alphabet gamma, Alphabet sigma, std::vector<Instruction> anke,
           std::vector<Instruction> boris)
    : gamma_(std::move(gamma)),
      sigma_(std::move(sigma)),
      anke_(std::move(anke)),
      boris_(std::move(boris)) {}

const Instruction* Aarm::find(Player p, std::string_view label) const {
  for (const Instruction& i : instructions(p))
    if (i.label == label) return &i;
  return nullptr;
}

std::uint64_t poly_eval(const std::vector<std::uint64_t>& coeffs, std::uint64_t n) {
  std::uint64_t v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * n + coeffs[i];
  return v;
}

namespace {

void validate_instructions(const Aarm& m, Player p, ValidationReport& rep) {
  std::set<std::string> seen;
  for (const Instruction& ins : m.instructions(p)) {
    std::string who = player_name(p) + " instruction '" + ins.label + "'";
    if (!seen.insert(ins.label).second)
      rep.problems.push_back(who + ": duplicate label");
    if (ins.relation.base() != m.gamma())
      rep.problems.push_back(who + ": relation not over the register alphabet");
    if (!ins.relation.bound())
      rep.problems.push_back(who + ": missing boundedness certificate");
  }
}

}  // namespace

ValidationReport validate(const Aarm& m) {
  ValidationReport rep;
  if (!m.sigma().subset_of(m.gamma()))
    rep.problems.push_back("input alphabet is not contained in the register alphabet");
  validate_instructions(m, Player::Anke, rep);
  validate_instructions(m, Player::Boris, rep);
  // An instruction label shared across A and B must denote the same relation.
  for (const Instruction& a : m.anke())
    for (const Instruction& b : m.boris())
      if (a.label == b.label && !(a.relation == b.relation))
        rep.problems.push_back("label '" + a.label +
                               "' names different relations in A and B");
  return rep;
}

ValidationReport validate(const Paarm& m) {
  ValidationReport rep = validate(m.base);
  auto pad = m.base.gamma().find(m.pad_symbol);
  if (!pad)
    rep.problems.push_back("pad symbol '" + m.pad_symbol + "' not in the register alphabet");
  else if (m.base.sigma().contains(m.pad_symbol))
    rep.problems.push_back("pad symbol '" + m.pad_symbol + "' must not be an input symbol");
  if (pad) {
    // Warn when no Anke instruction applies to any padded input word: the
    // machine would reject everything with an empty history.
    const Alphabet& gamma = m.base.gamma();
    detail::EpsNfa padded(gamma);
    padded.add_state();
    padded.add_state();
    padded.accepting[1] = 1;
    for (const std::string& t : m.base.sigma().tokens())
      padded.add_edge(0, gamma.index_of(t), 0);
    padded.add_eps(0, 1);
    padded.add_edge(1, *pad, 1);
    Automaton paddedWords = padded.eliminate();  // Σ*·@*
    bool any = false;
    for (const Instruction& ins : m.base.anke())
      if (!is_empty(boolean(BoolOp::Intersection, ins.relation.domain(), paddedWords)))
        any = true;
    if (!any && rep.ok())
      rep.warnings.push_back("no Anke instruction applies to any padded input");
  }
  return rep;
}

std::vector<Move> legal_moves(const Aarm& m, Player p, const Word& r) {
  std::vector<Move> moves;
  for (const Instruction& ins : m.instructions(p)) {
    if (!ins.relation.bound())
      throw std::logic_error("legal_moves: instruction '" + ins.label + "' is unbounded");
    if (!has_successor(ins.relation, r)) continue;
    for (Word& y : successors(ins.relation, r)) moves.push_back({ins.label, std::move(y)});
  }
  return moves;
}

bool can_move(const Aarm& m, Player p, const Word& r) {
  return std::any_of(m.instructions(p).begin(), m.instructions(p).end(),
                     [&](const Instruction& i) { return has_successor(i.relation, r); });
}

HistoryCheck check_history(const Aarm& m, const Word& input, const History& h) {
  auto fail = [](std::size_t i, std::string why) {
    return HistoryCheck{false, false, i, std::move(why)};
  };
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Configuration& c = h[i];
    Player p = (i % 2 == 0) ? Player::Anke : Player::Boris;
    const Instruction* ins = m.find(p, c.label);
    if (!ins)
      return fail(i + 1, "term " + std::to_string(i + 1) + ": instruction '" + c.label +
                             "' is not in " + (p == Player::Anke ? "A" : "B"));
    if (i == 0 && c.before != input)
      return fail(1, "r1 differs from the input word");
    if (i > 0 && c.before != h[i - 1].after)
      return fail(i + 1, "term " + std::to_string(i + 1) +
                             ": register-before differs from the previous register-after");
    if (!related(ins->relation, c.before, c.after))
      return fail(i + 1, "term " + std::to_string(i + 1) + ": (r,w) not in instruction '" +
                             c.label + "'");
  }
  HistoryCheck res;
  res.ok = true;
  Player next = (h.size() % 2 == 0) ? Player::Anke : Player::Boris;
  const Word& last = h.empty() ? input : h.back().after;
  res.complete = !can_move(m, next, last);
  return res;
}

Automaton padded_inputs(const Paarm& pm, const Word& w) {
  const Alphabet& gamma = pm.base.gamma();
  SymbolId at = gamma.index_of(pm.pad_symbol);
  for (SymbolId s : w)
    if (s == at) throw std::invalid_argument("padded_inputs: input contains the pad symbol");
  std::uint64_t k = poly_eval(pm.poly, w.size());
  Word prefix = w;
  for (std::uint64_t i = 0; i < k; ++i) prefix.push_back(at);
  // w·@^{p(|w|)}·@*
  Automaton::Builder b(gamma, static_cast<std::uint32_t>(prefix.size()) + 1, 0);
  for (std::uint32_t i = 0; i < prefix.size(); ++i) b.add_transition(i, prefix[i], i + 1);
  b.add_transition(static_cast<std::uint32_t>(prefix.size()), at,
                   static_cast<std::uint32_t>(prefix.size()));
  b.set_accepting(static_cast<std::uint32_t>(prefix.size()));
  return std::move(b).build();
}

}  // namespace aarm
