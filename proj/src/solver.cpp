#include "aarm/solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace aarm {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::AnkeWins: return "AnkeWins";
    case Verdict::BorisWins: return "BorisWins";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "?";
}

namespace {

struct Value {
  Verdict verdict = Verdict::Undetermined;
  std::uint32_t turns = 0;  // remaining turns under optimal play when decided
};

struct Solver {
  const Aarm& m;
  // Memo keyed by (player, register word, remaining depth).
  std::map<std::tuple<int, Word, std::uint32_t>, Value> memo;

  Value solve(Player p, const Word& r, std::uint32_t depth) {
    auto key = std::make_tuple(p == Player::Anke ? 0 : 1, r, depth);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Value v = compute(p, r, depth);
    memo.emplace(std::move(key), v);
    return v;
  }

  Value compute(Player p, const Word& r, std::uint32_t depth) {
    std::vector<Move> moves = legal_moves(m, p, r);
    if (moves.empty()) {
      // The player to move is stuck: the opponent made the last move.
      return {p == Player::Anke ? Verdict::BorisWins : Verdict::AnkeWins, 0};
    }
    if (depth == 0) return {Verdict::Undetermined, 0};
    const Verdict mine = p == Player::Anke ? Verdict::AnkeWins : Verdict::BorisWins;
    const Verdict theirs = p == Player::Anke ? Verdict::BorisWins : Verdict::AnkeWins;
    bool sawUndetermined = false;
    std::uint32_t bestWin = UINT32_MAX, worstLoss = 0;
    for (const Move& mv : moves) {
      Value sub = solve(opponent(p), mv.to, depth - 1);
      if (sub.verdict == mine)
        bestWin = std::min(bestWin, sub.turns + 1);
      else if (sub.verdict == Verdict::Undetermined)
        sawUndetermined = true;
      else
        worstLoss = std::max(worstLoss, sub.turns + 1);
    }
    if (bestWin != UINT32_MAX) return {mine, bestWin};
    if (sawUndetermined) return {Verdict::Undetermined, 0};
    return {theirs, worstLoss};
  }

  // Rebuild the optimal line: winner minimizes, loser maximizes; ties break
  // on move order (instruction order, then length-lex).
  void principal_variation(Player p, Word r, std::uint32_t depth, History& out) {
    while (true) {
      Value here = solve(p, r, depth);
      if (here.verdict == Verdict::Undetermined || here.turns == 0) return;
      std::vector<Move> moves = legal_moves(m, p, r);
      const Move* chosen = nullptr;
      for (const Move& mv : moves) {
        Value sub = solve(opponent(p), mv.to, depth - 1);
        if (sub.verdict == here.verdict && sub.turns + 1 == here.turns) {
          chosen = &mv;
          break;
        }
      }
      if (!chosen) return;  // should not happen
      out.push_back({chosen->label, r, chosen->to});
      r = chosen->to;
      p = opponent(p);
      --depth;
    }
  }
};

}  // namespace

GameOutcome solve_explicit(const Aarm& m, const Word& w, std::uint32_t max_depth) {
  if (max_depth == 0) throw std::invalid_argument("solve_explicit: max_depth must be >= 1");
  for (Player p : {Player::Anke, Player::Boris})
    for (const Instruction& ins : m.instructions(p))
      if (!ins.relation.bound())
        throw std::invalid_argument("solve_explicit: instruction '" + ins.label +
                                    "' has no boundedness certificate");
  Solver s{m};
  Value v = s.solve(Player::Anke, w, max_depth);
  GameOutcome out;
  out.verdict = v.verdict;
  out.turns = v.verdict == Verdict::Undetermined ? 0 : v.turns;
  if (v.verdict == Verdict::BorisWins && v.turns == 0) out.empty_history = true;
  if (v.verdict != Verdict::Undetermined)
    s.principal_variation(Player::Anke, w, max_depth, out.principal_variation);
  return out;
}

namespace {

Automaton checked_canonical(const Automaton& a, const SolveLimits& lim) {
  Automaton c = canonical(a);
  if (c.num_states() > lim.max_states)
    throw std::runtime_error("winsets: state budget exceeded (" +
                             std::to_string(c.num_states()) + " states)");
  return c;
}

/// One player's winning-set family: sets[k][0] = win within k when the
/// winner moves, sets[k][1] = win within k when the opponent moves.
struct Family {
  std::vector<Automaton> onMove, offMove;
};

Family winning_family(const Aarm& m, Player winner, std::uint32_t depth,
                      const SolveLimits& lim) {
  const Alphabet& gamma = m.gamma();
  Automaton everything = all_words(gamma);
  // Opponent's instructions and their inverses (preimage sources).
  std::vector<AutomaticRelation> oppInv, ownInv;
  for (const Instruction& i : m.instructions(opponent(winner)))
    oppInv.push_back(inverse(i.relation));
  for (const Instruction& i : m.instructions(winner))
    ownInv.push_back(inverse(i.relation));
  auto pre = [&](const std::vector<AutomaticRelation>& inv, const Automaton& target) {
    Automaton acc = empty_language(gamma);
    for (const AutomaticRelation& r : inv)
      acc = boolean(BoolOp::Union, acc, image(r, target));
    return acc;
  };

  Family f;
  // offMove[0]: opponent to move and stuck.
  Automaton oppCanMove = checked_canonical(pre(oppInv, everything), lim);
  f.offMove.push_back(checked_canonical(complement(oppCanMove), lim));
  // onMove[0]: the winner must still move first; no win within 0.
  f.onMove.push_back(checked_canonical(empty_language(gamma), lim));
  for (std::uint32_t k = 1; k <= depth; ++k) {
    Automaton wa = checked_canonical(pre(ownInv, f.offMove[k - 1]), lim);
    // offMove[k] = stuck ∪ (can-move ∧ every move lands in onMove[k-1]).
    Automaton escape = pre(oppInv, complement(f.onMove[k - 1]));
    Automaton trapped = boolean(BoolOp::Intersection, oppCanMove,
                               boolean(BoolOp::Difference, everything, escape));
    Automaton wb = checked_canonical(
        boolean(BoolOp::Union, f.offMove[0], trapped), lim);
    f.onMove.push_back(std::move(wa));
    f.offMove.push_back(std::move(wb));
  }
  return f;
}

}  // namespace

WinSets winsets_symbolic(const Aarm& m, std::uint32_t depth, const SolveLimits& lim) {
  if (depth > lim.max_depth)
    throw std::invalid_argument("winsets: depth exceeds the configured cap");
  WinSets ws;
  Family anke = winning_family(m, Player::Anke, depth, lim);
  Family boris = winning_family(m, Player::Boris, depth, lim);
  ws.anke_wins_anke_moves = std::move(anke.onMove);
  ws.anke_wins_boris_moves = std::move(anke.offMove);
  ws.boris_wins_boris_moves = std::move(boris.onMove);
  ws.boris_wins_anke_moves = std::move(boris.offMove);
  std::uint32_t c = 1;
  for (Player p : {Player::Anke, Player::Boris})
    for (const Instruction& i : m.instructions(p))
      c = std::max(c, i.relation.automaton().num_states());
  ws.instruction_state_bound = c;
  return ws;
}

bool StateBoundReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const StateBoundRow& r) { return r.ok; });
}

StateBoundReport state_bound_report(const WinSets& ws) {
  StateBoundReport rep;
  const std::uint32_t c = ws.instruction_state_bound;
  for (std::uint32_t k = 0; k <= ws.depth(); ++k) {
    // Decision automaton: some player wins within k from the initial
    // (Anke-to-move) position.
    Automaton dec = canonical(boolean(BoolOp::Union, ws.anke_wins_anke_moves[k],
                                      ws.boris_wins_anke_moves[k]));
    StateBoundRow row;
    row.k = k;
    row.actual = dec.num_states();
    row.bound = tower(k + 2, c).to_string();
    row.ok = tower_at_least(k + 2, c, row.actual);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

PaarmOutcome paarm_accepts(const Paarm& pm, const Word& w, std::uint32_t max_depth,
                           const SolveLimits& lim) {
  Automaton padded = padded_inputs(pm, w);
  SolveLimits lifted = lim;
  lifted.max_depth = std::max(lifted.max_depth, max_depth);
  WinSets ws = winsets_symbolic(pm.base, max_depth, lifted);
  for (std::uint32_t k = 0; k <= max_depth; ++k) {
    if (is_subset(padded, ws.anke_wins_anke_moves[k]).holds)
      return {PaarmVerdict::Accept, k, ""};
    if (is_subset(padded, ws.boris_wins_anke_moves[k]).holds)
      return {PaarmVerdict::Reject, k, ""};
  }
  bool someAnke =
      !is_empty(boolean(BoolOp::Intersection, padded, ws.anke_wins_anke_moves[max_depth]));
  bool someBoris =
      !is_empty(boolean(BoolOp::Intersection, padded, ws.boris_wins_anke_moves[max_depth]));
  PaarmOutcome out{PaarmVerdict::Undetermined, max_depth, ""};
  if (someAnke && someBoris)
    out.note = "invalid pair: paddings split between Anke-winning and Boris-winning sets";
  return out;
}

MatchResult play_match(const Aarm& m, const Word& w, Strategy anke, Strategy boris,
                       std::uint32_t max_turns) {
  MatchResult res;
  Word r = w;
  Player p = Player::Anke;
  for (std::uint32_t turn = 1; turn <= max_turns; ++turn) {
    if (!can_move(m, p, r)) {
      res.verdict = p == Player::Anke ? Verdict::BorisWins : Verdict::AnkeWins;
      res.turns = turn - 1;
      return res;
    }
    std::optional<Move> mv = (p == Player::Anke ? anke : boris)(res.history, r);
    if (!mv) {
      res.verdict = p == Player::Anke ? Verdict::BorisWins : Verdict::AnkeWins;
      res.turns = turn - 1;
      res.note = player_name(p) + " resigned";
      return res;
    }
    const Instruction* ins = m.find(p, mv->label);
    if (!ins || !related(ins->relation, r, mv->to)) {
      res.verdict = p == Player::Anke ? Verdict::BorisWins : Verdict::AnkeWins;
      res.turns = turn - 1;
      res.illegal_move = true;
      res.note = player_name(p) + " played an illegal move";
      return res;
    }
    res.history.push_back({mv->label, r, mv->to});
    r = mv->to;
    p = opponent(p);
  }
  res.verdict = Verdict::Undetermined;
  res.turns = max_turns;
  return res;
}

// ---- numeric utilities ----

BigNat BigNat::from_u64(std::uint64_t v) {
  BigNat n;
  while (v) {
    n.limbs_.push_back(static_cast<std::uint32_t>(v));
    v >>= 32;
  }
  return n;
}

BigNat BigNat::pow2(std::uint64_t exponent) {
  BigNat n;
  n.limbs_.assign(exponent / 32 + 1, 0);
  n.limbs_.back() = 1u << (exponent % 32);
  return n;
}

BigNat BigNat::mul_u64(std::uint64_t f) const {
  BigNat out;
  if (limbs_.empty() || f == 0) return out;
  std::uint32_t lo = static_cast<std::uint32_t>(f), hi = static_cast<std::uint32_t>(f >> 32);
  auto mul32 = [](const std::vector<std::uint32_t>& a, std::uint32_t m, int shift) {
    std::vector<std::uint32_t> r(shift, 0);
    std::uint64_t carry = 0;
    for (std::uint32_t limb : a) {
      std::uint64_t v = static_cast<std::uint64_t>(limb) * m + carry;
      r.push_back(static_cast<std::uint32_t>(v));
      carry = v >> 32;
    }
    while (carry) {
      r.push_back(static_cast<std::uint32_t>(carry));
      carry >>= 32;
    }
    return r;
  };
  std::vector<std::uint32_t> a = mul32(limbs_, lo, 0);
  std::vector<std::uint32_t> b = hi ? mul32(limbs_, hi, 1) : std::vector<std::uint32_t>{};
  // add
  std::vector<std::uint32_t> sum;
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
    std::uint64_t v = carry;
    if (i < a.size()) v += a[i];
    if (i < b.size()) v += b[i];
    sum.push_back(static_cast<std::uint32_t>(v));
    carry = v >> 32;
  }
  while (!sum.empty() && sum.back() == 0) sum.pop_back();
  out.limbs_ = std::move(sum);
  return out;
}

std::optional<std::uint64_t> BigNat::to_u64() const {
  if (limbs_.size() > 2) return std::nullopt;
  std::uint64_t v = 0;
  if (limbs_.size() >= 2) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

int BigNat::compare(const BigNat& o) const {
  if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
  for (std::size_t i = limbs_.size(); i-- > 0;)
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
  return 0;
}

std::size_t BigNat::bit_count() const {
  if (limbs_.empty()) return 0;
  std::size_t bits = (limbs_.size() - 1) * 32;
  std::uint32_t top = limbs_.back();
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

std::string BigNat::to_string() const {
  if (limbs_.empty()) return "0";
  std::vector<std::uint32_t> work = limbs_;
  std::string digits;
  while (!work.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      std::uint64_t v = (rem << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(v / 1000000000u);
      rem = v % 1000000000u;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    for (int d = 0; d < 9; ++d) {
      digits.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string TowerValue::to_string() const {
  if (exact) return value.to_string();
  return "(exceeds exact range)";
}

namespace {
// Materialization cap for tower values, in bits.
constexpr std::uint64_t kTowerBitCap = 1u << 21;
}  // namespace

TowerValue tower(std::uint32_t d, std::uint32_t c) {
  TowerValue t{true, BigNat::from_u64(1)};
  for (std::uint32_t i = 0; i < d; ++i) {
    if (!t.exact) return t;
    BigNat exp = t.value.mul_u64(c);
    auto e = exp.to_u64();
    if (!e || *e > kTowerBitCap) {
      t.exact = false;
      return t;
    }
    t.value = BigNat::pow2(*e);
  }
  return t;
}

bool tower_at_least(std::uint32_t d, std::uint32_t c, std::uint64_t n) {
  TowerValue t = tower(d, c);
  if (!t.exact) return true;  // astronomically large
  return BigNat::from_u64(n).compare(t.value) <= 0;
}

std::uint32_t log_star(std::uint64_t n) {
  std::uint32_t k = 0;
  while (n > 2) {
    // ceil(log2 n); the iterated count agrees with the real-valued version.
    std::uint64_t lg = 0, v = n - 1;
    while (v) {
      ++lg;
      v >>= 1;
    }
    n = lg;
    ++k;
  }
  return n == 2 ? k + 1 : k;
}

}  // namespace aarm
