#ifndef AARM_SOLVER_HPP
#define AARM_SOLVER_HPP

#include <functional>
#include <optional>

#include "aarm/machine.hpp"

namespace aarm {

enum class Verdict { AnkeWins, BorisWins, Undetermined };
std::string verdict_name(Verdict v);

struct GameOutcome {
  Verdict verdict = Verdict::Undetermined;
  /// Total turns of the game under optimal play (minimal for the winner
  /// against optimal defense).  AnkeWins counts are odd; BorisWins counts are
  /// even, or 0 with the empty-history flag when Anke had no first move.
  std::uint32_t turns = 0;
  bool empty_history = false;
  History principal_variation;
};

/// Memoized minimax over (player to move, register word, remaining depth).
/// All instructions must carry boundedness certificates; max_depth >= 1.
GameOutcome solve_explicit(const Aarm& m, const Word& w, std::uint32_t max_depth);

struct SolveLimits {
  std::uint32_t max_depth = 12;
  std::size_t max_states = 1'000'000;
};

/// Per-depth regular winning sets.  anke_wins_* hold register languages from
/// which Anke forces a win within k further turns (with the named player to
/// move); boris_wins_* are the symmetric Boris sets.  All automata canonical.
struct WinSets {
  std::vector<Automaton> anke_wins_anke_moves;    // WA[k]
  std::vector<Automaton> anke_wins_boris_moves;   // WB[k]
  std::vector<Automaton> boris_wins_boris_moves;  // symmetric, Boris to move
  std::vector<Automaton> boris_wins_anke_moves;
  std::uint32_t instruction_state_bound = 0;      // c: max instruction automaton size
  std::uint32_t depth() const {
    return static_cast<std::uint32_t>(anke_wins_anke_moves.size()) - 1;
  }
};

/// Iterated preimage construction: WB[0] is the stuck-for-Boris language and
/// WA[k] = ∪_J preimage(J, WB[k-1]); every level is canonicalized.
/// Boundedness is not required.
WinSets winsets_symbolic(const Aarm& m, std::uint32_t depth, const SolveLimits& lim = {});

struct StateBoundRow {
  std::uint32_t k = 0;
  std::uint64_t actual = 0;   // states of the canonical WA[k] ∪ BA[k] automaton
  std::string bound;          // tower(k+2, c), possibly symbolic
  bool ok = false;
};
struct StateBoundReport {
  std::vector<StateBoundRow> rows;
  bool ok() const;
};
StateBoundReport state_bound_report(const WinSets& ws);

enum class PaarmVerdict { Accept, Reject, Undetermined };
struct PaarmOutcome {
  PaarmVerdict verdict = PaarmVerdict::Undetermined;
  std::uint32_t depth = 0;  // least k establishing the verdict
  std::string note;
};
/// Accept iff every sufficiently long padding lands in an Anke winning set
/// within the depth cap; Reject symmetrically; otherwise Undetermined (with a
/// note when paddings split between the two winners).
PaarmOutcome paarm_accepts(const Paarm& pm, const Word& w, std::uint32_t max_depth,
                           const SolveLimits& lim = {});

/// A strategy maps (history so far, current register) to a move; nullopt
/// resigns.
using Strategy = std::function<std::optional<Move>(const History&, const Word&)>;

struct MatchResult {
  Verdict verdict = Verdict::Undetermined;
  std::uint32_t turns = 0;
  bool illegal_move = false;  // the mover lost by playing outside the relation
  std::string note;
  History history;
};
MatchResult play_match(const Aarm& m, const Word& w, Strategy anke, Strategy boris,
                       std::uint32_t max_turns);

/// Exact unsigned big natural, enough for tower values and their printing.
class BigNat {
 public:
  BigNat() = default;
  static BigNat from_u64(std::uint64_t v);
  static BigNat pow2(std::uint64_t exponent);
  BigNat mul_u64(std::uint64_t f) const;
  std::optional<std::uint64_t> to_u64() const;
  int compare(const BigNat& o) const;
  bool operator==(const BigNat& o) const { return compare(o) == 0; }
  std::string to_string() const;
  std::size_t bit_count() const;

 private:
  std::vector<std::uint32_t> limbs_;  // little-endian base 2^32; no trailing zeros
};

/// tower(0,c) = 1, tower(d+1,c) = 2^{c·tower(d,c)}.  `exact` is false once
/// the value can no longer be materialized; such values exceed every
/// machine-representable quantity.
struct TowerValue {
  bool exact = true;
  BigNat value;
  std::string to_string() const;
};
TowerValue tower(std::uint32_t d, std::uint32_t c);
/// n <= tower(d, c), decided without materializing astronomically large towers.
bool tower_at_least(std::uint32_t d, std::uint32_t c, std::uint64_t n);

/// Least k such that the k-fold iterated base-2 logarithm of n is <= 1.
std::uint32_t log_star(std::uint64_t n);

}  // namespace aarm

#endif
