#ifndef AARM_MACHINE_HPP
#define AARM_MACHINE_HPP

#include <string>
#include <vector>

#include "aarm/relation.hpp"

namespace aarm {

enum class Player { Anke, Boris };
Player opponent(Player p);
std::string player_name(Player p);

/// A labelled instruction: a bounded automatic relation on register contents.
struct Instruction {
  std::string label;
  AutomaticRelation relation;
};

/// Alternating Automatic Register Machine (Γ, Σ, A, B).
class Aarm {
 public:
  Aarm(Alphabet gamma, Alphabet sigma, std::vector<Instruction> anke,
       std::vector<Instruction> boris);

  const Alphabet& gamma() const { return gamma_; }
  const Alphabet& sigma() const { return sigma_; }
  const std::vector<Instruction>& instructions(Player p) const {
    return p == Player::Anke ? anke_ : boris_;
  }
  const std::vector<Instruction>& anke() const { return anke_; }
  const std::vector<Instruction>& boris() const { return boris_; }
  const Instruction* find(Player p, std::string_view label) const;

 private:
  Alphabet gamma_, sigma_;
  std::vector<Instruction> anke_, boris_;
};

/// PAARM: an AARM plus a padding symbol @ ∈ Γ∖Σ and a polynomial p with
/// nonnegative coefficients (p(n) = Σ coeff[i]·n^i).
struct Paarm {
  Aarm base;
  std::string pad_symbol;
  std::vector<std::uint64_t> poly;
};

std::uint64_t poly_eval(const std::vector<std::uint64_t>& coeffs, std::uint64_t n);

struct ValidationReport {
  std::vector<std::string> problems;
  std::vector<std::string> warnings;
  bool ok() const { return problems.empty(); }
};
ValidationReport validate(const Aarm& m);
ValidationReport validate(const Paarm& m);

struct Move {
  std::string label;
  Word to;
};

/// All (label, successor) moves available to `p` from register word `r`, in
/// instruction order then length-lex.  Requires bounded instructions.
std::vector<Move> legal_moves(const Aarm& m, Player p, const Word& r);
/// True when some instruction of `p` applies to `r`.
bool can_move(const Aarm& m, Player p, const Word& r);

struct Configuration {
  std::string label;
  Word before, after;
};
using History = std::vector<Configuration>;

struct HistoryCheck {
  bool ok = true;
  /// Whether the next player is stuck after the final configuration (a valid
  /// history that is not complete is a prefix of a longer play).
  bool complete = false;
  std::size_t index = 0;      // 1-based term of the first violation
  std::string violation;      // empty when ok
};

/// Validates a computation history against the five defining conditions:
/// r1 = input, (r_i, w_i) ∈ I_{ℓ_i}, odd terms from A / even from B, and
/// r_{i+1} = w_i.
HistoryCheck check_history(const Aarm& m, const Word& input, const History& h);

/// {w·@^k : k >= p(|w|)} as an automaton over Γ.
Automaton padded_inputs(const Paarm& pm, const Word& w);

}  // namespace aarm

#endif
