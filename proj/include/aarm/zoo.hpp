#ifndef AARM_ZOO_HPP
#define AARM_ZOO_HPP

#include "aarm/solver.hpp"

namespace aarm::zoo {

/// The one-instruction machine that accepts every binary word (identity on
/// {0,1}*, empty B).
Aarm accept_all_machine();

/// The 0^n 1^n machine: alternate marking, append ★ when fully marked,
/// Boris appends ■ on an odd unmarked count and copies otherwise.
Aarm zeros_ones_machine();

enum class CombineOp { Union, Intersection, Concat, Star };

/// Closure constructions.  Union: Anke tags the branch with ⊞ or ◊ and Boris
/// confirms with a second tag.  Intersection: Anke skips, Boris picks the
/// branch.  Concat: Anke marks one split point, Boris picks a side.  Star:
/// Anke marks all factor starts, Boris picks one factor.  `m2` is ignored for
/// Star.
Aarm combine(CombineOp op, const Aarm& m1, const Aarm& m2);
Aarm combine_star(const Aarm& m1);

/// PAARM wrapper: instructions extended to ignore an @-tail, so the padded
/// machine accepts/rejects exactly like the base machine.
Paarm padded_wrapper(const Aarm& m, std::vector<std::uint64_t> poly);

/// A deliberately invalid pair: Anke can move only on even-length paddings,
/// so paddings split between the winners and acceptance is undefined.
Paarm padding_parity_machine();

// ---- counter machines (register machine compilation) ----

struct CounterInstr {
  enum Kind { Inc, Dec, Halt } kind = Halt;
  std::uint32_t reg = 1;        // 1-based register index
  std::uint32_t go = 1;         // target for Inc; positive branch for Dec
  std::uint32_t go_zero = 1;    // zero branch for Dec
};

struct CounterProgram {
  std::uint32_t registers = 1;
  std::vector<CounterInstr> instrs;  // 1-based lines
};

/// Line-oriented text format: "i: INC r j" / "i: DEC r j k" / "i: HALT".
CounterProgram parse_counter_program(const std::string& text);

struct CounterRun {
  bool halted = false;
  std::uint64_t steps = 0;  // executed instructions, including the HALT
};
CounterRun run_counter_machine(const CounterProgram& p, std::vector<std::uint64_t> regs,
                               std::uint64_t max_steps);

/// The simulation construction: the register holds
/// bstring(line)#bstring(R1)#…#bstring(Rn); Anke executes program lines,
/// Boris can only copy and is forbidden on ★-strings; halting rewrites the
/// register to ★^{|y|}.
Aarm compile_counter_machine(const CounterProgram& p);

/// bstring(line 1)#bstring(input)#0#…#0 as a word of the compiled machine.
Word counter_initial_register(const CounterProgram& p, const Aarm& compiled,
                              std::uint64_t input);

/// Binary, MSB first, no leading zeros except "0".
std::string bstring(std::uint64_t n);

// ---- CNF-SAT game ----

struct Literal {
  std::string variable;  // nonempty binary string
  bool positive = true;
};
using Clause = std::vector<Literal>;
struct CnfFormula {
  std::vector<Clause> clauses;
};

/// CLI text syntax: clauses in parentheses, literals v<binary> or !v<binary>,
/// conjunction "&", disjunction "|" inside a clause.
CnfFormula parse_cnf(const std::string& text);

/// Fixed encoding: sign (+/-), variable name, truth slot '?'; literals joined
/// by ',', clauses by ';', terminated by '.'.
std::string encode_cnf(const CnfFormula& f);
CnfFormula decode_cnf(const std::string& word);
bool brute_force_sat(const CnfFormula& f);

struct SatConfig {
  std::uint32_t base_cutoff = 4;  // cutoff of the embedded inequality protocol
};
/// Anke fills every truth slot so each clause holds; Boris challenges two
/// occurrences with different values, handing over to the inequality protocol
/// on the variable names.
Aarm sat_machine(const SatConfig& cfg = {});
/// The encoded formula as a word of sat_machine's input alphabet.
Word sat_input(const Aarm& machine, const CnfFormula& f);

}  // namespace aarm::zoo

#endif
