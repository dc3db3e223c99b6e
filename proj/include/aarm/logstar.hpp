#ifndef AARM_LOGSTAR_HPP
#define AARM_LOGSTAR_HPP

#include "aarm/solver.hpp"

namespace aarm::zoo {

/// Marking sequence T: blocks "2"+binary in ascending length-lex order
/// (20, 21, 200, 201, 210, 211, 2000, …).
std::vector<std::string> t_sequence(std::size_t num_blocks);
/// Length-lex successor of a block, including the all-ones corner case
/// (2·1^t → 2·0^{t+1}); otherwise the last 0 flips and the tail clears.
std::string block_successor(const std::string& block);

/// Payload word plus a parallel mark layer ('-' over $, digits 0-3 elsewhere).
struct MarkedString {
  std::string payload;  // over Σ ∪ {#,$}; bytes
  std::string marks;    // same length; '0'..'3' or '-' at the $ position
};

/// Lays T's digits over each payload side independently (every # marked 3,
/// T restarting at v's first payload symbol).
MarkedString mark_string(const std::string& s);

struct MarkingCheck {
  bool valid = true;
  std::size_t position = 0;   // 0-based offending position
  std::string rule;           // "unmarked-hash", "first-block", "successor"
};
MarkingCheck is_valid_marking(const MarkedString& ms);

/// Largest k with (k-2)·2^{k-1} + k <= n.
std::uint32_t max_block_length(std::uint64_t n);

enum class ProtocolMode { Equal, Unequal };

struct ProtocolConfig {
  std::vector<std::string> sigma = {"a", "b"};  // payload alphabet
  std::uint32_t base_cutoff = 4;                // c0 >= 2
};

/// The Log-Star comparison machine over Σ∪{#,$}: inputs #*u#*$#*v#*, Anke
/// wins exactly on u = v (Equal mode) or u ≠ v (Unequal mode).
Aarm equality_machine(const ProtocolConfig& cfg, ProtocolMode mode);

/// Honest prover: correct markings, first true witness, honest recursion.
Strategy anke_reference_strategy(const ProtocolConfig& cfg, ProtocolMode mode);
/// Sharpest challenger: challenges the first marking error, otherwise the
/// canonical shrinking challenge.
Strategy boris_reference_strategy(const ProtocolConfig& cfg, ProtocolMode mode);

/// "#*u#*$#*v#*"-style input as a word of the machine.
Word protocol_input(const Aarm& machine, const std::string& text);

}  // namespace aarm::zoo

#endif
