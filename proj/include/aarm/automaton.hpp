#ifndef AARM_AUTOMATON_HPP
#define AARM_AUTOMATON_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aarm/alphabet.hpp"

namespace aarm {

struct Transition {
  std::uint32_t from;
  SymbolId sym;
  std::uint32_t to;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// A finite-state acceptor over an interned alphabet.  Immutable after
/// construction; ε-transitions never appear here (they exist only inside
/// transient construction helpers).  The `deterministic` flag means complete
/// and single-valued: exactly one successor per (state, symbol).
class Automaton {
 public:
  class Builder {
   public:
    Builder(Alphabet alpha, std::uint32_t num_states, std::uint32_t start);
    std::uint32_t add_state();
    void set_accepting(std::uint32_t s, bool acc = true);
    void add_transition(std::uint32_t from, SymbolId sym, std::uint32_t to);
    Automaton build() &&;

   private:
    Alphabet alpha_;
    std::uint32_t start_;
    std::vector<char> accepting_;
    std::vector<Transition> trans_;
  };

  const Alphabet& alphabet() const { return alpha_; }
  std::uint32_t num_states() const { return static_cast<std::uint32_t>(accepting_.size()); }
  std::uint32_t start() const { return start_; }
  bool is_accepting(std::uint32_t s) const { return accepting_[s] != 0; }
  const std::vector<char>& accepting() const { return accepting_; }
  std::span<const Transition> transitions() const { return trans_; }
  std::span<const Transition> from(std::uint32_t state) const;
  std::span<const Transition> from(std::uint32_t state, SymbolId sym) const;
  bool deterministic() const { return det_; }
  /// Successor under a deterministic automaton.
  std::uint32_t step(std::uint32_t state, SymbolId sym) const;

  bool operator==(const Automaton& o) const;

 private:
  friend class Builder;
  Alphabet alpha_;
  std::uint32_t start_ = 0;
  std::vector<char> accepting_;
  std::vector<Transition> trans_;      // sorted by (from, sym, to), unique
  std::vector<std::uint32_t> row_;     // per-state offsets into trans_
  bool det_ = false;
};

/// Single-state automaton for the empty language.
Automaton empty_language(const Alphabet& a);
/// Automaton accepting exactly {w}.
Automaton word_language(const Alphabet& a, const Word& w);
/// Automaton accepting every word over the alphabet.
Automaton all_words(const Alphabet& a);

bool accepts(const Automaton& a, const Word& w);
bool is_empty(const Automaton& a);
std::optional<Word> shortest_witness(const Automaton& a);

/// Subset construction; result is deterministic and complete, states numbered
/// in BFS discovery order (symbols in alphabet order).
Automaton determinize(const Automaton& a);

/// Hopcroft minimization with canonical BFS renumbering.  Input must be
/// deterministic; two language-equal inputs yield structurally identical
/// (operator==) outputs.
Automaton minimize(const Automaton& a);

/// minimize(determinize(a)) — the canonical form used for equality tests.
Automaton canonical(const Automaton& a);

enum class BoolOp { Union, Intersection, Difference };
Automaton boolean(BoolOp op, const Automaton& a, const Automaton& b);
Automaton complement(const Automaton& a);

struct SubsetResult {
  bool holds;
  std::optional<Word> counterexample;
  explicit operator bool() const { return holds; }
};
SubsetResult is_subset(const Automaton& a, const Automaton& b);
bool equal_language(const Automaton& a, const Automaton& b);

/// True when the automata agree on every word of length <= max_len
/// (breadth-first search over the product of subset constructions).
bool agree_up_to(const Automaton& a, const Automaton& b, std::size_t max_len);

/// All accepted words of length <= max_len in length-lex order.
std::vector<Word> enumerate_words(const Automaton& a, std::size_t max_len);

/// Restriction to states both reachable and co-reachable.
Automaton trim(const Automaton& a);

/// Reinterpret over a larger alphabet (token-wise embedding).
Automaton with_alphabet(const Automaton& a, const Alphabet& bigger);

std::string to_dot(const Automaton& a, const std::string& name = "automaton");

namespace detail {

/// Transient NFA with ε-edges used by the regex compiler and projections.
struct EpsNfa {
  Alphabet alpha;
  std::uint32_t n = 0;
  std::uint32_t start = 0;
  std::vector<char> accepting;
  std::vector<Transition> edges;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> eps;

  explicit EpsNfa(Alphabet a) : alpha(std::move(a)) {}
  std::uint32_t add_state();
  void add_edge(std::uint32_t f, SymbolId s, std::uint32_t t) { edges.push_back({f, s, t}); }
  void add_eps(std::uint32_t f, std::uint32_t t) { eps.emplace_back(f, t); }
  /// ε-elimination; the result has no ε-transitions.
  Automaton eliminate() const;
};

}  // namespace detail
}  // namespace aarm

#endif
