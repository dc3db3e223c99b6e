#ifndef AARM_RELATION_HPP
#define AARM_RELATION_HPP

#include <optional>
#include <utility>

#include "aarm/automaton.hpp"
#include "aarm/regex.hpp"

namespace aarm {

/// Derived alphabet of convolution pair symbols over a base alphabet Γ.
/// A pair symbol couples a left and a right component, each either a base
/// symbol or the reserved pad (rendered "_"); (pad, pad) is excluded.  Pair
/// tokens read "l:r", e.g. "a:b", "a:_", "_:b".
class PairAlphabet {
 public:
  explicit PairAlphabet(Alphabet base);

  const Alphabet& base() const { return base_; }
  const Alphabet& pairs() const { return pairs_; }
  /// Pseudo-index of the pad component (== base().size()).
  SymbolId pad() const { return static_cast<SymbolId>(base_.size()); }
  SymbolId pair(SymbolId left, SymbolId right) const;
  SymbolId left(SymbolId pairSym) const;
  SymbolId right(SymbolId pairSym) const;
  bool left_is_pad(SymbolId pairSym) const { return left(pairSym) == pad(); }
  bool right_is_pad(SymbolId pairSym) const { return right(pairSym) == pad(); }

  /// conv(x, y): position-wise pairing padded to max(|x|, |y|).
  Word convolve(const Word& x, const Word& y) const;
  /// Inverse of convolve; rejects ill-formed words (pad resuming).
  std::pair<Word, Word> deconvolve(const Word& conv) const;

 private:
  Alphabet base_;
  Alphabet pairs_;
};

/// The 3-state automaton of well-formed convolution words (pads persist).
Automaton wf_automaton(const PairAlphabet& pa);

/// A binary relation on Γ*-words whose convolution language is regular.
/// The automaton is stored determinized + minimized; the language is checked
/// to be well-formed at construction.  `bound` is the boundedness
/// certificate c (abs(|y|-|x|) <= c for all related pairs) when one exists.
class AutomaticRelation {
 public:
  static AutomaticRelation from_automaton(Alphabet base, const Automaton& aut);
  static AutomaticRelation from_pair_regex(Alphabet base, const Regex& re);

  const Alphabet& base() const { return pa_.base(); }
  const PairAlphabet& pair_alphabet() const { return pa_; }
  const Automaton& automaton() const { return aut_; }
  /// Language of register contents from which at least one move exists.
  const Automaton& domain() const { return domain_; }
  std::optional<std::uint32_t> bound() const { return bound_; }

  bool operator==(const AutomaticRelation& o) const {
    return pa_.base() == o.pa_.base() && aut_ == o.aut_;
  }

 private:
  AutomaticRelation(PairAlphabet pa, Automaton aut, Automaton domain,
                    std::optional<std::uint32_t> bound)
      : pa_(std::move(pa)), aut_(std::move(aut)), domain_(std::move(domain)), bound_(bound) {}
  PairAlphabet pa_;
  Automaton aut_;
  Automaton domain_;
  std::optional<std::uint32_t> bound_;
};

struct UnboundedWitness {
  Word prefix, cycle, suffix;  // convolution words; pumping the cycle grows the gap
};
struct BoundednessResult {
  std::optional<std::uint32_t> bound;
  std::optional<UnboundedWitness> witness;
  bool bounded() const { return bound.has_value(); }
};
BoundednessResult check_bounded(const AutomaticRelation& r);

bool related(const AutomaticRelation& r, const Word& x, const Word& y);

/// {y : ∃x ∈ L(s), (x,y) ∈ r}, trimmed automaton over Γ.
Automaton image(const AutomaticRelation& r, const Automaton& s);
/// {x : ∃y ∈ L(s), (x,y) ∈ r}.
Automaton preimage(const AutomaticRelation& r, const Automaton& s);
/// image(r, {x}) without building a one-word automaton.
Automaton image_of_word(const AutomaticRelation& r, const Word& x);
/// Complete finite successor set in length-lex order; requires a
/// boundedness certificate.
std::vector<Word> successors(const AutomaticRelation& r, const Word& x);
/// True when some y with (x,y) ∈ r exists.
bool has_successor(const AutomaticRelation& r, const Word& x);

AutomaticRelation rel_union(const AutomaticRelation& a, const AutomaticRelation& b);
AutomaticRelation rel_intersection(const AutomaticRelation& a, const AutomaticRelation& b);
/// Complement within the well-formed convolution language.
AutomaticRelation rel_complement(const AutomaticRelation& a);
/// {(x,z) : ∃y. (x,y) ∈ a ∧ (y,z) ∈ b} via a three-track product.
AutomaticRelation compose(const AutomaticRelation& a, const AutomaticRelation& b);
AutomaticRelation inverse(const AutomaticRelation& a);
AutomaticRelation identity_on(const Automaton& lang);
AutomaticRelation product(const Automaton& left, const Automaton& right);
AutomaticRelation restrict_domain(const AutomaticRelation& r, const Automaton& lang);
AutomaticRelation restrict_range(const AutomaticRelation& r, const Automaton& lang);

/// {(x1·x2, y1·y2) : (x1,y1) ∈ a, (x2,y2) ∈ b}.  Requires a bounded `a`
/// (the internal buffer tracks the ≤ c misalignment of the two seams).
AutomaticRelation rel_concat(const AutomaticRelation& a, const AutomaticRelation& b);

/// {(x·j^k, y·j^k) : (x,y) ∈ r, k >= 0} — a junk tail that absorbs length
/// changes of the active part.  Shorthand for rel_concat(r, identity_on(j*)).
AutomaticRelation pad_tail(const AutomaticRelation& r, std::string_view junk_token);

/// {(p·x, p·y) : p ∈ P, (x,y) ∈ r} — an inert prefix, equal on both sides.
AutomaticRelation lift_prefix(const Automaton& prefix_lang, const AutomaticRelation& r);

/// {(x, σ·x) : x ∈ D} — the one-symbol shift.
AutomaticRelation prepend_symbol(const Alphabet& base, std::string_view sym,
                                 const Automaton& domain);

}  // namespace aarm

#endif
