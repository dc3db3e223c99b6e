#ifndef AARM_ALPHABET_HPP
#define AARM_ALPHABET_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aarm {

using SymbolId = std::uint32_t;

/// A word is a sequence of symbol indices into some Alphabet.
using Word = std::vector<SymbolId>;

/// An ordered, immutable set of interned symbol tokens.  Tokens are arbitrary
/// non-empty text labels ("0", "•1", "@", "$").  Declaration order is the
/// canonical order used for minimization and length-lex enumeration.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::vector<std::string> tokens);

  std::size_t size() const { return data_->tokens.size(); }
  const std::string& token(SymbolId s) const { return data_->tokens.at(s); }
  const std::vector<std::string>& tokens() const { return data_->tokens; }

  std::optional<SymbolId> find(std::string_view tok) const;
  SymbolId index_of(std::string_view tok) const;  // throws if absent
  bool contains(std::string_view tok) const { return find(tok).has_value(); }

  /// True when both alphabets list the same tokens in the same order.
  bool operator==(const Alphabet& o) const;
  bool operator!=(const Alphabet& o) const { return !(*this == o); }

  /// True when every token of this alphabet appears in `bigger`.
  bool subset_of(const Alphabet& bigger) const;

  Word word(std::initializer_list<const char*> toks) const;

  /// Parses text into a word.  If the text contains spaces it is split on
  /// them; otherwise greedy longest-token matching is used.
  Word parse_word(std::string_view text) const;

  /// Inverse of parse_word: tokens are concatenated when every token in the
  /// alphabet is a single byte, otherwise joined with spaces.
  std::string format_word(const Word& w) const;

 private:
  struct Data {
    std::vector<std::string> tokens;
    std::map<std::string, SymbolId, std::less<>> index;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace aarm

#endif
