#ifndef AARM_REGEX_HPP
#define AARM_REGEX_HPP

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "aarm/automaton.hpp"

namespace aarm {

/// Regular-expression AST over symbol tokens.  Leaves are token strings that
/// must belong to the target alphabet at compile time.
class Regex {
 public:
  static Regex empty_set();
  static Regex epsilon();
  static Regex symbol(std::string token);
  static Regex cat(Regex a, Regex b);
  static Regex cat(std::vector<Regex> parts);
  static Regex alt(Regex a, Regex b);
  static Regex alt(std::vector<Regex> parts);
  static Regex star(Regex a);
  static Regex plus(Regex a);
  static Regex opt(Regex a);
  /// Alternation over a list of single tokens.
  static Regex any_of(std::initializer_list<const char*> tokens);

  /// Textual form.  Tokens are runs of characters other than
  /// `( ) | * + ?` and whitespace, or quoted as 'tok'; juxtaposition is
  /// concatenation, `@eps` the empty word, `@empty` the empty set.
  static Regex parse(std::string_view text);

  /// Thompson construction followed by ε-elimination.
  Automaton compile(const Alphabet& alpha) const;

  std::string to_string() const;

  struct Node;  // implementation detail, exposed for the compiler unit

 private:
  explicit Regex(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace aarm

#endif
