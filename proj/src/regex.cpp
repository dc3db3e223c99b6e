#include "aarm/regex.hpp"

#include <cctype>
#include <stdexcept>

namespace aarm {

struct Regex::Node {
  enum Kind { Empty, Eps, Sym, Cat, Alt, Star } kind;
  std::string token;
  std::shared_ptr<const Node> left, right;
};

namespace {
using Node = Regex::Node;
}

Regex Regex::empty_set() { return Regex(std::make_shared<Node>(Node{Node::Empty, {}, {}, {}})); }
Regex Regex::epsilon() { return Regex(std::make_shared<Node>(Node{Node::Eps, {}, {}, {}})); }
Regex Regex::symbol(std::string token) {
  return Regex(std::make_shared<Node>(Node{Node::Sym, std::move(token), {}, {}}));
}
Regex Regex::cat(Regex a, Regex b) {
  return Regex(std::make_shared<Node>(Node{Node::Cat, {}, a.node_, b.node_}));
}
Regex Regex::alt(Regex a, Regex b) {
  return Regex(std::make_shared<Node>(Node{Node::Alt, {}, a.node_, b.node_}));
}
Regex Regex::star(Regex a) {
  return Regex(std::make_shared<Node>(Node{Node::Star, {}, a.node_, {}}));
}
Regex Regex::plus(Regex a) { return cat(a, star(a)); }
Regex Regex::opt(Regex a) { return alt(a, epsilon()); }

Regex Regex::cat(std::vector<Regex> parts) {
  if (parts.empty()) return epsilon();
  Regex r = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) r = cat(r, parts[i]);
  return r;
}

Regex Regex::alt(std::vector<Regex> parts) {
  if (parts.empty()) return empty_set();
  Regex r = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) r = alt(r, parts[i]);
  return r;
}

Regex Regex::any_of(std::initializer_list<const char*> tokens) {
  std::vector<Regex> parts;
  for (const char* t : tokens) parts.push_back(symbol(t));
  return alt(std::move(parts));
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  static bool special(char c) {
    return c == '(' || c == ')' || c == '|' || c == '*' || c == '+' || c == '?' || c == '\'';
  }

  Regex parse_expr() {
    Regex r = parse_term();
    while (peek() == '|') {
      ++pos;
      r = Regex::alt(r, parse_term());
    }
    return r;
  }

  Regex parse_term() {
    std::vector<Regex> parts;
    while (true) {
      char c = peek();
      if (c == '\0' || c == ')' || c == '|') break;
      parts.push_back(parse_factor());
    }
    if (parts.empty()) return Regex::epsilon();
    return Regex::cat(std::move(parts));
  }

  Regex parse_factor() {
    Regex r = parse_atom();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos;
        r = Regex::star(r);
      } else if (c == '+') {
        ++pos;
        r = Regex::plus(r);
      } else if (c == '?') {
        ++pos;
        r = Regex::opt(r);
      } else {
        break;
      }
    }
    return r;
  }

  Regex parse_atom() {
    skip_ws();
    if (pos >= text.size()) throw std::invalid_argument("regex: unexpected end");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Regex r = parse_expr();
      if (peek() != ')') throw std::invalid_argument("regex: expected ')'");
      ++pos;
      return r;
    }
    if (c == '\'') {
      ++pos;
      std::size_t end = text.find('\'', pos);
      if (end == std::string_view::npos) throw std::invalid_argument("regex: unterminated quote");
      std::string tok(text.substr(pos, end - pos));
      pos = end + 1;
      if (tok.empty()) throw std::invalid_argument("regex: empty quoted token");
      return Regex::symbol(std::move(tok));
    }
    std::size_t start = pos;
    while (pos < text.size() && !special(text[pos]) &&
           !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    std::string tok(text.substr(start, pos - start));
    if (tok.empty()) throw std::invalid_argument("regex: unexpected character");
    if (tok == "@eps") return Regex::epsilon();
    if (tok == "@empty") return Regex::empty_set();
    return Regex::symbol(std::move(tok));
  }
};

struct Frag {
  std::uint32_t in, out;
};

Frag build(const Node* n, detail::EpsNfa& nfa, const Alphabet& alpha) {
  Frag f{nfa.add_state(), nfa.add_state()};
  switch (n->kind) {
    case Node::Empty:
      break;
    case Node::Eps:
      nfa.add_eps(f.in, f.out);
      break;
    case Node::Sym: {
      auto s = alpha.find(n->token);
      if (!s) throw std::invalid_argument("regex: token '" + n->token + "' not in alphabet");
      nfa.add_edge(f.in, *s, f.out);
      break;
    }
    case Node::Cat: {
      Frag a = build(n->left.get(), nfa, alpha);
      Frag b = build(n->right.get(), nfa, alpha);
      nfa.add_eps(f.in, a.in);
      nfa.add_eps(a.out, b.in);
      nfa.add_eps(b.out, f.out);
      break;
    }
    case Node::Alt: {
      Frag a = build(n->left.get(), nfa, alpha);
      Frag b = build(n->right.get(), nfa, alpha);
      nfa.add_eps(f.in, a.in);
      nfa.add_eps(f.in, b.in);
      nfa.add_eps(a.out, f.out);
      nfa.add_eps(b.out, f.out);
      break;
    }
    case Node::Star: {
      Frag a = build(n->left.get(), nfa, alpha);
      nfa.add_eps(f.in, f.out);
      nfa.add_eps(f.in, a.in);
      nfa.add_eps(a.out, a.in);
      nfa.add_eps(a.out, f.out);
      break;
    }
  }
  return f;
}

}  // namespace

Regex Regex::parse(std::string_view text) {
  Parser p{text};
  Regex r = p.parse_expr();
  if (!p.at_end()) throw std::invalid_argument("regex: trailing input");
  return r;
}

Automaton Regex::compile(const Alphabet& alpha) const {
  detail::EpsNfa nfa(alpha);
  Frag f = build(node_.get(), nfa, alpha);
  nfa.start = f.in;
  nfa.accepting[f.out] = 1;
  return trim(nfa.eliminate());
}

namespace {

bool quoted_needed(const std::string& tok) {
  for (char c : tok)
    if (Parser::special(c) || std::isspace(static_cast<unsigned char>(c))) return true;
  return tok == "@eps" || tok == "@empty";
}

void print(const Node* n, std::string& out, int prec) {
  switch (n->kind) {
    case Node::Empty:
      out += "@empty";
      break;
    case Node::Eps:
      out += "@eps";
      break;
    case Node::Sym:
      if (quoted_needed(n->token))
        out += "'" + n->token + "'";
      else
        out += n->token;
      break;
    case Node::Cat:
      if (prec > 1) out += '(';
      print(n->left.get(), out, 1);
      out += ' ';
      print(n->right.get(), out, 1);
      if (prec > 1) out += ')';
      break;
    case Node::Alt:
      if (prec > 0) out += '(';
      print(n->left.get(), out, 0);
      out += '|';
      print(n->right.get(), out, 0);
      if (prec > 0) out += ')';
      break;
    case Node::Star:
      print(n->left.get(), out, 2);
      out += '*';
      break;
  }
}

}  // namespace

std::string Regex::to_string() const {
  std::string out;
  print(node_.get(), out, 0);
  return out;
}

}  // namespace aarm
