#include "aarm/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

namespace aarm {

Alphabet::Alphabet() : data_(std::make_shared<Data>()) {}

Alphabet::Alphabet(std::vector<std::string> tokens) {
  auto d = std::make_shared<Data>();
  d->tokens = std::move(tokens);
  for (SymbolId i = 0; i < d->tokens.size(); ++i) {
    if (d->tokens[i].empty())
      throw std::invalid_argument("alphabet: empty token");
    auto [it, fresh] = d->index.emplace(d->tokens[i], i);
    if (!fresh)
      throw std::invalid_argument("alphabet: duplicate token '" + d->tokens[i] + "'");
  }
  data_ = std::move(d);
}

std::optional<SymbolId> Alphabet::find(std::string_view tok) const {
  auto it = data_->index.find(tok);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

SymbolId Alphabet::index_of(std::string_view tok) const {
  auto s = find(tok);
  if (!s) throw std::out_of_range("alphabet: unknown token '" + std::string(tok) + "'");
  return *s;
}

bool Alphabet::operator==(const Alphabet& o) const {
  return data_ == o.data_ || data_->tokens == o.data_->tokens;
}

bool Alphabet::subset_of(const Alphabet& bigger) const {
  return std::all_of(tokens().begin(), tokens().end(),
                     [&](const std::string& t) { return bigger.contains(t); });
}

Word Alphabet::word(std::initializer_list<const char*> toks) const {
  Word w;
  w.reserve(toks.size());
  for (const char* t : toks) w.push_back(index_of(t));
  return w;
}

Word Alphabet::parse_word(std::string_view text) const {
  Word w;
  if (text.empty()) return w;
  if (text.find(' ') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t sp = text.find(' ', pos);
      if (sp == std::string_view::npos) sp = text.size();
      if (sp > pos) w.push_back(index_of(text.substr(pos, sp - pos)));
      pos = sp + 1;
    }
    return w;
  }
  // Greedy longest-token match.
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best = 0;
    SymbolId bestSym = 0;
    for (SymbolId i = 0; i < size(); ++i) {
      const std::string& t = token(i);
      if (t.size() > best && t.size() <= text.size() - pos &&
          text.compare(pos, t.size(), t) == 0) {
        best = t.size();
        bestSym = i;
      }
    }
    if (best == 0)
      throw std::invalid_argument("cannot tokenize '" + std::string(text) +
                                  "' at byte " + std::to_string(pos));
    w.push_back(bestSym);
    pos += best;
  }
  return w;
}

std::string Alphabet::format_word(const Word& w) const {
  bool spaced = std::any_of(tokens().begin(), tokens().end(),
                            [](const std::string& t) { return t.size() > 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (spaced && i > 0) out += ' ';
    out += token(w[i]);
  }
  return out;
}

}  // namespace aarm
