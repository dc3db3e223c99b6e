#include "aarm/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace aarm {

namespace {

void index_rows(const std::vector<Transition>& trans, std::uint32_t n,
                std::vector<std::uint32_t>& row) {
  row.assign(n + 1, 0);
  for (const Transition& t : trans) row[t.from + 1]++;
  for (std::uint32_t s = 0; s < n; ++s) row[s + 1] += row[s];
}

bool compute_det(const std::vector<Transition>& trans, std::uint32_t n,
                 std::size_t nsym) {
  if (nsym == 0) return trans.empty();
  // Complete and single-valued: exactly one edge per (state, symbol).
  if (trans.size() != static_cast<std::size_t>(n) * nsym) return false;
  std::size_t i = 0;
  for (std::uint32_t s = 0; s < n; ++s)
    for (SymbolId a = 0; a < nsym; ++a, ++i)
      if (trans[i].from != s || trans[i].sym != a) return false;
  return true;
}

}  // namespace

Automaton::Builder::Builder(Alphabet alpha, std::uint32_t num_states, std::uint32_t start)
    : alpha_(std::move(alpha)), start_(start), accepting_(num_states, 0) {
  if (num_states == 0) throw std::invalid_argument("automaton needs at least one state");
  if (start >= num_states) throw std::invalid_argument("start state out of range");
}

std::uint32_t Automaton::Builder::add_state() {
  accepting_.push_back(0);
  return static_cast<std::uint32_t>(accepting_.size() - 1);
}

void Automaton::Builder::set_accepting(std::uint32_t s, bool acc) {
  accepting_.at(s) = acc ? 1 : 0;
}

void Automaton::Builder::add_transition(std::uint32_t from, SymbolId sym, std::uint32_t to) {
  if (from >= accepting_.size() || to >= accepting_.size())
    throw std::invalid_argument("transition state out of range");
  if (sym >= alpha_.size())
    throw std::invalid_argument("transition symbol out of range");
  trans_.push_back({from, sym, to});
}

Automaton Automaton::Builder::build() && {
  std::sort(trans_.begin(), trans_.end());
  trans_.erase(std::unique(trans_.begin(), trans_.end()), trans_.end());
  Automaton a;
  a.alpha_ = std::move(alpha_);
  a.start_ = start_;
  a.accepting_ = std::move(accepting_);
  a.trans_ = std::move(trans_);
  index_rows(a.trans_, a.num_states(), a.row_);
  a.det_ = compute_det(a.trans_, a.num_states(), a.alpha_.size());
  return a;
}

std::span<const Transition> Automaton::from(std::uint32_t state) const {
  return {trans_.data() + row_[state], trans_.data() + row_[state + 1]};
}

std::span<const Transition> Automaton::from(std::uint32_t state, SymbolId sym) const {
  auto row = from(state);
  auto lo = std::lower_bound(row.begin(), row.end(), sym,
                             [](const Transition& t, SymbolId s) { return t.sym < s; });
  auto hi = std::upper_bound(row.begin(), row.end(), sym,
                             [](SymbolId s, const Transition& t) { return s < t.sym; });
  return {lo, hi};
}

std::uint32_t Automaton::step(std::uint32_t state, SymbolId sym) const {
  if (!det_) throw std::logic_error("step() requires a deterministic automaton");
  return trans_[static_cast<std::size_t>(state) * alpha_.size() + sym].to;
}

bool Automaton::operator==(const Automaton& o) const {
  return start_ == o.start_ && accepting_ == o.accepting_ && trans_ == o.trans_ &&
         alpha_ == o.alpha_;
}

Automaton empty_language(const Alphabet& a) {
  return Automaton::Builder(a, 1, 0).build();
}

Automaton word_language(const Alphabet& a, const Word& w) {
  Automaton::Builder b(a, static_cast<std::uint32_t>(w.size()) + 1, 0);
  for (std::uint32_t i = 0; i < w.size(); ++i) b.add_transition(i, w[i], i + 1);
  b.set_accepting(static_cast<std::uint32_t>(w.size()));
  return std::move(b).build();
}

Automaton all_words(const Alphabet& a) {
  Automaton::Builder b(a, 1, 0);
  b.set_accepting(0);
  for (SymbolId s = 0; s < a.size(); ++s) b.add_transition(0, s, 0);
  return std::move(b).build();
}

bool accepts(const Automaton& a, const Word& w) {
  for (SymbolId s : w)
    if (s >= a.alphabet().size())
      throw std::invalid_argument("accepts: symbol outside alphabet");
  if (a.deterministic()) {
    std::uint32_t q = a.start();
    for (SymbolId s : w) q = a.step(q, s);
    return a.is_accepting(q);
  }
  std::vector<char> cur(a.num_states(), 0), next;
  cur[a.start()] = 1;
  for (SymbolId s : w) {
    next.assign(a.num_states(), 0);
    bool any = false;
    for (std::uint32_t q = 0; q < a.num_states(); ++q)
      if (cur[q])
        for (const Transition& t : a.from(q, s)) next[t.to] = 1, any = true;
    if (!any) return false;
    cur.swap(next);
  }
  for (std::uint32_t q = 0; q < a.num_states(); ++q)
    if (cur[q] && a.is_accepting(q)) return true;
  return false;
}

bool is_empty(const Automaton& a) { return !shortest_witness(a).has_value(); }

std::optional<Word> shortest_witness(const Automaton& a) {
  // BFS with symbols in alphabet order: the first accepting state discovered
  // carries the length-lex minimal accepted word.
  std::vector<std::int64_t> parent(a.num_states(), -1);
  std::vector<SymbolId> via(a.num_states(), 0);
  std::vector<char> seen(a.num_states(), 0);
  std::deque<std::uint32_t> queue;
  seen[a.start()] = 1;
  queue.push_back(a.start());
  std::optional<std::uint32_t> hit;
  if (a.is_accepting(a.start())) hit = a.start();
  while (!hit && !queue.empty()) {
    std::uint32_t q = queue.front();
    queue.pop_front();
    for (const Transition& t : a.from(q)) {
      if (seen[t.to]) continue;
      seen[t.to] = 1;
      parent[t.to] = q;
      via[t.to] = t.sym;
      if (a.is_accepting(t.to)) {
        hit = t.to;
        break;
      }
      queue.push_back(t.to);
    }
  }
  if (!hit) return std::nullopt;
  Word w;
  for (std::uint32_t q = *hit; parent[q] >= 0; q = static_cast<std::uint32_t>(parent[q]))
    w.push_back(via[q]);
  std::reverse(w.begin(), w.end());
  return w;
}

Automaton determinize(const Automaton& a) {
  const std::size_t nsym = a.alphabet().size();
  std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
  std::vector<std::vector<std::uint32_t>> subsets;
  std::vector<char> accepting;
  auto intern = [&](std::vector<std::uint32_t> subset) {
    auto [it, fresh] = ids.emplace(std::move(subset), static_cast<std::uint32_t>(subsets.size()));
    if (fresh) {
      subsets.push_back(it->first);
      bool acc = std::any_of(it->first.begin(), it->first.end(),
                             [&](std::uint32_t q) { return a.is_accepting(q); });
      accepting.push_back(acc ? 1 : 0);
    }
    return it->second;
  };
  std::vector<Transition> trans;
  std::uint32_t startId = intern({a.start()});
  for (std::uint32_t cur = 0; cur < subsets.size(); ++cur) {
    for (SymbolId s = 0; s < nsym; ++s) {
      std::vector<std::uint32_t> next;
      for (std::uint32_t q : subsets[cur])
        for (const Transition& t : a.from(q, s)) next.push_back(t.to);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      trans.push_back({cur, s, intern(std::move(next))});
    }
  }
  Automaton::Builder b(a.alphabet(), static_cast<std::uint32_t>(subsets.size()), startId);
  for (std::uint32_t q = 0; q < subsets.size(); ++q) b.set_accepting(q, accepting[q] != 0);
  for (const Transition& t : trans) b.add_transition(t.from, t.sym, t.to);
  return std::move(b).build();
}

namespace {

// Canonical renumbering: BFS from the start, exploring symbols in alphabet
// order.  Assumes a complete DFA where every state is reachable.
Automaton bfs_renumber(const Automaton& a) {
  std::vector<std::uint32_t> order(a.num_states(), UINT32_MAX);
  std::vector<std::uint32_t> bfs;
  order[a.start()] = 0;
  bfs.push_back(a.start());
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (const Transition& t : a.from(bfs[i]))
      if (order[t.to] == UINT32_MAX) {
        order[t.to] = static_cast<std::uint32_t>(bfs.size());
        bfs.push_back(t.to);
      }
  Automaton::Builder b(a.alphabet(), static_cast<std::uint32_t>(bfs.size()), 0);
  for (std::uint32_t q : bfs) {
    b.set_accepting(order[q], a.is_accepting(q));
    for (const Transition& t : a.from(q)) b.add_transition(order[q], t.sym, order[t.to]);
  }
  return std::move(b).build();
}

}  // namespace

Automaton minimize(const Automaton& a) {
  if (!a.deterministic())
    throw std::invalid_argument("minimize: input must be deterministic and complete");
  const std::uint32_t n = a.num_states();
  const std::size_t nsym = a.alphabet().size();

  // Drop unreachable states first (Hopcroft assumes all states matter).
  std::vector<char> reach(n, 0);
  std::vector<std::uint32_t> stack{a.start()};
  reach[a.start()] = 1;
  while (!stack.empty()) {
    std::uint32_t q = stack.back();
    stack.pop_back();
    for (const Transition& t : a.from(q))
      if (!reach[t.to]) reach[t.to] = 1, stack.push_back(t.to);
  }
  std::vector<std::uint32_t> remap(n, UINT32_MAX);
  std::vector<std::uint32_t> states;
  for (std::uint32_t q = 0; q < n; ++q)
    if (reach[q]) remap[q] = static_cast<std::uint32_t>(states.size()), states.push_back(q);
  const std::uint32_t m = static_cast<std::uint32_t>(states.size());

  // Reverse edges per symbol.
  std::vector<std::vector<std::vector<std::uint32_t>>> rev(
      nsym, std::vector<std::vector<std::uint32_t>>(m));
  for (std::uint32_t i = 0; i < m; ++i)
    for (const Transition& t : a.from(states[i])) rev[t.sym][remap[t.to]].push_back(i);

  // Hopcroft partition refinement.
  std::vector<std::uint32_t> block(m, 0);
  std::vector<std::vector<std::uint32_t>> members(2);
  for (std::uint32_t i = 0; i < m; ++i) {
    block[i] = a.is_accepting(states[i]) ? 1 : 0;
    members[block[i]].push_back(i);
  }
  if (members[1].empty() || members[0].empty()) {
    std::uint32_t keep = members[0].empty() ? 1 : 0;
    members = {std::move(members[keep])};
    for (std::uint32_t i = 0; i < m; ++i) block[i] = 0;
  }
  std::set<std::pair<std::uint32_t, SymbolId>> worklist;
  for (SymbolId s = 0; s < nsym; ++s)
    for (std::uint32_t blk = 0; blk < members.size(); ++blk) worklist.insert({blk, s});

  std::vector<std::uint32_t> touched;                 // blocks touched this round
  std::vector<std::vector<std::uint32_t>> splitter;   // per-block marked members
  splitter.resize(members.size());
  while (!worklist.empty()) {
    auto [blk, sym] = *worklist.begin();
    worklist.erase(worklist.begin());
    // Mark predecessors of `blk` under `sym`.
    touched.clear();
    std::vector<std::uint32_t> target = members[blk];  // copy: members may change
    for (std::uint32_t q : target)
      for (std::uint32_t p : rev[sym][q]) {
        std::uint32_t pb = block[p];
        if (splitter[pb].empty()) touched.push_back(pb);
        splitter[pb].push_back(p);
      }
    for (std::uint32_t pb : touched) {
      std::vector<std::uint32_t> marked = std::move(splitter[pb]);
      splitter[pb].clear();
      std::sort(marked.begin(), marked.end());
      marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
      if (marked.size() == members[pb].size()) continue;
      // Split pb into marked / unmarked.
      std::uint32_t nb = static_cast<std::uint32_t>(members.size());
      std::vector<std::uint32_t> rest;
      {
        std::vector<char> is_marked(m, 0);
        for (std::uint32_t q : marked) is_marked[q] = 1;
        for (std::uint32_t q : members[pb])
          if (!is_marked[q]) rest.push_back(q);
      }
      members[pb] = std::move(marked);
      members.push_back(std::move(rest));
      splitter.emplace_back();
      for (std::uint32_t q : members[nb]) block[q] = nb;
      for (SymbolId s = 0; s < nsym; ++s) {
        if (worklist.count({pb, s})) {
          worklist.insert({nb, s});
        } else {
          // Add the smaller half.
          worklist.insert(members[pb].size() <= members[nb].size()
                              ? std::make_pair(pb, s)
                              : std::make_pair(nb, s));
        }
      }
    }
  }

  // Quotient automaton.
  std::uint32_t nb = static_cast<std::uint32_t>(members.size());
  Automaton::Builder b(a.alphabet(), nb, block[remap[a.start()]]);
  for (std::uint32_t blk = 0; blk < nb; ++blk) {
    std::uint32_t repr = states[members[blk].front()];
    b.set_accepting(blk, a.is_accepting(repr));
    for (const Transition& t : a.from(repr)) b.add_transition(blk, t.sym, block[remap[t.to]]);
  }
  return bfs_renumber(std::move(b).build());
}

Automaton canonical(const Automaton& a) {
  return a.deterministic() ? minimize(a) : minimize(determinize(a));
}

Automaton boolean(BoolOp op, const Automaton& a0, const Automaton& b0) {
  if (a0.alphabet() != b0.alphabet())
    throw std::invalid_argument("boolean: alphabet mismatch");
  Automaton a = a0.deterministic() ? a0 : determinize(a0);
  Automaton b = b0.deterministic() ? b0 : determinize(b0);
  const std::size_t nsym = a.alphabet().size();
  auto accept = [&](bool x, bool y) {
    switch (op) {
      case BoolOp::Union: return x || y;
      case BoolOp::Intersection: return x && y;
      case BoolOp::Difference: return x && !y;
    }
    return false;
  };
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> ids;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  auto intern = [&](std::uint32_t x, std::uint32_t y) {
    auto [it, fresh] = ids.emplace(std::make_pair(x, y),
                                   static_cast<std::uint32_t>(pairs.size()));
    if (fresh) pairs.emplace_back(x, y);
    return it->second;
  };
  std::vector<Transition> trans;
  intern(a.start(), b.start());
  for (std::uint32_t cur = 0; cur < pairs.size(); ++cur) {
    auto [x, y] = pairs[cur];
    for (SymbolId s = 0; s < nsym; ++s)
      trans.push_back({cur, s, intern(a.step(x, s), b.step(y, s))});
  }
  Automaton::Builder bb(a.alphabet(), static_cast<std::uint32_t>(pairs.size()), 0);
  for (std::uint32_t q = 0; q < pairs.size(); ++q)
    bb.set_accepting(q, accept(a.is_accepting(pairs[q].first), b.is_accepting(pairs[q].second)));
  for (const Transition& t : trans) bb.add_transition(t.from, t.sym, t.to);
  return std::move(bb).build();
}

Automaton complement(const Automaton& a0) {
  Automaton a = a0.deterministic() ? a0 : determinize(a0);
  Automaton::Builder b(a.alphabet(), a.num_states(), a.start());
  for (std::uint32_t q = 0; q < a.num_states(); ++q) b.set_accepting(q, !a.is_accepting(q));
  for (const Transition& t : a.transitions()) b.add_transition(t.from, t.sym, t.to);
  return std::move(b).build();
}

SubsetResult is_subset(const Automaton& a, const Automaton& b) {
  if (a.alphabet() != b.alphabet())
    throw std::invalid_argument("is_subset: alphabet mismatch");
  Automaton gap = boolean(BoolOp::Difference, a, b);
  auto w = shortest_witness(gap);
  if (w) return {false, std::move(w)};
  return {true, std::nullopt};
}

bool equal_language(const Automaton& a, const Automaton& b) {
  return canonical(a) == canonical(b);
}

bool agree_up_to(const Automaton& a, const Automaton& b, std::size_t max_len) {
  if (a.alphabet() != b.alphabet())
    throw std::invalid_argument("agree_up_to: alphabet mismatch");
  Automaton da = a.deterministic() ? a : determinize(a);
  Automaton db = b.deterministic() ? b : determinize(b);
  const std::size_t nsym = da.alphabet().size();
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> layer{{da.start(), db.start()}}, next;
  seen.insert(layer[0]);
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (auto [x, y] : layer)
      if (da.is_accepting(x) != db.is_accepting(y)) return false;
    if (len == max_len) break;
    next.clear();
    for (auto [x, y] : layer)
      for (SymbolId s = 0; s < nsym; ++s) {
        auto p = std::make_pair(da.step(x, s), db.step(y, s));
        if (seen.insert(p).second) next.push_back(p);
      }
    if (next.empty()) break;  // no new states: all residuals already checked
    layer.swap(next);
  }
  return true;
}

std::vector<Word> enumerate_words(const Automaton& a, std::size_t max_len) {
  // Distance from each state to acceptance (∞ when co-unreachable).
  const std::uint32_t INF = UINT32_MAX;
  std::vector<std::uint32_t> dist(a.num_states(), INF);
  {
    std::vector<std::vector<std::uint32_t>> rev(a.num_states());
    for (const Transition& t : a.transitions()) rev[t.to].push_back(t.from);
    std::deque<std::uint32_t> q;
    for (std::uint32_t s = 0; s < a.num_states(); ++s)
      if (a.is_accepting(s)) dist[s] = 0, q.push_back(s);
    while (!q.empty()) {
      std::uint32_t s = q.front();
      q.pop_front();
      for (std::uint32_t p : rev[s])
        if (dist[p] == INF) dist[p] = dist[s] + 1, q.push_back(p);
    }
  }
  auto set_dist = [&](const std::vector<std::uint32_t>& set) {
    std::uint32_t d = INF;
    for (std::uint32_t s : set) d = std::min(d, dist[s]);
    return d;
  };

  std::vector<Word> out;
  struct Entry {
    std::vector<std::uint32_t> states;
    Word word;
  };
  std::vector<Entry> layer, next;
  layer.push_back({{a.start()}, {}});
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (const Entry& e : layer)
      if (std::any_of(e.states.begin(), e.states.end(),
                      [&](std::uint32_t s) { return a.is_accepting(s); }))
        out.push_back(e.word);
    if (len == max_len) break;
    next.clear();
    std::size_t remaining = max_len - len;
    for (const Entry& e : layer)
      for (SymbolId s = 0; s < a.alphabet().size(); ++s) {
        std::vector<std::uint32_t> succ;
        for (std::uint32_t q : e.states)
          for (const Transition& t : a.from(q, s)) succ.push_back(t.to);
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
        if (succ.empty() || set_dist(succ) > remaining - 1) continue;
        Word w = e.word;
        w.push_back(s);
        next.push_back({std::move(succ), std::move(w)});
      }
    layer.swap(next);
    if (layer.empty()) break;
  }
  return out;
}

Automaton trim(const Automaton& a) {
  std::vector<char> reach(a.num_states(), 0), coreach(a.num_states(), 0);
  std::vector<std::uint32_t> stack{a.start()};
  reach[a.start()] = 1;
  while (!stack.empty()) {
    std::uint32_t q = stack.back();
    stack.pop_back();
    for (const Transition& t : a.from(q))
      if (!reach[t.to]) reach[t.to] = 1, stack.push_back(t.to);
  }
  std::vector<std::vector<std::uint32_t>> rev(a.num_states());
  for (const Transition& t : a.transitions()) rev[t.to].push_back(t.from);
  for (std::uint32_t q = 0; q < a.num_states(); ++q)
    if (a.is_accepting(q)) coreach[q] = 1, stack.push_back(q);
  while (!stack.empty()) {
    std::uint32_t q = stack.back();
    stack.pop_back();
    for (std::uint32_t p : rev[q])
      if (!coreach[p]) coreach[p] = 1, stack.push_back(p);
  }
  std::vector<std::uint32_t> remap(a.num_states(), UINT32_MAX);
  std::uint32_t m = 0;
  for (std::uint32_t q = 0; q < a.num_states(); ++q)
    if (reach[q] && coreach[q]) remap[q] = m++;
  if (remap[a.start()] == UINT32_MAX) return empty_language(a.alphabet());
  Automaton::Builder b(a.alphabet(), m, remap[a.start()]);
  for (std::uint32_t q = 0; q < a.num_states(); ++q) {
    if (remap[q] == UINT32_MAX) continue;
    b.set_accepting(remap[q], a.is_accepting(q));
    for (const Transition& t : a.from(q))
      if (remap[t.to] != UINT32_MAX) b.add_transition(remap[q], t.sym, remap[t.to]);
  }
  return std::move(b).build();
}

Automaton with_alphabet(const Automaton& a, const Alphabet& bigger) {
  if (!a.alphabet().subset_of(bigger))
    throw std::invalid_argument("with_alphabet: target alphabet must contain the source");
  std::vector<SymbolId> map(a.alphabet().size());
  for (SymbolId s = 0; s < a.alphabet().size(); ++s)
    map[s] = bigger.index_of(a.alphabet().token(s));
  Automaton::Builder b(bigger, a.num_states(), a.start());
  for (std::uint32_t q = 0; q < a.num_states(); ++q) b.set_accepting(q, a.is_accepting(q));
  for (const Transition& t : a.transitions()) b.add_transition(t.from, map[t.sym], t.to);
  return std::move(b).build();
}

std::string to_dot(const Automaton& a, const std::string& name) {
  std::string out = "digraph " + name + " {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (std::uint32_t q = 0; q < a.num_states(); ++q) {
    out += "  q" + std::to_string(q) + " [shape=" +
           (a.is_accepting(q) ? std::string("doublecircle") : std::string("circle")) +
           ", label=\"q" + std::to_string(q) + "\"];\n";
  }
  out += "  __start -> q" + std::to_string(a.start()) + ";\n";
  for (const Transition& t : a.transitions()) {
    std::string lbl = a.alphabet().token(t.sym);
    std::string esc;
    for (char c : lbl) {
      if (c == '"' || c == '\\') esc += '\\';
      esc += c;
    }
    out += "  q" + std::to_string(t.from) + " -> q" + std::to_string(t.to) + " [label=\"" +
           esc + "\"];\n";
  }
  out += "}\n";
  return out;
}

namespace detail {

std::uint32_t EpsNfa::add_state() {
  accepting.push_back(0);
  return n++;
}

Automaton EpsNfa::eliminate() const {
  // ε-closures.
  std::vector<std::vector<std::uint32_t>> epsAdj(n);
  for (auto [f, t] : eps) epsAdj[f].push_back(t);
  std::vector<std::vector<std::uint32_t>> closure(n);
  for (std::uint32_t s = 0; s < n; ++s) {
    std::vector<char> seen(n, 0);
    std::vector<std::uint32_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      std::uint32_t q = stack.back();
      stack.pop_back();
      closure[s].push_back(q);
      for (std::uint32_t t : epsAdj[q])
        if (!seen[t]) seen[t] = 1, stack.push_back(t);
    }
    std::sort(closure[s].begin(), closure[s].end());
  }
  std::vector<std::vector<Transition>> bySrc(n);
  for (const Transition& t : edges) bySrc[t.from].push_back(t);

  Automaton::Builder b(alpha, n == 0 ? 1 : n, start);
  if (n == 0) return std::move(b).build();
  for (std::uint32_t s = 0; s < n; ++s) {
    bool acc = false;
    for (std::uint32_t q : closure[s]) acc = acc || accepting[q];
    b.set_accepting(s, acc);
    for (std::uint32_t q : closure[s])
      for (const Transition& t : bySrc[q])
        for (std::uint32_t r : closure[t.to]) b.add_transition(s, t.sym, r);
  }
  return std::move(b).build();
}

}  // namespace detail
}  // namespace aarm
