#include "aarm/relation.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <stdexcept>

namespace aarm {

namespace {

std::vector<std::string> pair_tokens(const Alphabet& base) {
  const std::size_t B = base.size();
  std::vector<std::string> toks;
  toks.reserve((B + 1) * (B + 1) - 1);
  auto comp = [&](std::size_t i) -> std::string {
    return i == B ? "_" : base.token(static_cast<SymbolId>(i));
  };
  for (std::size_t l = 0; l <= B; ++l)
    for (std::size_t r = 0; r <= B; ++r) {
      if (l == B && r == B) continue;
      toks.push_back(comp(l) + ":" + comp(r));
    }
  return toks;
}

}  // namespace

PairAlphabet::PairAlphabet(Alphabet base) : base_(std::move(base)) {
  for (const std::string& t : base_.tokens()) {
    if (t == "_" || t.find(':') != std::string::npos)
      throw std::invalid_argument(
          "relation base alphabet may not contain '_' or tokens with ':' (reserved "
          "for convolution pads)");
  }
  pairs_ = Alphabet(pair_tokens(base_));
}

SymbolId PairAlphabet::pair(SymbolId left, SymbolId right) const {
  const SymbolId B = pad();
  if (left > B || right > B || (left == B && right == B))
    throw std::invalid_argument("bad pair components");
  return left * (B + 1) + right;
}

SymbolId PairAlphabet::left(SymbolId pairSym) const { return pairSym / (pad() + 1); }
SymbolId PairAlphabet::right(SymbolId pairSym) const { return pairSym % (pad() + 1); }

Word PairAlphabet::convolve(const Word& x, const Word& y) const {
  Word c;
  const std::size_t n = std::max(x.size(), y.size());
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    c.push_back(pair(i < x.size() ? x[i] : pad(), i < y.size() ? y[i] : pad()));
  return c;
}

std::pair<Word, Word> PairAlphabet::deconvolve(const Word& conv) const {
  Word x, y;
  bool lpad = false, rpad = false;
  for (SymbolId p : conv) {
    SymbolId l = left(p), r = right(p);
    if (l == pad())
      lpad = true;
    else if (lpad)
      throw std::invalid_argument("deconvolve: left pad followed by a symbol");
    else
      x.push_back(l);
    if (r == pad())
      rpad = true;
    else if (rpad)
      throw std::invalid_argument("deconvolve: right pad followed by a symbol");
    else
      y.push_back(r);
  }
  return {std::move(x), std::move(y)};
}

Automaton wf_automaton(const PairAlphabet& pa) {
  // 0 = both tracks live, 1 = left padded, 2 = right padded; all accepting.
  Automaton::Builder b(pa.pairs(), 3, 0);
  for (std::uint32_t s = 0; s < 3; ++s) b.set_accepting(s);
  for (SymbolId p = 0; p < pa.pairs().size(); ++p) {
    bool lp = pa.left_is_pad(p), rp = pa.right_is_pad(p);
    if (!lp && !rp) b.add_transition(0, p, 0);
    if (lp) {
      b.add_transition(0, p, 1);
      b.add_transition(1, p, 1);
    }
    if (rp) {
      b.add_transition(0, p, 2);
      b.add_transition(2, p, 2);
    }
  }
  return std::move(b).build();
}

namespace {

/// Projection of a pair automaton onto one coordinate (pads become ε).
Automaton project(const PairAlphabet& pa, const Automaton& aut, bool right_side) {
  detail::EpsNfa nfa(pa.base());
  for (std::uint32_t q = 0; q < aut.num_states(); ++q) {
    nfa.add_state();
    nfa.accepting[q] = aut.is_accepting(q) ? 1 : 0;
  }
  nfa.start = aut.start();
  for (const Transition& t : aut.transitions()) {
    SymbolId comp = right_side ? pa.right(t.sym) : pa.left(t.sym);
    if (comp == pa.pad())
      nfa.add_eps(t.from, t.to);
    else
      nfa.add_edge(t.from, comp, t.to);
  }
  return trim(nfa.eliminate());
}

struct StructuralBound {
  std::optional<std::uint32_t> bound;
  // A pad transition lying on a cycle, when unbounded.
  std::optional<Transition> cycle_edge;
};

/// Boundedness on the trimmed automaton: bounded iff no cycle carries a pad
/// symbol; the certificate is the longest pad-weighted path.
StructuralBound structural_bound(const PairAlphabet& pa, const Automaton& t) {
  const std::uint32_t n = t.num_states();
  // Tarjan SCC, iterative.
  std::vector<std::uint32_t> idx(n, UINT32_MAX), low(n, 0), comp(n, UINT32_MAX);
  std::vector<char> onstack(n, 0);
  std::vector<std::uint32_t> stk;
  std::uint32_t counter = 0, ncomp = 0;
  struct Frame {
    std::uint32_t v;
    std::size_t edge;
  };
  for (std::uint32_t root = 0; root < n; ++root) {
    if (idx[root] != UINT32_MAX) continue;
    std::vector<Frame> frames{{root, 0}};
    idx[root] = low[root] = counter++;
    stk.push_back(root);
    onstack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto row = t.from(f.v);
      if (f.edge < row.size()) {
        std::uint32_t w = row[f.edge++].to;
        if (idx[w] == UINT32_MAX) {
          idx[w] = low[w] = counter++;
          stk.push_back(w);
          onstack[w] = 1;
          frames.push_back({w, 0});
        } else if (onstack[w]) {
          low[f.v] = std::min(low[f.v], idx[w]);
        }
      } else {
        if (low[f.v] == idx[f.v]) {
          while (true) {
            std::uint32_t w = stk.back();
            stk.pop_back();
            onstack[w] = 0;
            comp[w] = ncomp;
            if (w == f.v) break;
          }
          ++ncomp;
        }
        std::uint32_t v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }

  auto is_pad = [&](SymbolId s) { return pa.left_is_pad(s) || pa.right_is_pad(s); };
  for (const Transition& e : t.transitions())
    if (is_pad(e.sym) && comp[e.from] == comp[e.to]) return {std::nullopt, e};

  // Longest pad-weighted path over the condensation.  Tarjan numbers
  // components in reverse topological order, so iterate components
  // descending.
  std::vector<std::int64_t> dp(ncomp, -1);
  if (n > 0) dp[comp[t.start()]] = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> out(ncomp);
  for (const Transition& e : t.transitions())
    if (comp[e.from] != comp[e.to])
      out[comp[e.from]].push_back({comp[e.to], is_pad(e.sym) ? 1u : 0u});
  for (std::int64_t c = static_cast<std::int64_t>(ncomp) - 1; c >= 0; --c) {
    if (dp[c] < 0) continue;
    for (auto [to, w] : out[c]) dp[to] = std::max(dp[to], dp[c] + w);
  }
  std::int64_t best = 0;
  for (std::uint32_t q = 0; q < n; ++q)
    if (t.is_accepting(q) && dp[comp[q]] >= 0) best = std::max(best, dp[comp[q]]);
  return {static_cast<std::uint32_t>(best), std::nullopt};
}

std::optional<Word> bfs_path(const Automaton& a, std::uint32_t from,
                             const std::vector<char>& goal) {
  std::vector<std::int64_t> parent(a.num_states(), -2);
  std::vector<SymbolId> via(a.num_states(), 0);
  std::deque<std::uint32_t> q{from};
  parent[from] = -1;
  while (!q.empty()) {
    std::uint32_t v = q.front();
    q.pop_front();
    if (goal[v]) {
      Word w;
      for (std::uint32_t s = v; parent[s] >= 0; s = static_cast<std::uint32_t>(parent[s]))
        w.push_back(via[s]);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (const Transition& t : a.from(v))
      if (parent[t.to] == -2) {
        parent[t.to] = v;
        via[t.to] = t.sym;
        q.push_back(t.to);
      }
  }
  return std::nullopt;
}

}  // namespace

AutomaticRelation AutomaticRelation::from_automaton(Alphabet base, const Automaton& aut) {
  PairAlphabet pa(base);
  if (aut.alphabet() != pa.pairs())
    throw std::invalid_argument("relation automaton must range over the pair alphabet");
  Automaton canon = canonical(aut);
  Automaton wf = wf_automaton(pa);
  if (auto sub = is_subset(canon, wf); !sub.holds)
    throw std::invalid_argument(
        "relation language contains an ill-formed convolution word: " +
        pa.pairs().format_word(*sub.counterexample));
  Automaton trimmed = trim(canon);
  StructuralBound sb = structural_bound(pa, trimmed);
  Automaton domain = canonical(project(pa, trimmed, /*right_side=*/false));
  return AutomaticRelation(std::move(pa), std::move(canon), std::move(domain), sb.bound);
}

AutomaticRelation AutomaticRelation::from_pair_regex(Alphabet base, const Regex& re) {
  PairAlphabet pa(base);
  return from_automaton(std::move(base), re.compile(pa.pairs()));
}

BoundednessResult check_bounded(const AutomaticRelation& r) {
  Automaton t = trim(r.automaton());
  StructuralBound sb = structural_bound(r.pair_alphabet(), t);
  if (sb.bound) return {sb.bound, std::nullopt};
  const Transition& e = *sb.cycle_edge;
  std::vector<char> goal(t.num_states(), 0);
  goal[e.from] = 1;
  Word prefix = *bfs_path(t, t.start(), goal);
  Word back = *bfs_path(t, e.to, goal);  // e.to → e.from, possibly empty
  Word cycle{e.sym};
  cycle.insert(cycle.end(), back.begin(), back.end());
  std::vector<char> acc(t.num_states(), 0);
  for (std::uint32_t q = 0; q < t.num_states(); ++q) acc[q] = t.is_accepting(q);
  Word suffix = *bfs_path(t, e.from, acc);
  return {std::nullopt, UnboundedWitness{std::move(prefix), std::move(cycle), std::move(suffix)}};
}

bool related(const AutomaticRelation& r, const Word& x, const Word& y) {
  return accepts(r.automaton(), r.pair_alphabet().convolve(x, y));
}

namespace {

/// Product of a relation with a left- (or right-) side language, projected to
/// the other side.  Returns a trimmed automaton over the base alphabet.
Automaton image_impl(const AutomaticRelation& r, const Automaton& s, bool given_left) {
  const PairAlphabet& pa = r.pair_alphabet();
  if (s.alphabet() != pa.base())
    throw std::invalid_argument("image/preimage: language alphabet mismatch");
  const Automaton& A = r.automaton();
  Automaton ds = s.deterministic() ? s : determinize(s);

  // State: (relation state, language state, language-track padded?).
  std::map<std::tuple<std::uint32_t, std::uint32_t, bool>, std::uint32_t> ids;
  std::vector<std::tuple<std::uint32_t, std::uint32_t, bool>> states;
  detail::EpsNfa nfa(pa.base());
  auto intern = [&](std::uint32_t qa, std::uint32_t qs, bool done) {
    auto [it, fresh] = ids.emplace(std::make_tuple(qa, qs, done),
                                   static_cast<std::uint32_t>(states.size()));
    if (fresh) {
      states.emplace_back(qa, qs, done);
      nfa.add_state();
      nfa.accepting.back() = A.is_accepting(qa) && ds.is_accepting(qs) ? 1 : 0;
    }
    return it->second;
  };
  nfa.start = intern(A.start(), ds.start(), false);
  for (std::uint32_t cur = 0; cur < states.size(); ++cur) {
    auto [qa, qs, done] = states[cur];
    for (const Transition& t : A.from(qa)) {
      SymbolId given = given_left ? pa.left(t.sym) : pa.right(t.sym);
      SymbolId out = given_left ? pa.right(t.sym) : pa.left(t.sym);
      std::uint32_t qs2;
      bool done2;
      if (given == pa.pad()) {
        qs2 = qs;
        done2 = true;
      } else {
        if (done) continue;  // given track resumed after pad: ill-formed
        qs2 = ds.step(qs, given);
        done2 = false;
      }
      std::uint32_t next = intern(t.to, qs2, done2);
      if (out == pa.pad())
        nfa.add_eps(cur, next);
      else
        nfa.add_edge(cur, out, next);
    }
  }
  return trim(nfa.eliminate());
}

}  // namespace

Automaton image(const AutomaticRelation& r, const Automaton& s) {
  return image_impl(r, s, /*given_left=*/true);
}

Automaton preimage(const AutomaticRelation& r, const Automaton& s) {
  return image_impl(r, s, /*given_left=*/false);
}

Automaton image_of_word(const AutomaticRelation& r, const Word& x) {
  return image(r, word_language(r.base(), x));
}

std::vector<Word> successors(const AutomaticRelation& r, const Word& x) {
  if (!r.bound())
    throw std::logic_error("successors: relation carries no boundedness certificate");
  Automaton img = image_of_word(r, x);
  return enumerate_words(img, x.size() + *r.bound());
}

bool has_successor(const AutomaticRelation& r, const Word& x) {
  return accepts(r.domain(), x);
}

namespace {

Alphabet common_base(const AutomaticRelation& a, const AutomaticRelation& b) {
  if (a.base() != b.base()) throw std::invalid_argument("relation base alphabet mismatch");
  return a.base();
}

}  // namespace

AutomaticRelation rel_union(const AutomaticRelation& a, const AutomaticRelation& b) {
  Alphabet base = common_base(a, b);
  return AutomaticRelation::from_automaton(
      base, boolean(BoolOp::Union, a.automaton(), b.automaton()));
}

AutomaticRelation rel_intersection(const AutomaticRelation& a, const AutomaticRelation& b) {
  Alphabet base = common_base(a, b);
  return AutomaticRelation::from_automaton(
      base, boolean(BoolOp::Intersection, a.automaton(), b.automaton()));
}

AutomaticRelation rel_complement(const AutomaticRelation& a) {
  Automaton wf = wf_automaton(a.pair_alphabet());
  return AutomaticRelation::from_automaton(
      a.base(), boolean(BoolOp::Difference, wf, a.automaton()));
}

AutomaticRelation inverse(const AutomaticRelation& a) {
  const PairAlphabet& pa = a.pair_alphabet();
  const Automaton& aut = a.automaton();
  Automaton::Builder b(pa.pairs(), aut.num_states(), aut.start());
  for (std::uint32_t q = 0; q < aut.num_states(); ++q) b.set_accepting(q, aut.is_accepting(q));
  for (const Transition& t : aut.transitions())
    b.add_transition(t.from, pa.pair(pa.right(t.sym), pa.left(t.sym)), t.to);
  return AutomaticRelation::from_automaton(a.base(), std::move(b).build());
}

AutomaticRelation identity_on(const Automaton& lang) {
  PairAlphabet pa(lang.alphabet());
  Automaton::Builder b(pa.pairs(), std::max(lang.num_states(), 1u), lang.start());
  for (std::uint32_t q = 0; q < lang.num_states(); ++q) b.set_accepting(q, lang.is_accepting(q));
  for (const Transition& t : lang.transitions())
    b.add_transition(t.from, pa.pair(t.sym, t.sym), t.to);
  return AutomaticRelation::from_automaton(lang.alphabet(), std::move(b).build());
}

AutomaticRelation product(const Automaton& left, const Automaton& right) {
  if (left.alphabet() != right.alphabet())
    throw std::invalid_argument("product: alphabet mismatch");
  PairAlphabet pa(left.alphabet());
  Automaton dl = determinize(left), dr = determinize(right);
  // Phase: 0 both live, 1 left padded, 2 right padded.
  std::map<std::tuple<std::uint32_t, std::uint32_t, int>, std::uint32_t> ids;
  std::vector<std::tuple<std::uint32_t, std::uint32_t, int>> states;
  std::vector<Transition> trans;
  auto intern = [&](std::uint32_t ql, std::uint32_t qr, int ph) {
    auto [it, fresh] =
        ids.emplace(std::make_tuple(ql, qr, ph), static_cast<std::uint32_t>(states.size()));
    if (fresh) states.emplace_back(ql, qr, ph);
    return it->second;
  };
  intern(dl.start(), dr.start(), 0);
  for (std::uint32_t cur = 0; cur < states.size(); ++cur) {
    auto [ql, qr, ph] = states[cur];
    for (SymbolId l = 0; l <= pa.pad(); ++l)
      for (SymbolId r = 0; r <= pa.pad(); ++r) {
        if (l == pa.pad() && r == pa.pad()) continue;
        if (l == pa.pad() && (ph == 2 || !dl.is_accepting(ql))) continue;
        if (l != pa.pad() && ph == 1) continue;
        if (r == pa.pad() && (ph == 1 || !dr.is_accepting(qr))) continue;
        if (r != pa.pad() && ph == 2) continue;
        int ph2 = l == pa.pad() ? 1 : (r == pa.pad() ? 2 : 0);
        std::uint32_t nl = l == pa.pad() ? ql : dl.step(ql, l);
        std::uint32_t nr = r == pa.pad() ? qr : dr.step(qr, r);
        trans.push_back({cur, pa.pair(l, r), intern(nl, nr, ph2)});
      }
  }
  Automaton::Builder b(pa.pairs(), static_cast<std::uint32_t>(states.size()), 0);
  for (std::uint32_t q = 0; q < states.size(); ++q) {
    auto [ql, qr, ph] = states[q];
    b.set_accepting(q, dl.is_accepting(ql) && dr.is_accepting(qr));
  }
  for (const Transition& t : trans) b.add_transition(t.from, t.sym, t.to);
  return AutomaticRelation::from_automaton(left.alphabet(), std::move(b).build());
}

AutomaticRelation restrict_domain(const AutomaticRelation& r, const Automaton& lang) {
  return rel_intersection(r, product(lang, all_words(r.base())));
}

AutomaticRelation restrict_range(const AutomaticRelation& r, const Automaton& lang) {
  return rel_intersection(r, product(all_words(r.base()), lang));
}

AutomaticRelation compose(const AutomaticRelation& a, const AutomaticRelation& b) {
  Alphabet base = common_base(a, b);
  const PairAlphabet& pa = a.pair_alphabet();
  Automaton A = trim(a.automaton());
  Automaton B = trim(b.automaton());
  const SymbolId PAD = pa.pad();

  // Group edges by middle component: A by right, B by left.
  auto bucket = [&](const Automaton& m, bool by_right) {
    std::vector<std::vector<std::vector<Transition>>> bk(
        m.num_states(), std::vector<std::vector<Transition>>(PAD + 1));
    for (const Transition& t : m.transitions())
      bk[t.from][by_right ? pa.right(t.sym) : pa.left(t.sym)].push_back(t);
    return bk;
  };
  auto bkA = bucket(A, true);
  auto bkB = bucket(B, false);

  // State: (A state | frozen, B state | frozen).  A track freezes when
  // conv(x,y) has ended (x and y both exhausted); symmetrically for B.
  struct Key {
    std::uint32_t qa, qb;
    bool fa, fb;
    auto operator<=>(const Key&) const = default;
  };
  std::map<Key, std::uint32_t> ids;
  std::vector<Key> states;
  detail::EpsNfa prod(pa.pairs());
  auto intern2 = [&](Key k) {
    auto [it, fresh] = ids.emplace(k, static_cast<std::uint32_t>(states.size()));
    if (fresh) {
      states.push_back(k);
      prod.add_state();
      prod.accepting.back() = A.is_accepting(k.qa) && B.is_accepting(k.qb) ? 1 : 0;
    }
    return it->second;
  };
  prod.start = intern2({A.start(), B.start(), false, false});
  for (std::uint32_t cur = 0; cur < states.size(); ++cur) {
    Key k = states[cur];
    if (!k.fa && !k.fb) {
      // Join on the middle symbol.
      for (SymbolId m = 0; m <= PAD; ++m) {
        for (const Transition& ta : bkA[k.qa][m])
          for (const Transition& tb : bkB[k.qb][m]) {
            SymbolId l = pa.left(ta.sym), rr = pa.right(tb.sym);
            std::uint32_t next = intern2({ta.to, tb.to, false, false});
            if (l == PAD && rr == PAD)
              prod.add_eps(cur, next);  // only the middle track is live
            else
              prod.add_edge(cur, pa.pair(l, rr), next);
          }
      }
      // Freeze a track when its convolution word may end here.
      if (A.is_accepting(k.qa)) prod.add_eps(cur, intern2({k.qa, k.qb, true, false}));
      if (B.is_accepting(k.qb)) prod.add_eps(cur, intern2({k.qa, k.qb, false, true}));
    } else if (k.fa && !k.fb) {
      // x and y exhausted; B continues on (pad, z) pairs.
      for (const Transition& tb : bkB[k.qb][PAD]) {
        SymbolId rr = pa.right(tb.sym);
        prod.add_edge(cur, pa.pair(PAD, rr), intern2({k.qa, tb.to, true, false}));
      }
    } else if (!k.fa && k.fb) {
      // y and z exhausted; A continues on (x, pad) pairs.
      for (const Transition& ta : bkA[k.qa][PAD]) {
        SymbolId l = pa.left(ta.sym);
        prod.add_edge(cur, pa.pair(l, PAD), intern2({ta.to, k.qb, false, true}));
      }
    }
  }
  Automaton res = trim(prod.eliminate());
  if (res.num_states() == 1 && res.transitions().empty() && !res.is_accepting(0))
    return AutomaticRelation::from_automaton(base, empty_language(pa.pairs()));
  return AutomaticRelation::from_automaton(base, res);
}

AutomaticRelation rel_concat(const AutomaticRelation& a, const AutomaticRelation& b) {
  Alphabet base = common_base(a, b);
  if (!a.bound())
    throw std::invalid_argument("rel_concat: the first relation must be bounded");
  const std::uint32_t c = *a.bound();
  const PairAlphabet& pa = a.pair_alphabet();
  const SymbolId PAD = pa.pad();
  Automaton A1 = trim(a.automaton());
  Automaton A2 = trim(b.automaton());

  // Multi-step set simulation of A2 for acceptance wrap-ups.
  auto steps2 = [&](std::vector<std::uint32_t> set, SymbolId sym) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t q : set)
      for (const Transition& t : A2.from(q, sym)) next.push_back(t.to);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    return next;
  };
  auto a2_accepts_drain = [&](std::uint32_t q2, const std::vector<SymbolId>& buf,
                              bool buf_is_left) {
    std::vector<std::uint32_t> set{q2};
    for (SymbolId s : buf) {
      set = steps2(set, buf_is_left ? pa.pair(s, PAD) : pa.pair(PAD, s));
      if (set.empty()) return false;
    }
    return std::any_of(set.begin(), set.end(),
                       [&](std::uint32_t q) { return A2.is_accepting(q); });
  };
  auto a2_accepts_word_from_start = [&](const std::vector<SymbolId>& buf, bool buf_is_left) {
    if (A2.num_states() == 0) return false;
    return a2_accepts_drain(A2.start(), buf, buf_is_left);
  };
  // A buffered segment is only worth keeping when A2 can consume it as the
  // upcoming components of one track (the other track unconstrained).
  auto viable = [&](std::uint32_t q2, const std::vector<SymbolId>& buf, bool buf_is_left) {
    std::vector<std::uint32_t> set{q2};
    for (SymbolId s : buf) {
      std::vector<std::uint32_t> next;
      for (std::uint32_t q : set)
        for (const Transition& t : A2.from(q)) {
          SymbolId comp = buf_is_left ? pa.left(t.sym) : pa.right(t.sym);
          if (comp == s) next.push_back(t.to);
        }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (next.empty()) return false;
      set = std::move(next);
    }
    return true;
  };

  // NFA states.  tag: 0 = P1 (both tracks in part one), 1 = P2L (left track
  // ahead, buffering x2), 2 = P2R (right ahead, buffering y2), 3 = S (part
  // two, left ahead by |buf|), 4 = T (part two, right ahead by |buf|).
  struct Key {
    int tag;
    std::uint32_t q;
    std::vector<SymbolId> buf;
    auto operator<=>(const Key&) const = default;
  };
  std::map<Key, std::uint32_t> ids;
  std::vector<Key> states;
  detail::EpsNfa nfa(pa.pairs());
  auto accepting_of = [&](const Key& k) -> bool {
    switch (k.tag) {
      case 0:
        return A1.is_accepting(k.q) && a2_accepts_word_from_start({}, true);
      case 1:  // input ends inside y1: x2 = buf, y2 = ε
        return A1.is_accepting(k.q) && a2_accepts_word_from_start(k.buf, /*left=*/true);
      case 2:
        return A1.is_accepting(k.q) && a2_accepts_word_from_start(k.buf, /*left=*/false);
      case 3:
        return a2_accepts_drain(k.q, k.buf, /*left=*/true);
      case 4:
        return a2_accepts_drain(k.q, k.buf, /*left=*/false);
    }
    return false;
  };
  auto intern = [&](Key k) {
    if ((k.tag == 3 || k.tag == 4) && k.buf.empty()) k.tag = 3;  // merged aligned form
    auto [it, fresh] = ids.emplace(k, static_cast<std::uint32_t>(states.size()));
    if (fresh) {
      states.push_back(it->first);
      nfa.add_state();
      nfa.accepting.back() = accepting_of(it->first) ? 1 : 0;
    }
    return it->second;
  };
  auto a1_steps = [&](std::uint32_t q, SymbolId p) { return A1.from(q, p); };

  if (A1.num_states() == 0 || A2.num_states() == 0)
    return AutomaticRelation::from_automaton(base, empty_language(pa.pairs()));

  nfa.start = intern({0, A1.start(), {}});
  for (std::uint32_t cur = 0; cur < states.size(); ++cur) {
    Key k = states[cur];
    switch (k.tag) {
      case 0: {  // P1
        for (const Transition& t : A1.from(k.q)) {
          if (pa.left_is_pad(t.sym) || pa.right_is_pad(t.sym)) continue;
          nfa.add_edge(cur, t.sym, intern({0, t.to, {}}));
        }
        // Boundary guesses.
        if (A1.is_accepting(k.q)) nfa.add_eps(cur, intern({3, A2.start(), {}}));
        nfa.add_eps(cur, intern({1, k.q, {}}));
        nfa.add_eps(cur, intern({2, k.q, {}}));
        break;
      }
      case 1: {  // P2L: feed A1 (pad, b); push a unless X exhausted
        for (SymbolId bsym = 0; bsym < PAD; ++bsym) {
          for (const Transition& t : a1_steps(k.q, pa.pair(PAD, bsym))) {
            // a != pad: buffer grows.
            if (k.buf.size() < c)
              for (SymbolId asym = 0; asym < PAD; ++asym) {
                Key nk{1, t.to, k.buf};
                nk.buf.push_back(asym);
                if (!viable(A2.start(), nk.buf, /*left=*/true)) continue;
                nfa.add_edge(cur, pa.pair(asym, bsym), intern(std::move(nk)));
              }
            // a == pad: X exhausted.
            nfa.add_edge(cur, pa.pair(PAD, bsym), intern({1, t.to, k.buf}));
          }
        }
        if (A1.is_accepting(k.q)) nfa.add_eps(cur, intern({3, A2.start(), k.buf}));
        break;
      }
      case 2: {  // P2R: feed A1 (a, pad); push b unless Y exhausted
        for (SymbolId asym = 0; asym < PAD; ++asym) {
          for (const Transition& t : a1_steps(k.q, pa.pair(asym, PAD))) {
            if (k.buf.size() < c)
              for (SymbolId bsym = 0; bsym < PAD; ++bsym) {
                Key nk{2, t.to, k.buf};
                nk.buf.push_back(bsym);
                if (!viable(A2.start(), nk.buf, /*left=*/false)) continue;
                nfa.add_edge(cur, pa.pair(asym, bsym), intern(std::move(nk)));
              }
            nfa.add_edge(cur, pa.pair(asym, PAD), intern({2, t.to, k.buf}));
          }
        }
        if (A1.is_accepting(k.q)) nfa.add_eps(cur, intern({4, A2.start(), k.buf}));
        break;
      }
      case 3: {  // S: part two, left ahead by |buf|
        if (k.buf.empty()) {
          for (const Transition& t : A2.from(k.q))
            nfa.add_edge(cur, t.sym, intern({3, t.to, {}}));
          break;
        }
        SymbolId front = k.buf.front();
        std::vector<SymbolId> rest(k.buf.begin() + 1, k.buf.end());
        for (SymbolId bsym = 0; bsym < PAD; ++bsym) {
          for (const Transition& t : A2.from(k.q, pa.pair(front, bsym))) {
            // (a, b): rotate buffer.
            for (SymbolId asym = 0; asym < PAD; ++asym) {
              Key nk{3, t.to, rest};
              nk.buf.push_back(asym);
              if (!viable(t.to, nk.buf, /*left=*/true)) continue;
              nfa.add_edge(cur, pa.pair(asym, bsym), intern(std::move(nk)));
            }
            // (pad, b): X exhausted, buffer shrinks.
            nfa.add_edge(cur, pa.pair(PAD, bsym), intern({3, t.to, rest}));
          }
        }
        // (a, pad): Y exhausted; A2 reads (front, pad).
        for (const Transition& t : A2.from(k.q, pa.pair(front, PAD))) {
          for (SymbolId asym = 0; asym < PAD; ++asym) {
            Key nk{3, t.to, rest};
            nk.buf.push_back(asym);
            if (!viable(t.to, nk.buf, /*left=*/true)) continue;
            nfa.add_edge(cur, pa.pair(asym, PAD), intern(std::move(nk)));
          }
        }
        break;
      }
      case 4: {  // T: right ahead by |buf|
        SymbolId front = k.buf.front();
        std::vector<SymbolId> rest(k.buf.begin() + 1, k.buf.end());
        for (SymbolId asym = 0; asym < PAD; ++asym) {
          for (const Transition& t : A2.from(k.q, pa.pair(asym, front))) {
            for (SymbolId bsym = 0; bsym < PAD; ++bsym) {
              Key nk{4, t.to, rest};
              nk.buf.push_back(bsym);
              if (!viable(t.to, nk.buf, /*left=*/false)) continue;
              nfa.add_edge(cur, pa.pair(asym, bsym), intern(std::move(nk)));
            }
            nfa.add_edge(cur, pa.pair(asym, PAD), intern({4, t.to, rest}));
          }
        }
        for (const Transition& t : A2.from(k.q, pa.pair(PAD, front))) {
          for (SymbolId bsym = 0; bsym < PAD; ++bsym) {
            Key nk{4, t.to, rest};
            nk.buf.push_back(bsym);
            if (!viable(t.to, nk.buf, /*left=*/false)) continue;
            nfa.add_edge(cur, pa.pair(PAD, bsym), intern(std::move(nk)));
          }
        }
        break;
      }
    }
  }
  Automaton res = nfa.eliminate();
  Automaton wf = wf_automaton(pa);
  return AutomaticRelation::from_automaton(base,
                                           boolean(BoolOp::Intersection, res, wf));
}

AutomaticRelation pad_tail(const AutomaticRelation& r, std::string_view junk_token) {
  SymbolId j = r.base().index_of(junk_token);
  Automaton junkStar = Regex::star(Regex::symbol(r.base().token(j))).compile(r.base());
  return rel_concat(r, identity_on(junkStar));
}

AutomaticRelation lift_prefix(const Automaton& prefix_lang, const AutomaticRelation& r) {
  if (prefix_lang.alphabet() != r.base())
    throw std::invalid_argument("lift_prefix: alphabet mismatch");
  return rel_concat(identity_on(prefix_lang), r);
}

AutomaticRelation prepend_symbol(const Alphabet& base, std::string_view sym,
                                 const Automaton& domain) {
  if (domain.alphabet() != base) throw std::invalid_argument("prepend_symbol: alphabet mismatch");
  PairAlphabet pa(base);
  const SymbolId sigma = base.index_of(sym);
  const SymbolId PAD = pa.pad();
  Automaton dd = determinize(domain);
  // conv(x, σx): position 1 is (x1, σ), then (x_{i+1}, x_i), finally (_, x_n).
  // State carries the pending output symbol; the domain DFA tracks x.
  // kind 0 = start, 1 = carrying, 2 = done.
  std::map<std::tuple<int, SymbolId, std::uint32_t>, std::uint32_t> ids;
  std::vector<std::tuple<int, SymbolId, std::uint32_t>> states;
  std::vector<Transition> trans;
  std::vector<char> accepting;
  auto intern = [&](int kind, SymbolId carry, std::uint32_t q) {
    auto [it, fresh] = ids.emplace(std::make_tuple(kind, carry, q),
                                   static_cast<std::uint32_t>(states.size()));
    if (fresh) {
      states.emplace_back(kind, carry, q);
      accepting.push_back(kind == 2 && dd.is_accepting(q) ? 1 : 0);
    }
    return it->second;
  };
  intern(0, 0, dd.start());
  for (std::uint32_t cur = 0; cur < states.size(); ++cur) {
    auto [kind, carry, q] = states[cur];
    if (kind == 2) continue;
    SymbolId expect = kind == 0 ? sigma : carry;
    for (SymbolId a = 0; a < base.size(); ++a)
      trans.push_back({cur, pa.pair(a, expect), intern(1, a, dd.step(q, a))});
    trans.push_back({cur, pa.pair(PAD, expect), intern(2, 0, q)});
  }
  Automaton::Builder b(pa.pairs(), static_cast<std::uint32_t>(states.size()), 0);
  for (std::uint32_t i = 0; i < states.size(); ++i) b.set_accepting(i, accepting[i] != 0);
  for (const Transition& t : trans) b.add_transition(t.from, t.sym, t.to);
  return AutomaticRelation::from_automaton(base, std::move(b).build());
}

}  // namespace aarm
