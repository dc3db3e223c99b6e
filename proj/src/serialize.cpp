#include "aarm/serialize.hpp"

#include <fstream>

namespace aarm {

using nlohmann::json;

json to_json(const Automaton& a) {
  json j;
  j["alphabet"] = a.alphabet().tokens();
  j["states"] = a.num_states();
  j["start"] = a.start();
  json acc = json::array();
  for (std::uint32_t q = 0; q < a.num_states(); ++q)
    if (a.is_accepting(q)) acc.push_back(q);
  j["accepting"] = std::move(acc);
  json trans = json::array();
  for (const Transition& t : a.transitions())
    trans.push_back(json::array({t.from, a.alphabet().token(t.sym), t.to}));
  j["transitions"] = std::move(trans);
  j["deterministic"] = a.deterministic();
  return j;
}

Automaton automaton_from_json(const json& j) {
  Alphabet alpha(j.at("alphabet").get<std::vector<std::string>>());
  std::uint32_t states = j.at("states").get<std::uint32_t>();
  std::uint32_t start = j.at("start").get<std::uint32_t>();
  Automaton::Builder b(alpha, states, start);
  for (const auto& q : j.at("accepting")) b.set_accepting(q.get<std::uint32_t>());
  for (const auto& t : j.at("transitions")) {
    if (!t.is_array() || t.size() != 3)
      throw std::invalid_argument("automaton: transition must be [from, token, to]");
    b.add_transition(t[0].get<std::uint32_t>(), alpha.index_of(t[1].get<std::string>()),
                     t[2].get<std::uint32_t>());
  }
  Automaton a = std::move(b).build();
  if (j.contains("deterministic") && j["deterministic"].get<bool>() && !a.deterministic())
    throw std::invalid_argument("automaton: flagged deterministic but is not");
  return a;
}

json to_json(const AutomaticRelation& r) {
  json j;
  j["base_alphabet"] = r.base().tokens();
  j["automaton"] = to_json(r.automaton());
  if (r.bound()) j["bound"] = *r.bound();
  return j;
}

AutomaticRelation relation_from_json(const json& j) {
  Alphabet base(j.at("base_alphabet").get<std::vector<std::string>>());
  AutomaticRelation r =
      AutomaticRelation::from_automaton(base, automaton_from_json(j.at("automaton")));
  if (j.contains("bound")) {
    auto declared = j["bound"].get<std::uint32_t>();
    if (!r.bound() || *r.bound() > declared)
      throw std::invalid_argument("relation: declared bound certificate does not hold");
  }
  return r;
}

namespace {

Automaton language_expr_from_json(const json& j, const Alphabet& base) {
  if (j.is_string()) return Regex::parse(j.get<std::string>()).compile(base);
  if (j.contains("regex")) return Regex::parse(j["regex"].get<std::string>()).compile(base);
  if (j.contains("automaton")) {
    Automaton a = automaton_from_json(j["automaton"]);
    if (a.alphabet() != base) a = with_alphabet(a, base);
    return a;
  }
  throw std::invalid_argument("language expression must be a regex or an automaton");
}

}  // namespace

AutomaticRelation relation_expr_from_json(const json& j, const Alphabet& base) {
  PairAlphabet pa(base);
  if (j.is_string())
    return AutomaticRelation::from_pair_regex(base, Regex::parse(j.get<std::string>()));
  if (j.contains("regex"))
    return AutomaticRelation::from_pair_regex(base,
                                              Regex::parse(j["regex"].get<std::string>()));
  if (j.contains("automaton")) {
    Automaton a = automaton_from_json(j["automaton"]);
    if (a.alphabet() != pa.pairs()) a = with_alphabet(a, pa.pairs());
    return AutomaticRelation::from_automaton(base, a);
  }
  if (j.contains("op")) {
    const std::string op = j["op"].get<std::string>();
    const json& args = j.at("args");
    auto rel = [&](std::size_t i) { return relation_expr_from_json(args.at(i), base); };
    auto lang = [&](std::size_t i) { return language_expr_from_json(args.at(i), base); };
    if (op == "union") return rel_union(rel(0), rel(1));
    if (op == "intersection") return rel_intersection(rel(0), rel(1));
    if (op == "complement") return rel_complement(rel(0));
    if (op == "compose") return compose(rel(0), rel(1));
    if (op == "inverse") return inverse(rel(0));
    if (op == "identity_on") return identity_on(lang(0));
    if (op == "product") return product(lang(0), lang(1));
    if (op == "restrict_domain") return restrict_domain(rel(0), lang(1));
    if (op == "restrict_range") return restrict_range(rel(0), lang(1));
    throw std::invalid_argument("unknown relation combinator '" + op + "'");
  }
  throw std::invalid_argument("relation expression must be an automaton, regex or combinator");
}

namespace {

json instructions_to_json(const std::vector<Instruction>& list) {
  json arr = json::array();
  for (const Instruction& i : list) {
    json e;
    e["label"] = i.label;
    e["relation"] = json{{"automaton", to_json(i.relation.automaton())}};
    arr.push_back(std::move(e));
  }
  return arr;
}

std::vector<Instruction> instructions_from_json(const json& arr, const Alphabet& base) {
  std::vector<Instruction> out;
  for (const auto& e : arr)
    out.push_back({e.at("label").get<std::string>(),
                   relation_expr_from_json(e.at("relation"), base)});
  return out;
}

}  // namespace

json to_json(const Aarm& m) {
  json j;
  j["register_alphabet"] = m.gamma().tokens();
  j["input_alphabet"] = m.sigma().tokens();
  j["anke"] = instructions_to_json(m.anke());
  j["boris"] = instructions_to_json(m.boris());
  return j;
}

json to_json(const Paarm& m) {
  json j = to_json(m.base);
  j["pad_symbol"] = m.pad_symbol;
  j["poly"] = m.poly;
  return j;
}

MachineVariant machine_from_json(const json& j) {
  Alphabet gamma(j.at("register_alphabet").get<std::vector<std::string>>());
  Alphabet sigma(j.at("input_alphabet").get<std::vector<std::string>>());
  Aarm base(gamma, sigma, instructions_from_json(j.at("anke"), gamma),
            instructions_from_json(j.at("boris"), gamma));
  if (j.contains("pad_symbol") || j.contains("poly")) {
    Paarm pm{std::move(base), j.at("pad_symbol").get<std::string>(),
             j.at("poly").get<std::vector<std::uint64_t>>()};
    return pm;
  }
  return base;
}

MachineVariant load_machine_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read machine file '" + path + "'");
  json j = json::parse(in);
  return machine_from_json(j);
}

const Aarm& base_of(const MachineVariant& m) {
  if (std::holds_alternative<Aarm>(m)) return std::get<Aarm>(m);
  return std::get<Paarm>(m).base;
}

std::string history_to_trace(const Aarm& m, const History& h) {
  std::string out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    out += std::to_string(i + 1);
    out += '\t';
    out += (i % 2 == 0) ? "Anke" : "Boris";
    out += '\t';
    out += h[i].label;
    out += '\t';
    out += m.gamma().format_word(h[i].before);
    out += '\t';
    out += m.gamma().format_word(h[i].after);
    out += '\n';
  }
  return out;
}

json outcome_to_json(const Aarm& m, const GameOutcome& o) {
  json j;
  j["verdict"] = verdict_name(o.verdict);
  if (o.verdict != Verdict::Undetermined) j["turns"] = o.turns;
  j["empty_history"] = o.empty_history;
  json pv = json::array();
  for (std::size_t i = 0; i < o.principal_variation.size(); ++i) {
    const Configuration& c = o.principal_variation[i];
    pv.push_back(json{{"turn", i + 1},
                      {"player", i % 2 == 0 ? "Anke" : "Boris"},
                      {"label", c.label},
                      {"before", m.gamma().format_word(c.before)},
                      {"after", m.gamma().format_word(c.after)}});
  }
  j["principal_variation"] = std::move(pv);
  return j;
}

}  // namespace aarm
