#ifndef AARM_SERIALIZE_HPP
#define AARM_SERIALIZE_HPP

#include <variant>

// vendored single-header nlohmann/json
#include "json.hpp"

#include "aarm/solver.hpp"

namespace aarm {

nlohmann::json to_json(const Automaton& a);
Automaton automaton_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AutomaticRelation& r);
AutomaticRelation relation_from_json(const nlohmann::json& j);

/// Relation expression inside machine files: an inline automaton over pair
/// tokens, {"regex": ...} over pair tokens, or a combinator tree
/// {"op": ..., "args": [...]}.
AutomaticRelation relation_expr_from_json(const nlohmann::json& j, const Alphabet& base);

using MachineVariant = std::variant<Aarm, Paarm>;
nlohmann::json to_json(const Aarm& m);
nlohmann::json to_json(const Paarm& m);
MachineVariant machine_from_json(const nlohmann::json& j);
MachineVariant load_machine_file(const std::string& path);
const Aarm& base_of(const MachineVariant& m);

/// Line-oriented trace: one record per turn
/// (turn index, player, label, register-before, register-after).
std::string history_to_trace(const Aarm& m, const History& h);

nlohmann::json outcome_to_json(const Aarm& m, const GameOutcome& o);

}  // namespace aarm

#endif
