#pragma once

#include <string_view>

#include <json.hpp>

#include "antidict/automata.hpp"
#include "antidict/mfw.hpp"

namespace antidict {

// JSON layout shared by tries and automata:
//   {"alphabet": "ab", "states": 5, "initial": 0, "finals": [1, 2],
//    "transitions": [[0, "a", 1], ...], "failure": [[1, 0], ...]}
// A trie's "finals" are its sinks and it has no "failure" entry.
//
// Minimal forbidden word sets:
//   {"word": "aabbabb", "alphabet": "ab", "circular": false, "mfw": ["aaa", ...]}

nlohmann::json to_json(const Dfa& dfa);
nlohmann::json to_json(const Trie& trie);
nlohmann::json to_json(const MfwSet& set);

/// Parsers throw InvalidInput on malformed documents.
Dfa dfa_from_json(const nlohmann::json& j);
Trie trie_from_json(const nlohmann::json& j);
/// "mfw" is required. Without "alphabet", the letters of "mfw" and "word" are
/// used.
MfwSet mfw_from_json(const nlohmann::json& j);

/// Parses text, mapping syntax errors to InvalidInput.
nlohmann::json parse_json(std::string_view text);

}  // namespace antidict
