#include "antidict/serialize.hpp"

namespace antidict {

using nlohmann::json;

namespace {

json transitions_of(const Alphabet& alphabet, std::size_t states, auto&& next)
{
    json edges = json::array();
    for (std::size_t s = 0; s < states; ++s) {
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            const StateId t = next(static_cast<StateId>(s), a);
            if (t != kNoState) edges.push_back({s, std::string(1, alphabet.symbol(a)), t});
        }
    }
    return edges;
}

template <typename T>
T field(const json& j, const char* key)
{
    if (!j.contains(key)) throw InvalidInput(std::string("json: missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("json: bad field \"") + key + "\": " + e.what());
    }
}

struct Edge {
    StateId from;
    char symbol;
    StateId to;
};

std::vector<Edge> edges_from(const json& j)
{
    std::vector<Edge> out;
    if (!j.contains("transitions")) return out;
    if (!j["transitions"].is_array()) throw InvalidInput("json: \"transitions\" must be an array");
    for (const auto& e : j["transitions"]) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_string() ||
            !e[2].is_number_integer() || e[1].get<std::string>().size() != 1) {
            throw InvalidInput("json: transitions must be [from, \"symbol\", to]");
        }
        out.push_back({e[0].get<StateId>(), e[1].get<std::string>()[0], e[2].get<StateId>()});
    }
    return out;
}

}  // namespace

json to_json(const Dfa& dfa)
{
    json j;
    j["alphabet"] = dfa.alphabet().symbols();
    j["states"] = dfa.size();
    j["initial"] = dfa.initial();
    json finals = json::array();
    for (std::size_t s = 0; s < dfa.size(); ++s) {
        if (dfa.is_final(static_cast<StateId>(s))) finals.push_back(s);
    }
    j["finals"] = std::move(finals);
    j["transitions"] = transitions_of(dfa.alphabet(), dfa.size(),
                                      [&dfa](StateId s, std::size_t a) { return dfa.next(s, a); });
    json failure = json::array();
    for (std::size_t s = 0; s < dfa.size() && dfa.has_failure(); ++s) {
        const StateId f = dfa.failure(static_cast<StateId>(s));
        if (f != kNoState) failure.push_back({s, f});
    }
    j["failure"] = std::move(failure);
    return j;
}

json to_json(const Trie& trie)
{
    json j;
    j["alphabet"] = trie.alphabet().symbols();
    j["states"] = trie.size();
    j["initial"] = trie.root();
    json finals = json::array();
    for (std::size_t s = 0; s < trie.size(); ++s) {
        if (trie.is_sink(static_cast<StateId>(s))) finals.push_back(s);
    }
    j["finals"] = std::move(finals);
    j["transitions"] = transitions_of(trie.alphabet(), trie.size(),
                                      [&trie](StateId s, std::size_t a) { return trie.child(s, a); });
    return j;
}

json to_json(const MfwSet& set)
{
    json j;
    j["word"] = set.source_word;
    j["alphabet"] = set.alphabet.symbols();
    j["circular"] = set.source == MfwSet::Source::circular;
    j["mfw"] = json::array();
    for (const Word& w : set.words) j["mfw"].push_back(w);
    return j;
}

Dfa dfa_from_json(const json& j)
{
    if (!j.is_object()) throw InvalidInput("json: automaton must be an object");
    Dfa dfa{Alphabet(field<std::string>(j, "alphabet"))};
    const auto states = field<std::size_t>(j, "states");
    if (states == 0) throw InvalidInput("json: automaton needs at least one state");
    for (std::size_t s = 0; s < states; ++s) dfa.add_state(false);
    auto check = [states](long long s) {
        if (s < 0 || static_cast<std::size_t>(s) >= states) throw InvalidInput("json: state id out of range");
        return static_cast<StateId>(s);
    };
    dfa.set_initial(check(field<long long>(j, "initial")));
    for (long long s : field<std::vector<long long>>(j, "finals")) dfa.set_final(check(s), true);
    for (const Edge& e : edges_from(j)) {
        const int a = dfa.alphabet().rank(e.symbol);
        if (a == Alphabet::kNoSymbol) throw InvalidInput(std::string("json: symbol '") + e.symbol + "' not in alphabet");
        const StateId from = check(e.from);
        if (dfa.next(from, static_cast<std::size_t>(a)) != kNoState) throw InvalidInput("json: nondeterministic transition");
        dfa.set_next(from, static_cast<std::size_t>(a), check(e.to));
    }
    if (j.contains("failure") && !j["failure"].empty()) {
        dfa.enable_failure();
        for (const auto& [from, to] : field<std::vector<std::pair<long long, long long>>>(j, "failure")) {
            dfa.set_failure(check(from), check(to));
        }
    }
    return dfa;
}

Trie trie_from_json(const json& j)
{
    if (!j.is_object()) throw InvalidInput("json: trie must be an object");
    Alphabet alphabet(field<std::string>(j, "alphabet"));
    const auto states = field<std::size_t>(j, "states");
    if (j.contains("initial") && field<long long>(j, "initial") != 0) throw InvalidInput("json: trie root must be state 0");
    std::vector<std::tuple<StateId, char, StateId>> edges;
    for (const Edge& e : edges_from(j)) edges.emplace_back(e.from, e.symbol, e.to);
    std::vector<StateId> sinks;
    for (long long s : field<std::vector<long long>>(j, "finals")) sinks.push_back(static_cast<StateId>(s));
    return Trie::from_parts(std::move(alphabet), states, edges, sinks);
}

MfwSet mfw_from_json(const json& j)
{
    if (!j.is_object()) throw InvalidInput("json: MFW set must be an object");
    const auto words = field<std::vector<std::string>>(j, "mfw");
    MfwSet set{{}, Alphabet("a"), MfwSet::Source::given, {}};
    if (j.contains("word")) set.source_word = field<std::string>(j, "word");
    if (j.contains("circular") && field<bool>(j, "circular")) set.source = MfwSet::Source::circular;
    if (j.contains("alphabet")) {
        set.alphabet = Alphabet(field<std::string>(j, "alphabet"));
    } else {
        std::string letters = set.source_word;
        for (const auto& w : words) letters += w;
        if (letters.empty()) throw InvalidInput("json: cannot infer an alphabet from an empty set");
        set.alphabet = Alphabet::of(letters);
    }
    for (const auto& w : words) {
        if (w.empty()) throw InvalidInput("json: the empty word cannot be forbidden");
        set.alphabet.require_covers(w);
        set.words.insert(w);
    }
    return set;
}

json parse_json(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("json: ") + e.what());
    }
}

}  // namespace antidict
