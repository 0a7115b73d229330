#include <doctest.h>

#include "antidict/factor_automaton.hpp"
#include "antidict/l_automaton.hpp"
#include "antidict/serialize.hpp"

using namespace antidict;
using nlohmann::json;

TEST_CASE("automaton round trip")
{
    for (const Dfa& d : {build_factor_automaton("aabbabb"), circular_factor_dfa(CircularWord("abaab")),
                         l_automaton(build_trie({"aa", "ba"}, Alphabet("ab")))}) {
        const json j = to_json(d);
        const Dfa back = dfa_from_json(parse_json(j.dump()));
        CHECK(same_structure(back, d));
        CHECK(back.has_failure() == d.has_failure());
        for (StateId s = 0; s < static_cast<StateId>(d.size()); ++s) CHECK(back.failure(s) == d.failure(s));
        CHECK(to_json(back) == j);
    }
}

TEST_CASE("automaton layout")
{
    const json j = to_json(build_factor_automaton("a", Alphabet("ab")));
    CHECK(j["alphabet"] == "ab");
    CHECK(j["states"] == 2);
    CHECK(j["initial"] == 0);
    CHECK(j["finals"] == json::array({0, 1}));
    CHECK(j["transitions"] == json::parse(R"([[0, "a", 1]])"));
    CHECK(j["failure"] == json::parse("[[1, 0]]"));
}

TEST_CASE("trie round trip")
{
    const Trie t = build_trie({"bb", "aaa", "aabaa", "babab"}, Alphabet("ab"));
    const json j = to_json(t);
    CHECK_FALSE(j.contains("failure"));
    CHECK(j["finals"].size() == 4);
    const Trie back = trie_from_json(j);
    CHECK(back.words() == t.words());
    CHECK(back.size() == t.size());
    CHECK(to_json(back) == j);
}

TEST_CASE("mfw round trip")
{
    const MfwSet m = mfw_circular(CircularWord("aabbabb"));
    const json j = to_json(m);
    CHECK(j == json::parse(R"({"word": "aabbabb", "alphabet": "ab", "circular": true,
                                "mfw": ["aaa", "aba", "bbb", "aabbaa", "babbab"]})"));
    const MfwSet back = mfw_from_json(j);
    CHECK(back.words == m.words);
    CHECK(back.source == MfwSet::Source::circular);
    CHECK(back.alphabet == m.alphabet);

    const MfwSet inferred = mfw_from_json(json::parse(R"({"mfw": ["aa", "ba"]})"));
    CHECK(inferred.alphabet.symbols() == "ab");
    CHECK(inferred.source == MfwSet::Source::given);
    CHECK(to_json(mfw_linear("ab"))["circular"] == false);
}

TEST_CASE("malformed documents")
{
    CHECK_THROWS_AS(parse_json("{"), InvalidInput);
    CHECK_THROWS_AS(mfw_from_json(json::array()), InvalidInput);
    CHECK_THROWS_AS(mfw_from_json(json::parse(R"({"words": []})")), InvalidInput);
    CHECK_THROWS_AS(mfw_from_json(json::parse(R"({"mfw": []})")), InvalidInput);
    CHECK_THROWS_AS(mfw_from_json(json::parse(R"({"mfw": [""]})")), InvalidInput);
    CHECK_THROWS_AS(mfw_from_json(json::parse(R"({"alphabet": "a", "mfw": ["ab"]})")), InvalidInput);
    CHECK_THROWS_AS(mfw_from_json(json::parse(R"({"mfw": [1]})")), InvalidInput);

    const char* base = R"({"alphabet": "ab", "states": 2, "initial": 0, "finals": [1], "transitions": )";
    CHECK_NOTHROW(dfa_from_json(json::parse(std::string(base) + R"([[0, "a", 1]]})")));
    CHECK_THROWS_AS(dfa_from_json(json::parse(std::string(base) + R"([[0, "a", 2]]})")), InvalidInput);
    CHECK_THROWS_AS(dfa_from_json(json::parse(std::string(base) + R"([[0, "c", 1]]})")), InvalidInput);
    CHECK_THROWS_AS(dfa_from_json(json::parse(std::string(base) + R"([[0, "a", 1], [0, "a", 0]]})")), InvalidInput);
    CHECK_THROWS_AS(dfa_from_json(json::parse(std::string(base) + R"([[0, "ab", 1]]})")), InvalidInput);
    CHECK_THROWS_AS(dfa_from_json(json::parse(R"({"alphabet": "ab", "states": 0, "initial": 0, "finals": [], "transitions": []})")),
                    InvalidInput);

    // Not a tree: two edges into state 1.
    CHECK_THROWS_AS(trie_from_json(json::parse(
                        R"({"alphabet": "ab", "states": 2, "finals": [1], "transitions": [[0, "a", 1], [0, "b", 1]]})")),
                    InvalidInput);
    // Internal sink.
    CHECK_THROWS_AS(trie_from_json(json::parse(
                        R"({"alphabet": "ab", "states": 3, "finals": [1, 2], "transitions": [[0, "a", 1], [1, "b", 2]]})")),
                    InvalidInput);
    CHECK_THROWS_AS(trie_from_json(json::parse(
                        R"({"alphabet": "ab", "states": 2, "initial": 1, "finals": [1], "transitions": [[0, "a", 1]]})")),
                    InvalidInput);
}
