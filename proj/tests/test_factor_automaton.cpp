#include <doctest.h>

#include "antidict/factor_automaton.hpp"
#include "antidict/suffix_automaton.hpp"
#include "antidict/verify.hpp"
#include "oracles.hpp"

using namespace antidict;
using antidict::testing::failure_by_definition;

TEST_CASE("factor automaton of aabbabb")
{
    const Dfa fa = build_factor_automaton("aabbabb");
    for (const Word& f : factor_set("aabbabb", 7)) CHECK(accepts(fa, f));
    for (const Word& m : {"aaa", "aba", "bbb", "baa", "babba"}) CHECK_FALSE(accepts(fa, m));
    CHECK(enumerate_language(fa, 7) == factor_set("aabbabb", 7));
    CHECK(fa.final_count() == fa.size());
    CHECK(isomorphic(fa, minimize(oracle::linear_position_dfa("aabbabb", Alphabet("ab")))));
}

TEST_CASE("the DAWG is not always minimal")
{
    // In abb, "ab" ends at position 1 and "b" at positions 1 and 2, so the
    // DAWG separates them, yet both can be followed by exactly {e, b}.
    const SuffixAutomaton dawg("abb", Alphabet("ab"));
    CHECK(dawg.size() == 5);
    const Dfa fa = build_factor_automaton("abb");
    CHECK(fa.size() == 4);
    CHECK(isomorphic(fa, minimize(oracle::linear_position_dfa("abb", Alphabet("ab")))));
}

TEST_CASE("small words")
{
    CHECK(build_factor_automaton("a").size() == 2);
    CHECK(build_factor_automaton("aaaa").size() == 5);
    CHECK(build_factor_automaton("ab").size() == 3);
    CHECK(build_factor_automaton("a", Alphabet("ab")).transition_count() == 1);
    CHECK_THROWS_AS(build_factor_automaton(""), InvalidInput);
    CHECK_THROWS_AS(build_factor_automaton("abc", Alphabet("ab")), InvalidInput);
}

TEST_CASE("agrees with the minimized position automaton")
{
    for (const char* symbols : {"ab", "abc"}) {
        const Alphabet alphabet(symbols);
        for (const Word& w : all_words(alphabet, 1, alphabet.size() == 2 ? 10 : 6)) {
            const Dfa fa = build_factor_automaton(w, alphabet);
            REQUIRE_MESSAGE(isomorphic(fa, minimize(oracle::linear_position_dfa(w, alphabet))), w);
            // State bounds for the factor automaton.
            CHECK(fa.size() >= w.size() + 1);
            if (w.size() >= 3) CHECK(fa.size() <= 2 * w.size() - 2);
        }
    }
}

TEST_CASE("failure links")
{
    for (const Word& w : all_words(Alphabet("ab"), 1, 9)) {
        const Dfa fa = build_factor_automaton(w);
        REQUIRE(fa.has_failure());
        CHECK(fa.failure(fa.initial()) == kNoState);
        // Every state is reached by some factor; its failure target is the
        // state of the longest suffix landing elsewhere.
        std::vector<bool> seen(fa.size(), false);
        for (const Word& u : factor_set(w, w.size())) {
            const StateId s = fa.run(u);
            if (seen[static_cast<std::size_t>(s)] || s == fa.initial()) continue;
            seen[static_cast<std::size_t>(s)] = true;
            CHECK_MESSAGE(fa.failure(s) == failure_by_definition(fa, u), w, " ", u);
        }
    }
}

TEST_CASE("failure chains reach the initial state")
{
    const Dfa fa = build_factor_automaton("abaababaabaab");
    for (StateId s = 0; s < static_cast<StateId>(fa.size()); ++s) {
        std::size_t steps = 0;
        StateId t = s;
        while (t != fa.initial() && steps <= fa.size()) {
            t = fa.failure(t);
            ++steps;
        }
        CHECK(t == fa.initial());
    }
}
