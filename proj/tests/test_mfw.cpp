#include <doctest.h>

#include "antidict/mfw.hpp"
#include "antidict/verify.hpp"
#include "oracles.hpp"

using namespace antidict;
using antidict::testing::mfw_exhaustive;

TEST_CASE("linear fixtures")
{
    CHECK(mfw_linear("aabbabb", Alphabet("ab")).words == WordSet{"aaa", "aba", "baa", "bbb", "babba"});
    CHECK(mfw_linear("a", Alphabet("ab")).words == WordSet{"b", "aa"});
    CHECK(mfw_linear("a").words == WordSet{"aa"});
    CHECK(mfw_linear_bruteforce("a", Alphabet("a")).words == WordSet{"aa"});
    CHECK(mfw_linear_bruteforce("aabbabb", Alphabet("ab")).words == mfw_linear("aabbabb").words);

    const MfwSet m = mfw_linear("aabbabb");
    CHECK(m.source == MfwSet::Source::linear);
    CHECK(m.source_word == "aabbabb");
    CHECK(m.max_length() == 5);
    CHECK(m.contains("babba"));

    CHECK_THROWS_AS(mfw_linear("", Alphabet("ab")), InvalidInput);
    CHECK_THROWS_AS(mfw_linear("abc", Alphabet("ab")), InvalidInput);
    CHECK_THROWS_AS(mfw_linear_bruteforce(std::string(kOracleMaxWordLength + 1, 'a'), Alphabet("a")),
                    GuardExceeded);
}

TEST_CASE("ab^n a contains every ab^i a below n")
{
    for (std::size_t n = 1; n <= 10; ++n) {
        const Word w = "a" + std::string(n, 'b') + "a";
        const MfwSet m = mfw_linear(w);
        for (std::size_t i = 0; i < n; ++i) CHECK(m.contains("a" + std::string(i, 'b') + "a"));
    }
}

TEST_CASE("linear agrees with the definition")
{
    for (const char* symbols : {"ab", "abc"}) {
        const Alphabet alphabet(symbols);
        for (const Word& w : all_words(alphabet, 1, alphabet.size() == 2 ? 9 : 5)) {
            const MfwSet m = mfw_linear(w, alphabet);
            REQUIRE_MESSAGE(m.words == mfw_exhaustive(w, alphabet), w);
            CHECK(mfw_linear_bruteforce(w, alphabet).words == m.words);
            const auto in_w = [&w](std::string_view x) { return w.find(x) != Word::npos; };
            CHECK(check_mfw_invariants(m, in_w).empty());
            // Avoiding M_w up to length |w| gives back exactly the factors.
            CHECK(oracle::avoiding_words(m.words, alphabet, w.size()) == factor_set(w, w.size()));
        }
    }
}

TEST_CASE("invariant checker catches violations")
{
    const Word w = "aabbabb";
    const auto in_w = [&w](std::string_view x) { return w.find(x) != Word::npos; };
    MfwSet bad = mfw_linear(w);
    bad.words.insert("aaaa");  // has aaa as a factor
    CHECK_FALSE(check_mfw_invariants(bad, in_w).empty());

    MfwSet wrong = mfw_linear(w);
    wrong.words.erase("babba");
    wrong.words.insert("bab");  // a factor of w
    CHECK_FALSE(check_mfw_invariants(wrong, in_w).empty());

    MfwSet letter = mfw_linear(w, Alphabet("abc"));
    CHECK(letter.contains("c"));
    CHECK(check_mfw_invariants(letter, in_w).empty());
    letter.words.insert("a");
    CHECK_FALSE(check_mfw_invariants(letter, in_w).empty());
}

TEST_CASE("circular fixtures")
{
    CHECK(mfw_circular(CircularWord("aabbabb")).words == WordSet{"aaa", "aba", "bbb", "aabbaa", "babbab"});
    CHECK(mfw_circular(CircularWord("aaababbb")).words ==
          WordSet{"aaaa", "aabb", "abaa", "abba", "baab", "baba", "bbab", "bbbb"});
    CHECK(mfw_circular(CircularWord("aabbab")).words == WordSet{"aaa", "bbb", "aaba", "abab", "babb", "bbaa"});
    CHECK(mfw_circular(CircularWord("aabbab")).max_length() == 4);
    CHECK(mfw_circular(CircularWord("a"), Alphabet("ab")).words == WordSet{"b"});
    CHECK(mfw_circular(CircularWord("ab")).words == WordSet{"aa", "bb"});

    const MfwSet m = mfw_circular(CircularWord("babbaab"));
    CHECK(m.source == MfwSet::Source::circular);
    CHECK(m.source_word == "aabbabb");
    CHECK_THROWS_AS(mfw_circular(CircularWord("abc"), Alphabet("ab")), InvalidInput);
}

TEST_CASE("circular agrees with the definition")
{
    for (const char* symbols : {"ab", "abc"}) {
        const Alphabet alphabet(symbols);
        for (const Word& w : all_words(alphabet, 1, alphabet.size() == 2 ? 9 : 5)) {
            const CircularWord cw(w);
            const auto member = [&cw](std::string_view x) { return circular_factor_membership(cw, x); };
            const MfwSet m = mfw_circular(cw, alphabet);
            const auto by_definition =
                minimal_forbidden_by_definition(member, alphabet, 2 * cw.linearization().size() + 2);
            REQUIRE_MESSAGE(m.words == by_definition, w);
            CHECK(m.max_length() <= cw.linearization().size());
            CHECK(check_mfw_invariants(m, member).empty());
            // Rotation invariance, before canonicalization by the type.
            CHECK(mfw_circular(CircularWord(w.substr(1) + w.front()), alphabet).words == m.words);
        }
    }
}

TEST_CASE("cardinality bounds")
{
    const Alphabet ab("ab");
    const auto lower = check_cardinality_bounds(CircularWord("aaaaa"), ab);
    CHECK(lower.length == 1);
    CHECK(lower.count == 1);
    CHECK(lower.lower_tight());
    CHECK(lower.ok());

    for (std::size_t n = 2; n <= 12; ++n) {
        const auto r = check_cardinality_bounds(CircularWord(std::string(n - 1, 'a') + "b"), ab);
        CHECK(r.count == n);
        CHECK(r.upper_tight());
        CHECK(r.ok());
    }

    const auto de_bruijn = check_cardinality_bounds(CircularWord("aaababbb"), ab);
    CHECK(de_bruijn.count == 8);
    CHECK(de_bruijn.ok());

    const auto abc = check_cardinality_bounds(CircularWord("abc"), Alphabet("abc"));
    CHECK(abc.count == 6);
    CHECK(abc.upper_bound == 6);
    CHECK(abc.ok());

    for (const Word& w : primitive_necklaces(ab, 10)) CHECK_MESSAGE(check_cardinality_bounds(CircularWord(w), ab).ok(), w);
}

TEST_CASE("a factorial language with infinitely many minimal forbidden words")
{
    // Factors of words in {b, aa}*: a membership oracle by enumerating every
    // concatenation long enough to contain the candidate.
    const auto member = [](std::string_view x) {
        std::vector<Word> level{Word{}};
        std::vector<Word> all{Word{}};
        const std::size_t limit = x.size() + 4;
        while (!level.empty()) {
            std::vector<Word> next;
            for (const Word& u : level) {
                for (const char* piece : {"b", "aa"}) {
                    Word v = u + piece;
                    if (v.size() <= limit) next.push_back(std::move(v));
                }
            }
            all.insert(all.end(), next.begin(), next.end());
            level = std::move(next);
        }
        for (const Word& u : all) {
            if (u.find(x) != Word::npos) return true;
        }
        return false;
    };
    for (std::size_t n = 1; n <= 5; ++n) {
        const Word x = "b" + std::string(2 * n + 1, 'a') + "b";
        CHECK_FALSE(member(x));
        CHECK(member(x.substr(1)));
        CHECK(member(x.substr(0, x.size() - 1)));
    }
    // The same words show up in a bounded search from the definition.
    const auto found = minimal_forbidden_by_definition(member, Alphabet("ab"), 9);
    CHECK(found == WordSet{"bab", "baaab", "baaaaab", "baaaaaaab"});
}
