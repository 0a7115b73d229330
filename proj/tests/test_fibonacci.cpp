#include <doctest.h>

#include "antidict/fibonacci.hpp"
#include "antidict/l_automaton.hpp"
#include "oracles.hpp"

using namespace antidict;
using antidict::testing::is_factor;

namespace {

const std::vector<WordSet> kTable = {
    {"a"},
    {"b"},
    {"aa", "bb"},
    {"bb", "aaa", "bab"},
    {"bb", "aaa", "aabaa", "babab"},
    {"bb", "aaa", "babab", "aabaabaa", "babaabab"},
    {"bb", "aaa", "babab", "aabaabaa", "aabaababaabaa", "babaababaabab"},
    {"bb", "aaa", "babab", "aabaabaa", "babaababaabab", "aabaababaabaababaabaa", "babaababaabaababaabab"},
};

}  // namespace

TEST_CASE("families")
{
    CHECK(fibonacci_family(1).f == "b");
    CHECK(fibonacci_family(2).f == "a");
    CHECK(fibonacci_family(3).f == "ab");
    CHECK(fibonacci_family(3).central.empty());

    const auto f5 = fibonacci_family(5);
    CHECK(f5.f == "abaab");
    CHECK(f5.length == 5);
    CHECK(f5.central == "aba");
    CHECK(f5.singular == "aabaa");
    CHECK(f5.g == "babab");

    const auto f7 = fibonacci_family(7);
    CHECK(f7.f == "abaababaabaab");
    CHECK(f7.central == "abaababaaba");
    CHECK(f7.singular == "aabaababaabaa");
    CHECK(f7.g == "babaababaabab");

    CHECK(fibonacci_family(6).singular == "babaabab");
    CHECK(fibonacci_family(30).length == 832040);
    CHECK_THROWS_AS(fibonacci_family(0), InvalidInput);
    CHECK_THROWS_AS(fibonacci_family(kFibonacciMaxIndex + 1), GuardExceeded);
}

TEST_CASE("central words")
{
    for (std::size_t n = 3; n <= 16; ++n) {
        const auto fam = fibonacci_family(n);
        CHECK(fam.central == reversal(fam.central));
        CHECK(fam.f.starts_with(fam.central));
        CHECK(fam.f.size() == fam.central.size() + 2);
        // Singular and swapped words differ only at their two ends.
        CHECK(fam.singular.size() == fam.length);
        CHECK(fam.g.size() == fam.length);
        CHECK(fam.singular.substr(1, fam.length - 2) == fam.g.substr(1, fam.length - 2));
        CHECK(fam.singular.front() != fam.g.front());
        CHECK(fam.singular.back() != fam.g.back());
    }
    for (std::size_t n = 5; n <= 20; ++n) CHECK(verify_central_identity(n));
    CHECK_THROWS_AS(verify_central_identity(4), InvalidInput);
}

TEST_CASE("table of circular minimal forbidden words")
{
    for (std::size_t n = 1; n <= kTable.size(); ++n) {
        CHECK_MESSAGE(mfw_circular(CircularWord(fibonacci_family(n).f), Alphabet("ab")).words == kTable[n - 1], n);
        CHECK(mfw_fibonacci_closed_form(n).words == kTable[n - 1]);
    }
}

TEST_CASE("closed form")
{
    for (std::size_t n = 4; n <= 16; ++n) {
        const auto fam = fibonacci_family(n);
        const MfwSet computed = mfw_circular(CircularWord(fam.f));
        CHECK(computed.words == mfw_fibonacci_closed_form(n).words);
        CHECK(computed.size() == n - 1);
        CHECK(computed.max_length() == fam.length);
        // g^_i is forbidden in f_n f_n while its proper factors occur; f^_i
        // for i < n occurs.
        const Word ff = fam.f + fam.f;
        for (std::size_t i = 3; i <= n; ++i) {
            const auto fi = fibonacci_family(i);
            CHECK_FALSE(is_factor(fi.g, ff));
            CHECK(is_factor(fi.g.substr(1), ff));
            CHECK(is_factor(fi.g.substr(0, fi.g.size() - 1), ff));
            if (i < n) CHECK(is_factor(fi.singular, ff));
        }
    }
}

TEST_CASE("verify_fibonacci")
{
    const auto r5 = verify_fibonacci(5);
    CHECK(r5.passed());
    CHECK(r5.circular_states == 9);
    CHECK(r5.linear_states == 6);

    const auto r4 = verify_fibonacci(4);
    CHECK(r4.passed());
    CHECK(r4.mfw.words == WordSet{"bb", "aaa", "bab"});

    const auto r2 = verify_fibonacci(2);
    CHECK(r2.passed());
    CHECK(r2.mfw.words == WordSet{"b"});

    for (std::size_t n = 1; n <= 16; ++n) {
        const auto r = verify_fibonacci(n);
        for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, n, " ", c.name, " ", c.detail);
    }
    CHECK_THROWS_AS(verify_fibonacci(kFibonacciMaxIndex + 1), GuardExceeded);
}

TEST_CASE("bispecial factors of f_n f_n")
{
    for (std::size_t n = 3; n <= 12; ++n) {
        WordSet centrals;
        for (std::size_t i = 3; i <= n; ++i) centrals.insert(fibonacci_family(i).central);
        const Word ff = fibonacci_family(n).f + fibonacci_family(n).f;
        CHECK(bispecial_factors(ff) == centrals);
        CHECK(antidict::testing::bispecial_naive(ff) == centrals);
    }
}
