#pragma once

// Slow reference computations used only by the tests. Nothing here calls the
// DAWG, L-automaton or reconstruction code.

#include <algorithm>
#include <string>
#include <vector>

#include "antidict/automata.hpp"
#include "antidict/core.hpp"

namespace antidict::testing {

inline std::vector<Word> rotations(const Word& w)
{
    std::vector<Word> out;
    for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w.substr(i) + w.substr(0, i));
    return out;
}

inline Word least_rotation_naive(const Word& w)
{
    auto r = rotations(w);
    return *std::min_element(r.begin(), r.end());
}

inline bool is_factor(const Word& x, const Word& w)
{
    return w.find(x) != Word::npos;
}

/// Definition of bispecial, over all substrings.
inline WordSet bispecial_naive(const Word& w)
{
    WordSet out;
    const auto factors = factor_set(w, w.size());
    for (const Word& v : factors) {
        if (factors.contains("a" + v) && factors.contains("b" + v) && factors.contains(v + "a") &&
            factors.contains(v + "b")) {
            out.insert(v);
        }
    }
    return out;
}

/// Definition of balance, comparing every pair of equal-length factors.
inline bool balanced_naive(const Word& w)
{
    for (std::size_t len = 1; len <= w.size(); ++len) {
        for (std::size_t i = 0; i + len <= w.size(); ++i) {
            for (std::size_t j = 0; j + len <= w.size(); ++j) {
                const auto ci = std::count(w.begin() + i, w.begin() + i + len, 'a');
                const auto cj = std::count(w.begin() + j, w.begin() + j + len, 'a');
                if (ci - cj > 1 || cj - ci > 1) return false;
            }
        }
    }
    return true;
}

/// Minimal forbidden words of w straight from the definition, trying every
/// word up to length |w| + 1 over the alphabet.
inline WordSet mfw_exhaustive(const Word& w, const Alphabet& alphabet)
{
    WordSet out;
    std::vector<Word> level{Word{}};
    for (std::size_t len = 1; len <= w.size() + 1; ++len) {
        std::vector<Word> next;
        for (const Word& u : level) {
            for (char c : alphabet.symbols()) next.push_back(u + c);
        }
        for (const Word& x : next) {
            if (is_factor(x, w)) continue;
            if (x.size() == 1 || (is_factor(x.substr(1), w) && is_factor(x.substr(0, x.size() - 1), w))) out.insert(x);
        }
        level = std::move(next);
    }
    return out;
}

/// Failure link by definition: the state of the longest proper suffix of u
/// reaching a different state than u does.
inline StateId failure_by_definition(const Dfa& dfa, const Word& u)
{
    const StateId target = dfa.run(u);
    for (std::size_t cut = 1; cut <= u.size(); ++cut) {
        const StateId s = dfa.run(u.substr(cut));
        if (s != target) return s;
    }
    return kNoState;
}

}  // namespace antidict::testing
