#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "antidict/core.hpp"

namespace antidict {

/// An antifactorial set of minimal forbidden words, with the alphabet it is
/// relative to and the word it came from. `words` is kept in short-lex order.
struct MfwSet {
    enum class Source { linear, circular, given };

    WordSet words;
    Alphabet alphabet{"ab"};
    Source source = Source::given;
    Word source_word;

    bool contains(std::string_view w) const { return words.contains(Word(w)); }
    std::size_t size() const noexcept { return words.size(); }
    std::size_t max_length() const;
};

/// Minimal forbidden words of `w`: the letters of `alphabet` absent from `w`,
/// and every aub with au, ub factors of `w` and aub not. Read off the DAWG of
/// `w` and its suffix links in linear time. Throws InvalidInput on an empty
/// word or an alphabet that does not cover `w`.
MfwSet mfw_linear(std::string_view w, const Alphabet& alphabet);
MfwSet mfw_linear(std::string_view w);

/// Same contract as mfw_linear, by enumerating every candidate aub with u a
/// factor of `w`. Quadratic; guarded by kOracleMaxWordLength.
MfwSet mfw_linear_bruteforce(std::string_view w, const Alphabet& alphabet);

/// Minimal forbidden words of the circular word: those of ww of length at
/// most |w|, for w the canonical linearization.
MfwSet mfw_circular(const CircularWord& cw, const Alphabet& alphabet);
MfwSet mfw_circular(const CircularWord& cw);

/// Checks the invariants every MfwSet must satisfy against a membership
/// predicate for the source language. Returns an empty string when they
/// hold, otherwise a description of the first violation.
std::string check_mfw_invariants(const MfwSet& set, const LanguagePredicate& in_language);

struct CardinalityReport {
    std::size_t length = 0;           // n = |w|
    std::size_t alphabet_size = 0;    // |A|
    std::size_t letters_used = 0;     // |A(w)|
    std::size_t count = 0;            // |M_[w]|
    std::size_t lower_bound = 0;      // |A| - 1
    std::size_t upper_bound = 0;      // |A| + (n - 1)|A(w)| - n
    bool lower_ok = false;
    bool upper_ok = false;

    bool ok() const noexcept { return lower_ok && upper_ok; }
    bool lower_tight() const noexcept { return count == lower_bound; }
    bool upper_tight() const noexcept { return count == upper_bound; }
};

CardinalityReport check_cardinality_bounds(const CircularWord& cw, const Alphabet& alphabet);

}  // namespace antidict
