#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "antidict/automata.hpp"

namespace antidict {

/// Every word over `alphabet` with length in [min_length, max_length], in
/// short-lex order.
std::vector<Word> all_words(const Alphabet& alphabet, std::size_t min_length, std::size_t max_length);

/// One linearization (the least rotation) per primitive circular word of
/// length in [1, max_length], in short-lex order.
std::vector<Word> primitive_necklaces(const Alphabet& alphabet, std::size_t max_length);

/// Number of primitive necklaces (Lyndon words) of length exactly n over k
/// letters, by the Moebius formula.
std::size_t lyndon_count(std::size_t k, std::size_t n);

namespace oracle {

/// Subset-construction DFA for the factors of `w`: a state is the set of
/// positions where the word read so far can end. Shares nothing with the
/// DAWG or L-automaton code.
Dfa linear_position_dfa(std::string_view w, const Alphabet& alphabet);

/// The same for the factors of all powers of `w`, positions taken mod |w|.
Dfa circular_position_dfa(std::string_view w, const Alphabet& alphabet);

/// Words of length <= max_length with no member of `forbidden` as a factor,
/// by generating all words and scanning.
WordSet avoiding_words(const WordSet& forbidden, const Alphabet& alphabet, std::size_t max_length);

}  // namespace oracle

struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool passed() const noexcept { return failures == 0 && cases > 0; }
};

/// Runs one property over a corpus, recording the first failing input. The
/// property returns an empty string on success, else a description.
PropertyResult sweep(const std::string& name, const std::vector<Word>& corpus,
                     const std::function<std::string(const Word&)>& property);

/// The exhaustive property suite: linear properties over binary words of
/// length <= `binary_max` and ternary words of length <= `ternary_max`,
/// circular properties over the primitive necklaces of the same sizes.
std::vector<PropertyResult> run_exhaustive(std::size_t binary_max, std::size_t ternary_max);

}  // namespace antidict
