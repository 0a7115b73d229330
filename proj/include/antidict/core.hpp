#pragma once

// Words, alphabets and circular words, plus the brute-force language oracles
// the rest of the library is checked against.

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "antidict/error.hpp"

namespace antidict {

/// A word is a plain byte string; each char is one symbol.
using Word = std::string;

/// Limits for the enumerating oracles. Past these they throw GuardExceeded.
inline constexpr std::size_t kOracleMaxWordLength = 4096;
inline constexpr std::size_t kOracleMaxFactorLength = 4096;
inline constexpr std::size_t kEnumerationMaxLength = 32;
inline constexpr std::size_t kEnumerationMaxWords = std::size_t{1} << 22;

/// Finite ordered alphabet. Symbols are kept sorted by byte value, which fixes
/// the iteration order used everywhere else (BFS numbering, output order).
class Alphabet {
public:
    static constexpr int kNoSymbol = -1;

    /// Throws InvalidInput on an empty string or duplicate symbols.
    explicit Alphabet(std::string_view symbols);

    /// The letters occurring in `w`. Throws on an empty word.
    static Alphabet of(std::string_view w);

    std::size_t size() const noexcept { return symbols_.size(); }
    char symbol(std::size_t index) const { return symbols_[index]; }
    const std::string& symbols() const noexcept { return symbols_; }

    bool contains(char c) const noexcept { return rank_[to_byte(c)] != kNoSymbol; }
    /// Position of `c` in the alphabet, or kNoSymbol.
    int rank(char c) const noexcept { return rank_[to_byte(c)]; }

    bool covers(std::string_view w) const noexcept;
    /// Throws InvalidInput naming the first foreign symbol.
    void require_covers(std::string_view w) const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

private:
    static std::size_t to_byte(char c) noexcept { return static_cast<unsigned char>(c); }

    std::string symbols_;
    std::vector<int> rank_;
};

/// Sort words by length, then lexicographically.
struct ShortLex {
    bool operator()(const Word& x, const Word& y) const
    {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    }
};

using WordSet = std::set<Word, ShortLex>;

Word reversal(std::string_view w);

/// |w|_x. Throws InvalidInput if `x` is not in `alphabet`.
std::size_t count_occurrences(char x, std::string_view w, const Alphabet& alphabet);

/// All distinct factors of `w` of length at most `max_length`, including the
/// empty word.
WordSet factor_set(std::string_view w, std::size_t max_length);

bool is_primitive(std::string_view w);
/// Shortest v with w = v^k.
Word primitive_root(std::string_view w);

/// Least rotation of `w` under byte order (linear time).
Word canonical_rotation(std::string_view w);

/// A conjugacy class of primitive words, held as its least rotation.
class CircularWord {
public:
    /// Non-primitive input is reduced to its primitive root; `was_reduced()`
    /// reports it. Throws InvalidInput on the empty word.
    explicit CircularWord(std::string_view w);

    const Word& linearization() const noexcept { return word_; }
    std::size_t length() const noexcept { return word_.size(); }
    bool was_reduced() const noexcept { return exponent_ > 1; }
    /// k such that the constructor input was (root)^k, up to rotation.
    std::size_t exponent() const noexcept { return exponent_; }

    friend bool operator==(const CircularWord& a, const CircularWord& b) { return a.word_ == b.word_; }
    friend auto operator<=>(const CircularWord& a, const CircularWord& b) { return a.word_ <=> b.word_; }

private:
    Word word_;
    std::size_t exponent_ = 1;
};

/// Whether `x` occurs in some power of the circular word.
bool circular_factor_membership(const CircularWord& cw, std::string_view x);

/// Factors of length at most `max_length` of all powers of the circular word.
WordSet circular_factor_set(const CircularWord& cw, std::size_t max_length);

/// Binary balance: any two factors of equal length differ by at most one in
/// the number of occurrences of each letter. Alphabet must have two symbols.
bool is_balanced(std::string_view w, const Alphabet& alphabet = Alphabet("ab"));

/// Words v with av, bv, va, vb all factors of `w`, over a two-letter alphabet.
WordSet bispecial_factors(std::string_view w, const Alphabet& alphabet = Alphabet("ab"));

/// Membership predicate of a factorial language.
using LanguagePredicate = std::function<bool(std::string_view)>;

/// Minimal forbidden words of length <= `max_length` of the factorial language
/// described by `in_language`, taken straight from the definition: letters
/// outside the language, and aub with au, ub inside and aub outside.
/// Explores the language breadth-first, so it is exponential in `max_length`.
WordSet minimal_forbidden_by_definition(const LanguagePredicate& in_language,
                                        const Alphabet& alphabet, std::size_t max_length);

}  // namespace antidict
