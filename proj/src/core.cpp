#include "antidict/core.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "antidict/suffix_automaton.hpp"

namespace antidict {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols), rank_(256, kNoSymbol)
{
    if (symbols_.empty()) throw InvalidInput("alphabet must not be empty");
    std::sort(symbols_.begin(), symbols_.end());
    if (std::adjacent_find(symbols_.begin(), symbols_.end()) != symbols_.end()) {
        throw InvalidInput("alphabet has duplicate symbols: \"" + std::string(symbols) + "\"");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) rank_[to_byte(symbols_[i])] = static_cast<int>(i);
}

Alphabet Alphabet::of(std::string_view w)
{
    std::string letters(w);
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    return Alphabet(letters);
}

bool Alphabet::covers(std::string_view w) const noexcept
{
    return std::all_of(w.begin(), w.end(), [this](char c) { return contains(c); });
}

void Alphabet::require_covers(std::string_view w) const
{
    for (char c : w) {
        if (!contains(c)) {
            throw InvalidInput(std::string("symbol '") + c + "' is not in alphabet \"" + symbols_ + "\"");
        }
    }
}

Word reversal(std::string_view w)
{
    return Word(w.rbegin(), w.rend());
}

std::size_t count_occurrences(char x, std::string_view w, const Alphabet& alphabet)
{
    if (!alphabet.contains(x)) {
        throw InvalidInput(std::string("symbol '") + x + "' is not in alphabet \"" + alphabet.symbols() + "\"");
    }
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), x));
}

WordSet factor_set(std::string_view w, std::size_t max_length)
{
    if (w.size() > kOracleMaxWordLength || std::min(max_length, w.size()) > kOracleMaxFactorLength) {
        throw GuardExceeded("factor_set: input too large for enumeration");
    }
    WordSet out;
    out.insert(Word{});
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t len = 1; len <= max_length && i + len <= w.size(); ++len) {
            out.emplace(w.substr(i, len));
        }
    }
    return out;
}

Word primitive_root(std::string_view w)
{
    if (w.empty()) throw InvalidInput("primitive_root: empty word");
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        if (w.substr(d) == w.substr(0, n - d)) return Word(w.substr(0, d));
    }
    return Word(w);
}

bool is_primitive(std::string_view w)
{
    return primitive_root(w).size() == w.size();
}

Word canonical_rotation(std::string_view w)
{
    // Two candidate starts i < j race; the loser jumps past the compared block.
    const std::size_t n = w.size();
    if (n == 0) return Word{};
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        const char a = w[(i + k) % n];
        const char b = w[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b) {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if (i == j) ++j;
        k = 0;
    }
    const std::size_t start = std::min(i, j);
    Word out;
    out.reserve(n);
    out.append(w.substr(start));
    out.append(w.substr(0, start));
    return out;
}

CircularWord::CircularWord(std::string_view w)
{
    if (w.empty()) throw InvalidInput("circular word must not be empty");
    Word root = primitive_root(w);
    exponent_ = w.size() / root.size();
    word_ = canonical_rotation(root);
}

namespace {

Word power(std::string_view w, std::size_t k)
{
    Word out;
    out.reserve(w.size() * k);
    for (std::size_t i = 0; i < k; ++i) out.append(w);
    return out;
}

std::size_t covering_power(std::size_t length, std::size_t period)
{
    return (length + period - 1) / period + 1;
}

}  // namespace

bool circular_factor_membership(const CircularWord& cw, std::string_view x)
{
    const Word& w = cw.linearization();
    return power(w, covering_power(x.size(), w.size())).find(x) != Word::npos;
}

WordSet circular_factor_set(const CircularWord& cw, std::size_t max_length)
{
    const Word& w = cw.linearization();
    if (max_length > kOracleMaxFactorLength) throw GuardExceeded("circular_factor_set: max_length too large");
    return factor_set(power(w, covering_power(max_length, w.size())), max_length);
}

namespace {

void require_binary(std::string_view w, const Alphabet& alphabet, const char* op)
{
    if (alphabet.size() != 2) {
        throw InvalidInput(std::string(op) + ": alphabet must have exactly two symbols, got \"" +
                           alphabet.symbols() + "\"");
    }
    alphabet.require_covers(w);
}

}  // namespace

bool is_balanced(std::string_view w, const Alphabet& alphabet)
{
    require_binary(w, alphabet, "is_balanced");
    const char a = alphabet.symbol(0);
    const std::size_t n = w.size();
    std::vector<std::size_t> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + (w[i] == a ? 1 : 0);
    for (std::size_t len = 1; len < n; ++len) {
        std::size_t lo = prefix[len], hi = prefix[len];
        for (std::size_t i = 1; i + len <= n; ++i) {
            const std::size_t c = prefix[i + len] - prefix[i];
            lo = std::min(lo, c);
            hi = std::max(hi, c);
            if (hi - lo > 1) return false;
        }
    }
    return true;
}

WordSet bispecial_factors(std::string_view w, const Alphabet& alphabet)
{
    require_binary(w, alphabet, "bispecial_factors");
    WordSet out;
    if (w.empty()) return out;

    // Only the longest word of a DAWG class can have two left extensions, and
    // its left extensions are the first letters of the shortest words of the
    // classes linking to it. Right extensions are shared by the whole class.
    const SuffixAutomaton dawg(w, alphabet);
    std::vector<unsigned> left_mask(dawg.size(), 0);
    for (std::size_t s = 1; s < dawg.size(); ++s) {
        const auto& st = dawg.state(static_cast<SuffixAutomaton::StateId>(s));
        const auto& parent = dawg.state(st.link);
        const std::size_t first = static_cast<std::size_t>(st.end_pos - parent.length);
        left_mask[static_cast<std::size_t>(st.link)] |= 1u << alphabet.rank(w[first]);
    }
    for (std::size_t s = 0; s < dawg.size(); ++s) {
        const auto id = static_cast<SuffixAutomaton::StateId>(s);
        const bool right = dawg.next(id, 0) != SuffixAutomaton::kNone && dawg.next(id, 1) != SuffixAutomaton::kNone;
        if (!right || left_mask[s] != 3u) continue;
        const auto& st = dawg.state(id);
        out.emplace(w.substr(static_cast<std::size_t>(st.end_pos - st.length + 1),
                             static_cast<std::size_t>(st.length)));
    }
    return out;
}

WordSet minimal_forbidden_by_definition(const LanguagePredicate& in_language, const Alphabet& alphabet,
                                        std::size_t max_length)
{
    if (max_length > kEnumerationMaxLength) throw GuardExceeded("minimal_forbidden_by_definition: max_length too large");

    // Words of the language up to max_length - 1, found by extending members
    // (the language is factorial, so prefixes of members are members).
    WordSet members;
    std::deque<Word> queue{Word{}};
    if (in_language("")) members.insert(Word{});
    while (!queue.empty()) {
        Word u = std::move(queue.front());
        queue.pop_front();
        if (u.size() + 1 >= max_length) continue;
        for (char c : alphabet.symbols()) {
            Word v = u + c;
            if (!in_language(v)) continue;
            if (members.size() >= kEnumerationMaxWords) throw GuardExceeded("minimal_forbidden_by_definition: language too large");
            members.insert(v);
            queue.push_back(std::move(v));
        }
    }

    WordSet out;
    if (max_length == 0) return out;
    for (char c : alphabet.symbols()) {
        if (!in_language(std::string(1, c))) out.insert(std::string(1, c));
    }
    for (const Word& u : members) {
        if (u.size() + 2 > max_length) continue;
        for (char a : alphabet.symbols()) {
            if (!members.contains(a + u)) continue;
            for (char b : alphabet.symbols()) {
                if (!members.contains(u + b)) continue;
                Word candidate = a + u + b;
                if (!in_language(candidate)) out.insert(std::move(candidate));
            }
        }
    }
    return out;
}

}  // namespace antidict
