#include "antidict/mfw.hpp"

#include <algorithm>
#include <deque>

#include "antidict/suffix_automaton.hpp"

namespace antidict {

std::size_t MfwSet::max_length() const
{
    return words.empty() ? 0 : words.rbegin()->size();
}

MfwSet mfw_linear(std::string_view w, const Alphabet& alphabet)
{
    if (w.empty()) throw InvalidInput("mfw_linear: empty word");
    const SuffixAutomaton dawg(w, alphabet);
    const std::size_t sigma = alphabet.size();
    using Id = SuffixAutomaton::StateId;

    // BFS tree over the DAWG: the path to a state spells its shortest word.
    std::vector<Id> parent(dawg.size(), SuffixAutomaton::kNone);
    std::vector<char> via(dawg.size(), '\0');
    std::vector<bool> seen(dawg.size(), false);
    std::deque<Id> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        const Id s = queue.front();
        queue.pop_front();
        for (std::size_t a = 0; a < sigma; ++a) {
            const Id t = dawg.next(s, a);
            if (t == SuffixAutomaton::kNone || seen[static_cast<std::size_t>(t)]) continue;
            seen[static_cast<std::size_t>(t)] = true;
            parent[static_cast<std::size_t>(t)] = s;
            via[static_cast<std::size_t>(t)] = alphabet.symbol(a);
            queue.push_back(t);
        }
    }
    auto shortest = [&](Id s) {
        Word out(static_cast<std::size_t>(dawg.state(dawg.state(s).link).length + 1), '\0');
        for (std::size_t i = out.size(); i > 0; --i) {
            out[i - 1] = via[static_cast<std::size_t>(s)];
            s = parent[static_cast<std::size_t>(s)];
        }
        return out;
    };

    // aub is minimal forbidden iff au is the shortest word of a class whose
    // suffix-link target (holding ub's prefix u) extends by b but the class
    // itself does not.
    std::vector<Word> found;
    for (std::size_t a = 0; a < sigma; ++a) {
        if (dawg.next(0, a) == SuffixAutomaton::kNone) found.emplace_back(1, alphabet.symbol(a));
    }
    for (std::size_t s = 1; s < dawg.size(); ++s) {
        const auto id = static_cast<Id>(s);
        const Id link = dawg.state(id).link;
        for (std::size_t b = 0; b < sigma; ++b) {
            if (dawg.next(id, b) == SuffixAutomaton::kNone && dawg.next(link, b) != SuffixAutomaton::kNone) {
                found.push_back(shortest(id) + alphabet.symbol(b));
            }
        }
    }
    // Each word arises from exactly one (state, letter) pair, so sorting
    // once and building the set from the sorted range is linear.
    std::sort(found.begin(), found.end(), ShortLex{});
    MfwSet out{{}, alphabet, MfwSet::Source::linear, Word(w)};
    out.words.insert(std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
    return out;
}

MfwSet mfw_linear(std::string_view w)
{
    if (w.empty()) throw InvalidInput("mfw_linear: empty word");
    return mfw_linear(w, Alphabet::of(w));
}

MfwSet mfw_linear_bruteforce(std::string_view w, const Alphabet& alphabet)
{
    if (w.empty()) throw InvalidInput("mfw_linear_bruteforce: empty word");
    if (w.size() > kOracleMaxWordLength) throw GuardExceeded("mfw_linear_bruteforce: word too long");
    alphabet.require_covers(w);
    const WordSet factors = factor_set(w, w.size());
    MfwSet out{{}, alphabet, MfwSet::Source::linear, Word(w)};
    for (char c : alphabet.symbols()) {
        if (w.find(c) == std::string_view::npos) out.words.insert(Word(1, c));
    }
    for (const Word& u : factors) {
        for (char a : alphabet.symbols()) {
            if (!factors.contains(a + u)) continue;
            for (char b : alphabet.symbols()) {
                Word candidate = a + u + b;
                if (factors.contains(u + b) && !factors.contains(candidate)) out.words.insert(std::move(candidate));
            }
        }
    }
    return out;
}

MfwSet mfw_circular(const CircularWord& cw, const Alphabet& alphabet)
{
    const Word& w = cw.linearization();
    MfwSet doubled = mfw_linear(w + w, alphabet);
    MfwSet out{{}, alphabet, MfwSet::Source::circular, w};
    for (const Word& m : doubled.words) {
        if (m.size() > w.size()) break;
        out.words.insert(out.words.end(), m);
    }
    return out;
}

MfwSet mfw_circular(const CircularWord& cw)
{
    return mfw_circular(cw, Alphabet::of(cw.linearization()));
}

std::string check_mfw_invariants(const MfwSet& set, const LanguagePredicate& in_language)
{
    for (const Word& m : set.words) {
        if (m.empty()) return "empty word in set";
        if (!set.alphabet.covers(m)) return "\"" + m + "\" uses a symbol outside the alphabet";
        if (in_language(m)) return "\"" + m + "\" belongs to the language";
        if (m.size() >= 2 && !(in_language(m.substr(0, m.size() - 1)) && in_language(m.substr(1)))) {
            return "\"" + m + "\" has a forbidden proper factor";
        }
    }
    for (const Word& x : set.words) {
        for (const Word& y : set.words) {
            if (x.size() < y.size() && y.find(x) != Word::npos) {
                return "\"" + x + "\" is a factor of \"" + y + "\"";
            }
        }
    }
    return {};
}

CardinalityReport check_cardinality_bounds(const CircularWord& cw, const Alphabet& alphabet)
{
    const Word& w = cw.linearization();
    CardinalityReport r;
    r.length = w.size();
    r.alphabet_size = alphabet.size();
    r.letters_used = Alphabet::of(w).size();
    r.count = mfw_circular(cw, alphabet).size();
    r.lower_bound = r.alphabet_size - 1;
    r.upper_bound = r.alphabet_size + (r.length - 1) * r.letters_used - r.length;
    r.lower_ok = r.count >= r.lower_bound;
    r.upper_ok = r.count <= r.upper_bound;
    return r;
}

}  // namespace antidict
