#include "antidict/verify.hpp"

#include <algorithm>
#include <map>

#include "antidict/factor_automaton.hpp"
#include "antidict/l_automaton.hpp"
#include "antidict/mfw.hpp"
#include "antidict/reconstruction.hpp"

namespace antidict {

std::vector<Word> all_words(const Alphabet& alphabet, std::size_t min_length, std::size_t max_length)
{
    if (max_length > kEnumerationMaxLength) throw GuardExceeded("all_words: max_length too large");
    std::vector<Word> out;
    std::vector<Word> level{Word{}};
    for (std::size_t len = 0; len <= max_length; ++len) {
        if (len >= min_length) out.insert(out.end(), level.begin(), level.end());
        if (len == max_length) break;
        std::vector<Word> next;
        next.reserve(level.size() * alphabet.size());
        for (const Word& w : level) {
            for (char c : alphabet.symbols()) next.push_back(w + c);
        }
        if (out.size() + next.size() > kEnumerationMaxWords) throw GuardExceeded("all_words: corpus too large");
        level = std::move(next);
    }
    return out;
}

std::vector<Word> primitive_necklaces(const Alphabet& alphabet, std::size_t max_length)
{
    std::vector<Word> out;
    for (Word& w : all_words(alphabet, 1, max_length)) {
        if (is_primitive(w) && canonical_rotation(w) == w) out.push_back(std::move(w));
    }
    return out;
}

std::size_t lyndon_count(std::size_t k, std::size_t n)
{
    auto mobius = [](std::size_t m) {
        int sign = 1;
        for (std::size_t p = 2; p * p <= m; ++p) {
            if (m % p != 0) continue;
            m /= p;
            if (m % p == 0) return 0;
            sign = -sign;
        }
        return m > 1 ? -sign : sign;
    };
    long long total = 0;
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        long long power = 1;
        for (std::size_t i = 0; i < n / d; ++i) power *= static_cast<long long>(k);
        total += mobius(d) * power;
    }
    return static_cast<std::size_t>(total / static_cast<long long>(n));
}

namespace oracle {

namespace {

using Positions = std::vector<bool>;

Dfa subset_dfa(const Alphabet& alphabet, Positions start, const std::function<Positions(const Positions&, char)>& step)
{
    Dfa dfa(alphabet);
    std::map<Positions, StateId> ids;
    std::vector<Positions> states;
    auto intern = [&](Positions p) {
        const auto [it, inserted] = ids.emplace(p, static_cast<StateId>(states.size()));
        if (inserted) {
            states.push_back(std::move(p));
            dfa.add_state(true);
        }
        return it->second;
    };
    dfa.set_initial(intern(std::move(start)));
    for (std::size_t k = 0; k < states.size(); ++k) {
        for (std::size_t a = 0; a < alphabet.size(); ++a) {
            Positions next = step(states[k], alphabet.symbol(a));
            if (std::none_of(next.begin(), next.end(), [](bool b) { return b; })) continue;
            const StateId t = intern(std::move(next));
            dfa.set_next(static_cast<StateId>(k), a, t);
        }
    }
    return dfa;
}

}  // namespace

Dfa linear_position_dfa(std::string_view w, const Alphabet& alphabet)
{
    alphabet.require_covers(w);
    const std::size_t n = w.size();
    // Slot i means "the word read so far ends just before w[i]".
    return subset_dfa(alphabet, Positions(n + 1, true), [w, n](const Positions& s, char c) {
        Positions out(n + 1, false);
        for (std::size_t i = 0; i < n; ++i) {
            if (s[i] && w[i] == c) out[i + 1] = true;
        }
        return out;
    });
}

Dfa circular_position_dfa(std::string_view w, const Alphabet& alphabet)
{
    alphabet.require_covers(w);
    const std::size_t n = w.size();
    return subset_dfa(alphabet, Positions(n, true), [w, n](const Positions& s, char c) {
        Positions out(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            if (s[i] && w[i] == c) out[(i + 1) % n] = true;
        }
        return out;
    });
}

WordSet avoiding_words(const WordSet& forbidden, const Alphabet& alphabet, std::size_t max_length)
{
    WordSet out;
    for (const Word& w : all_words(alphabet, 0, max_length)) {
        const bool clean = std::none_of(forbidden.begin(), forbidden.end(),
                                        [&w](const Word& m) { return w.find(m) != Word::npos; });
        if (clean) out.insert(w);
    }
    return out;
}

}  // namespace oracle

PropertyResult sweep(const std::string& name, const std::vector<Word>& corpus,
                     const std::function<std::string(const Word&)>& property)
{
    PropertyResult r{name, 0, 0, {}};
    for (const Word& w : corpus) {
        ++r.cases;
        std::string why;
        try {
            why = property(w);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        if (why.empty()) continue;
        if (r.failures++ == 0) r.first_failure = w + ": " + why;
    }
    return r;
}

namespace {

std::string join(const WordSet& words)
{
    std::string out = "{";
    for (const Word& w : words) out += (out.size() > 1 ? "," : "") + w;
    return out + "}";
}

std::vector<Word> concat(std::vector<Word> a, const std::vector<Word>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

std::vector<PropertyResult> run_exhaustive(std::size_t binary_max, std::size_t ternary_max)
{
    const Alphabet ab("ab");
    const Alphabet abc("abc");
    const auto linear = concat(all_words(ab, 1, binary_max), all_words(abc, 1, ternary_max));
    const auto circular = concat(primitive_necklaces(ab, binary_max), primitive_necklaces(abc, ternary_max));
    auto alphabet_for = [&](const Word& w) -> const Alphabet& { return w.find('c') == Word::npos ? ab : abc; };

    std::vector<PropertyResult> out;
    out.push_back(sweep("mfw_linear matches brute force", linear, [&](const Word& w) -> std::string {
        const auto fast = mfw_linear(w, alphabet_for(w));
        const auto slow = mfw_linear_bruteforce(w, alphabet_for(w));
        return fast.words == slow.words ? "" : join(fast.words) + " vs " + join(slow.words);
    }));
    out.push_back(sweep("factor automaton is minimal for F_w", linear, [&](const Word& w) -> std::string {
        const Dfa fa = build_factor_automaton(w, alphabet_for(w));
        const Dfa ref = minimize(oracle::linear_position_dfa(w, alphabet_for(w)));
        if (!isomorphic(fa, ref)) return "differs from minimized position automaton";
        const std::size_t n = w.size();
        if (n > 3 && (fa.size() < n + 1 || fa.size() > 2 * n - 2)) return "state count " + std::to_string(fa.size());
        return "";
    }));
    out.push_back(sweep("L-automaton of M_w is the factor automaton", linear, [&](const Word& w) -> std::string {
        const Dfa fa = build_factor_automaton(w, alphabet_for(w));
        const Dfa la = avoiding_dfa(mfw_linear(w, alphabet_for(w)));
        return isomorphic(fa, la) ? "" : "not isomorphic";
    }));
    out.push_back(sweep("linear reconstruction round trip", linear, [&](const Word& w) -> std::string {
        const Word back = reconstruct_word(mfw_linear(w, alphabet_for(w)));
        return back == w ? "" : "got " + back;
    }));
    out.push_back(sweep("circular MFWs match the definition", circular, [&](const Word& w) -> std::string {
        const CircularWord cw(w);
        const auto viaww = mfw_circular(cw, alphabet_for(w));
        const auto direct = minimal_forbidden_by_definition(
            [&cw](std::string_view x) { return circular_factor_membership(cw, x); }, alphabet_for(w),
            std::min<std::size_t>(2 * w.size() + 2, kEnumerationMaxLength));
        return viaww.words == direct ? "" : join(viaww.words) + " vs " + join(direct);
    }));
    out.push_back(sweep("circular MFWs are rotation invariant", circular, [&](const Word& w) -> std::string {
        const auto ref = mfw_circular(CircularWord(w), alphabet_for(w));
        for (std::size_t r = 1; r < w.size(); ++r) {
            const Word rot = w.substr(r) + w.substr(0, r);
            WordSet filtered;
            for (const Word& m : mfw_linear(rot + rot, alphabet_for(w)).words) {
                if (m.size() <= w.size()) filtered.insert(m);
            }
            if (filtered != ref.words) return "rotation " + rot;
        }
        return "";
    }));
    out.push_back(sweep("cardinality bounds", circular, [&](const Word& w) -> std::string {
        const auto r = check_cardinality_bounds(CircularWord(w), alphabet_for(w));
        return r.ok() ? "" : "count " + std::to_string(r.count);
    }));
    out.push_back(sweep("circular factor automaton is minimal", circular, [&](const Word& w) -> std::string {
        const Dfa built = circular_factor_dfa(CircularWord(w), alphabet_for(w));
        const Dfa ref = minimize(oracle::circular_position_dfa(w, alphabet_for(w)));
        if (!equivalent(built, ref)) return "language differs";
        if (built.size() != ref.size()) {
            return std::to_string(built.size()) + " states, minimal has " + std::to_string(ref.size());
        }
        if (built.size() > 2 * w.size() - 1) return "more than 2n-1 states";
        return "";
    }));
    out.push_back(sweep("circular reconstruction round trip", circular, [&](const Word& w) -> std::string {
        const MfwSet m = mfw_circular(CircularWord(w), alphabet_for(w));
        const CircularWord back = reconstruct_circular(m);
        if (back.linearization() != w) return "got " + back.linearization();
        if (first_cycle_label(avoiding_dfa(m)).size() != w.size()) return "cycle length differs from |w|";
        return "";
    }));
    return out;
}

}  // namespace antidict
