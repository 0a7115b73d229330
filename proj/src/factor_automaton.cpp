#include "antidict/factor_automaton.hpp"

#include <cstring>
#include <string>
#include <unordered_map>

#include "antidict/suffix_automaton.hpp"

namespace antidict {

Dfa build_factor_automaton(std::string_view w, const Alphabet& alphabet)
{
    if (w.empty()) throw InvalidInput("build_factor_automaton: empty word");
    const SuffixAutomaton dawg(w, alphabet);
    const std::size_t sigma = alphabet.size();
    const std::size_t n = dawg.size();

    // Two DAWG states with the same (already merged) successors have the same
    // right language, since every state is final.
    std::vector<StateId> cls(n, kNoState);
    std::vector<std::size_t> representative;
    std::unordered_map<std::string, StateId> by_signature;
    by_signature.reserve(n);
    const auto order = dawg.topological_order();
    std::string key(sigma * sizeof(StateId), '\0');
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto s = static_cast<std::size_t>(*it);
        for (std::size_t a = 0; a < sigma; ++a) {
            const auto t = dawg.next(*it, a);
            const StateId c = t == SuffixAutomaton::kNone ? kNoState : cls[static_cast<std::size_t>(t)];
            std::memcpy(key.data() + a * sizeof(StateId), &c, sizeof(StateId));
        }
        const auto [pos, inserted] = by_signature.try_emplace(key, static_cast<StateId>(representative.size()));
        if (inserted) representative.push_back(s);
        cls[s] = pos->second;
    }

    Dfa fa(alphabet);
    for (std::size_t c = 0; c < representative.size(); ++c) fa.add_state(true);
    fa.enable_failure();
    for (std::size_t c = 0; c < representative.size(); ++c) {
        const auto rep = static_cast<SuffixAutomaton::StateId>(representative[c]);
        for (std::size_t a = 0; a < sigma; ++a) {
            const auto t = dawg.next(rep, a);
            if (t != SuffixAutomaton::kNone) fa.set_next(static_cast<StateId>(c), a, cls[static_cast<std::size_t>(t)]);
        }
        // Suffixes of a word of the class stay in it until the suffix link
        // chain leaves the merged class.
        auto q = dawg.state(rep).link;
        while (q != SuffixAutomaton::kNone && cls[static_cast<std::size_t>(q)] == static_cast<StateId>(c)) {
            q = dawg.state(q).link;
        }
        fa.set_failure(static_cast<StateId>(c), q == SuffixAutomaton::kNone ? kNoState : cls[static_cast<std::size_t>(q)]);
    }
    fa.set_initial(cls[0]);
    return canonical_form(fa);
}

Dfa build_factor_automaton(std::string_view w)
{
    if (w.empty()) throw InvalidInput("build_factor_automaton: empty word");
    return build_factor_automaton(w, Alphabet::of(w));
}

}  // namespace antidict
