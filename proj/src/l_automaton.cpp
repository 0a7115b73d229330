#include "antidict/l_automaton.hpp"

namespace antidict {

Dfa l_automaton(const Trie& trie)
{
    if (!trie.is_antifactorial()) throw NotAntifactorial("l_automaton: trie set is not antifactorial");

    const std::size_t sigma = trie.alphabet().size();
    const StateId i = trie.root();
    Dfa out(trie.alphabet());
    for (std::size_t p = 0; p < trie.size(); ++p) out.add_state(!trie.is_sink(static_cast<StateId>(p)));
    out.set_initial(i);
    out.enable_failure();

    for (std::size_t a = 0; a < sigma; ++a) {
        const StateId child = trie.child(i, a);
        if (child != kNoState) {
            out.set_next(i, a, child);
            out.set_failure(child, i);
        } else {
            out.set_next(i, a, i);
        }
    }
    // Trie ids are already breadth-first, so every failure target (shallower)
    // has its transitions set before they are read.
    for (std::size_t pi = 1; pi < trie.size(); ++pi) {
        const auto p = static_cast<StateId>(pi);
        for (std::size_t a = 0; a < sigma; ++a) {
            const StateId child = trie.child(p, a);
            if (child != kNoState) {
                out.set_next(p, a, child);
                out.set_failure(child, out.next(out.failure(p), a));
            } else if (!trie.is_sink(p)) {
                out.set_next(p, a, out.next(out.failure(p), a));
            } else {
                out.set_next(p, a, p);
            }
        }
    }
    return out;
}

Dfa avoiding_dfa(const MfwSet& set)
{
    return strip_sinks(l_automaton(build_trie(set.words, set.alphabet)));
}

Dfa circular_factor_dfa(const CircularWord& cw, const Alphabet& alphabet)
{
    return avoiding_dfa(mfw_circular(cw, alphabet));
}

Dfa circular_factor_dfa(const CircularWord& cw)
{
    return circular_factor_dfa(cw, Alphabet::of(cw.linearization()));
}

}  // namespace antidict
