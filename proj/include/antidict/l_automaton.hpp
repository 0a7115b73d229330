#pragma once

#include "antidict/automata.hpp"
#include "antidict/mfw.hpp"

namespace antidict {

/// Complete DFA for the words avoiding the antifactorial set held by `trie`.
///
/// States are exactly the trie's states (same ids). Root edges absent from the
/// trie loop on the root; trie edges are kept and their targets get failure
/// links; missing edges of other non-sink states are copied from the failure
/// state; sinks become absorbing. Final states are the non-sinks. The result
/// is not minimized. Throws NotAntifactorial when the trie's set is not
/// antifactorial.
Dfa l_automaton(const Trie& trie);

/// Factor automaton of a circular word: the L-automaton of the trie of its
/// minimal forbidden words, with sinks removed.
Dfa circular_factor_dfa(const CircularWord& cw, const Alphabet& alphabet);
Dfa circular_factor_dfa(const CircularWord& cw);

/// The same pipeline for any antifactorial set: strip_sinks(l_automaton(trie)).
Dfa avoiding_dfa(const MfwSet& set);

}  // namespace antidict
