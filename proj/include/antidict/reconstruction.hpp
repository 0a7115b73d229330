#pragma once

#include "antidict/automata.hpp"
#include "antidict/mfw.hpp"

namespace antidict {

/// The unique word whose minimal forbidden words are `set`, read as the
/// longest path from the initial state of the sink-free L-automaton.
///
/// Throws ReconstructionError: `cycle` if the avoiding language is infinite,
/// `ambiguous` if there are several longest words, `mismatch` if the longest
/// word does not give back `set`. Throws NotAntifactorial for bad sets.
Word reconstruct_word(const MfwSet& set);

/// The circular word whose minimal forbidden words are `set`: a cycle of the
/// sink-free L-automaton found by depth-first search, read around.
///
/// Throws ReconstructionError: `no_cycle` if the automaton is acyclic,
/// `mismatch` if the cycle does not give back `set`.
CircularWord reconstruct_circular(const MfwSet& set);

/// Edge labels of the first cycle closed by a depth-first search from the
/// initial state (children in alphabet order), or an empty word.
Word first_cycle_label(const Dfa& dfa);

}  // namespace antidict
