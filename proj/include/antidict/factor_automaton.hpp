#pragma once

#include <string_view>

#include "antidict/automata.hpp"

namespace antidict {

/// Minimal DFA accepting exactly the factors of `w`, every state final, with
/// failure links: the failure of the state reached by u is the state reached
/// by the longest suffix of u that leads somewhere else.
///
/// Built as the DAWG of `w`, then merged bottom-up (the DAWG is acyclic, so
/// classes of equal right language are found in one pass). Linear in |w| for a
/// fixed alphabet. Throws InvalidInput on the empty word or when `alphabet`
/// does not cover `w`.
Dfa build_factor_automaton(std::string_view w, const Alphabet& alphabet);
Dfa build_factor_automaton(std::string_view w);

}  // namespace antidict
