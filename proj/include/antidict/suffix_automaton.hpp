#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "antidict/core.hpp"

namespace antidict {

/// Online DAWG (suffix automaton) of a word over a fixed alphabet.
///
/// Each state is a class of factors with the same set of end positions.
/// `link` is the suffix link: the state of the longest suffix of the class's
/// words that falls in a different class. With every state final this accepts
/// exactly the factors of the word, but it is not always the minimal such
/// automaton (see build_factor_automaton).
class SuffixAutomaton {
public:
    using StateId = std::int32_t;
    static constexpr StateId kNone = -1;

    struct State {
        std::int32_t length = 0;    // longest word in the class
        StateId link = kNone;
        std::int32_t end_pos = -1;  // end index (inclusive) of one occurrence
    };

    SuffixAutomaton(std::string_view w, const Alphabet& alphabet);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return states_.size(); }
    const State& state(StateId s) const { return states_[static_cast<std::size_t>(s)]; }

    StateId next(StateId s, std::size_t symbol) const
    {
        return delta_[static_cast<std::size_t>(s) * sigma_ + symbol];
    }

    /// States sorted by increasing `length`; every transition goes forward.
    std::vector<StateId> topological_order() const;

private:
    StateId& slot(StateId s, std::size_t symbol)
    {
        return delta_[static_cast<std::size_t>(s) * sigma_ + symbol];
    }
    StateId add_state(State st);
    void extend(std::size_t symbol, std::int32_t pos);

    Alphabet alphabet_;
    std::size_t sigma_;
    std::vector<State> states_;
    std::vector<StateId> delta_;
    StateId last_ = 0;
};

}  // namespace antidict
