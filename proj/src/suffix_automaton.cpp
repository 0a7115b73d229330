#include "antidict/suffix_automaton.hpp"

#include <algorithm>

namespace antidict {

SuffixAutomaton::SuffixAutomaton(std::string_view w, const Alphabet& alphabet)
    : alphabet_(alphabet), sigma_(alphabet.size())
{
    alphabet_.require_covers(w);
    states_.reserve(2 * w.size() + 1);
    delta_.reserve((2 * w.size() + 1) * sigma_);
    add_state(State{});
    for (std::size_t i = 0; i < w.size(); ++i) {
        extend(static_cast<std::size_t>(alphabet_.rank(w[i])), static_cast<std::int32_t>(i));
    }
}

SuffixAutomaton::StateId SuffixAutomaton::add_state(State st)
{
    states_.push_back(st);
    delta_.resize(delta_.size() + sigma_, kNone);
    return static_cast<StateId>(states_.size() - 1);
}

void SuffixAutomaton::extend(std::size_t symbol, std::int32_t pos)
{
    const StateId cur = add_state(State{state(last_).length + 1, kNone, pos});
    StateId p = last_;
    while (p != kNone && next(p, symbol) == kNone) {
        slot(p, symbol) = cur;
        p = state(p).link;
    }
    if (p == kNone) {
        states_[static_cast<std::size_t>(cur)].link = 0;
    } else {
        const StateId q = next(p, symbol);
        if (state(p).length + 1 == state(q).length) {
            states_[static_cast<std::size_t>(cur)].link = q;
        } else {
            const StateId clone = add_state(State{state(p).length + 1, state(q).link, state(q).end_pos});
            std::copy_n(delta_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(q) * sigma_), sigma_,
                        delta_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(clone) * sigma_));
            while (p != kNone && next(p, symbol) == q) {
                slot(p, symbol) = clone;
                p = state(p).link;
            }
            states_[static_cast<std::size_t>(q)].link = clone;
            states_[static_cast<std::size_t>(cur)].link = clone;
        }
    }
    last_ = cur;
}

std::vector<SuffixAutomaton::StateId> SuffixAutomaton::topological_order() const
{
    const std::size_t max_len = static_cast<std::size_t>(state(last_).length);
    std::vector<std::size_t> count(max_len + 2, 0);
    for (const auto& st : states_) ++count[static_cast<std::size_t>(st.length) + 1];
    for (std::size_t i = 1; i < count.size(); ++i) count[i] += count[i - 1];
    std::vector<StateId> order(states_.size());
    for (std::size_t s = 0; s < states_.size(); ++s) {
        order[count[static_cast<std::size_t>(states_[s].length)]++] = static_cast<StateId>(s);
    }
    return order;
}

}  // namespace antidict
