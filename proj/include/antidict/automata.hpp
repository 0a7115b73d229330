#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "antidict/core.hpp"

namespace antidict {

using StateId = std::int32_t;
inline constexpr StateId kNoState = -1;

/// Dense transition table over an alphabet: `sigma` slots per state, kNoState
/// where the transition is undefined.
class TransitionTable {
public:
    explicit TransitionTable(std::size_t sigma) : sigma_(sigma) {}

    std::size_t sigma() const noexcept { return sigma_; }
    std::size_t size() const noexcept { return sigma_ == 0 ? 0 : table_.size() / sigma_; }

    StateId add_state()
    {
        table_.resize(table_.size() + sigma_, kNoState);
        return static_cast<StateId>(size() - 1);
    }
    StateId get(StateId s, std::size_t symbol) const { return table_[index(s, symbol)]; }
    void set(StateId s, std::size_t symbol, StateId to) { table_[index(s, symbol)] = to; }

    friend bool operator==(const TransitionTable&, const TransitionTable&) = default;

private:
    std::size_t index(StateId s, std::size_t symbol) const { return static_cast<std::size_t>(s) * sigma_ + symbol; }

    std::size_t sigma_;
    std::vector<StateId> table_;
};

/// Tree-shaped acceptor of a finite set of words. State 0 is the root; states
/// are numbered breadth-first with children in alphabet order, so a state's
/// id is larger than its parent's. Members end at sinks, which have no
/// outgoing edges.
class Trie {
public:
    explicit Trie(Alphabet alphabet);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return sink_.size(); }
    StateId root() const noexcept { return 0; }
    StateId child(StateId s, std::size_t symbol) const { return delta_.get(s, symbol); }
    bool is_sink(StateId s) const { return sink_[static_cast<std::size_t>(s)]; }
    std::size_t sink_count() const;
    StateId parent(StateId s) const { return parent_[static_cast<std::size_t>(s)]; }
    std::size_t depth(StateId s) const { return depth_[static_cast<std::size_t>(s)]; }
    /// Word spelled from the root to `s`.
    Word label(StateId s) const;

    /// Words spelled root to sink, in short-lex order.
    WordSet words() const;
    /// No member is a proper factor of another.
    bool is_antifactorial() const;

    /// Builds a trie from explicit parts. Throws InvalidInput unless the parts
    /// form a tree rooted at 0 whose sinks are exactly its leaves. State ids
    /// are renumbered breadth-first.
    static Trie from_parts(Alphabet alphabet, std::size_t states,
                           const std::vector<std::tuple<StateId, char, StateId>>& edges,
                           const std::vector<StateId>& sinks);

private:
    friend Trie build_trie(const WordSet&, const Alphabet&, bool);

    Alphabet alphabet_;
    TransitionTable delta_;
    std::vector<bool> sink_;
    std::vector<StateId> parent_;
    std::vector<char> in_symbol_;
    std::vector<std::size_t> depth_;
};

/// Deterministic automaton with a partial transition function and optional
/// failure links.
class Dfa {
public:
    explicit Dfa(Alphabet alphabet);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return final_.size(); }
    StateId initial() const noexcept { return initial_; }
    void set_initial(StateId s) { initial_ = s; }

    StateId add_state(bool final = false);
    bool is_final(StateId s) const { return final_[static_cast<std::size_t>(s)]; }
    void set_final(StateId s, bool final) { final_[static_cast<std::size_t>(s)] = final; }
    std::size_t final_count() const;

    StateId next(StateId s, std::size_t symbol) const { return delta_.get(s, symbol); }
    void set_next(StateId s, std::size_t symbol, StateId to) { delta_.set(s, symbol, to); }
    std::size_t transition_count() const;

    bool has_failure() const noexcept { return failure_.has_value(); }
    /// kNoState for the initial state or when links are absent.
    StateId failure(StateId s) const
    {
        return failure_ ? (*failure_)[static_cast<std::size_t>(s)] : kNoState;
    }
    void enable_failure() { failure_.emplace(size(), kNoState); }
    void set_failure(StateId s, StateId to) { (*failure_)[static_cast<std::size_t>(s)] = to; }
    void clear_failure() { failure_.reset(); }

    /// Runs `w` from the initial state; kNoState when a transition is missing.
    /// Throws InvalidInput for symbols outside the alphabet.
    StateId run(std::string_view w) const;
    StateId run_from(StateId s, std::string_view w) const;

    /// Same transition structure and final states (failure links ignored).
    friend bool same_structure(const Dfa& a, const Dfa& b)
    {
        return a.alphabet_ == b.alphabet_ && a.initial_ == b.initial_ && a.final_ == b.final_ && a.delta_ == b.delta_;
    }

private:
    Alphabet alphabet_;
    StateId initial_ = 0;
    std::vector<bool> final_;
    TransitionTable delta_;
    std::optional<std::vector<StateId>> failure_;
};

/// Trie of a finite set. With `require_antifactorial`, throws
/// NotAntifactorial if some member is a proper factor of another. A member
/// that is a proper prefix of another is always rejected.
Trie build_trie(const WordSet& words, const Alphabet& alphabet, bool require_antifactorial = false);

bool accepts(const Dfa& dfa, std::string_view w);

/// Accepted words of length <= max_length. Throws GuardExceeded past
/// kEnumerationMaxLength or kEnumerationMaxWords.
WordSet enumerate_language(const Dfa& dfa, std::size_t max_length);
/// Words of the trie (root to sink) of length <= max_length.
WordSet enumerate_language(const Trie& trie, std::size_t max_length);

/// Drops unreachable states and renumbers the rest in canonical BFS order
/// (alphabet order of edges). Failure links are carried along when present.
Dfa canonical_form(const Dfa& dfa);

/// Two automata that are equal up to a renaming of states.
bool isomorphic(const Dfa& a, const Dfa& b);

/// Unique minimal DFA (partial: the dead state is removed), canonically
/// numbered. Failure links are not kept.
Dfa minimize(const Dfa& dfa);

/// Language equality. Throws InvalidInput if the alphabets differ.
bool equivalent(const Dfa& a, const Dfa& b);

/// Removes absorbing non-final states (every symbol loops back) and the
/// transitions into them.
Dfa strip_sinks(const Dfa& dfa);

/// Graphviz rendering. Final states (trie sinks) are double circles; failure
/// links are dashed edges.
std::string export_dot(const Dfa& dfa, const std::string& name = "automaton");
std::string export_dot(const Trie& trie, const std::string& name = "trie");

}  // namespace antidict
