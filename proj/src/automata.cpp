#include "antidict/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace antidict {

// ---------------------------------------------------------------------------
// Trie

Trie::Trie(Alphabet alphabet) : alphabet_(std::move(alphabet)), delta_(alphabet_.size())
{
    delta_.add_state();
    sink_.push_back(false);
    parent_.push_back(kNoState);
    in_symbol_.push_back('\0');
    depth_.push_back(0);
}

std::size_t Trie::sink_count() const
{
    return static_cast<std::size_t>(std::count(sink_.begin(), sink_.end(), true));
}

Word Trie::label(StateId s) const
{
    Word out(depth(s), '\0');
    for (std::size_t i = out.size(); i > 0; --i) {
        out[i - 1] = in_symbol_[static_cast<std::size_t>(s)];
        s = parent(s);
    }
    return out;
}

WordSet Trie::words() const
{
    WordSet out;
    for (std::size_t s = 0; s < size(); ++s) {
        if (sink_[s]) out.insert(label(static_cast<StateId>(s)));
    }
    return out;
}

bool Trie::is_antifactorial() const
{
    // Aho-Corasick over the trie: a state whose proper suffixes include a
    // member means that member occurs inside a longer one.
    const std::size_t sigma = alphabet_.size();
    std::vector<StateId> fail(size(), 0);
    std::vector<bool> member_suffix(size(), false);
    for (std::size_t p = 0; p < size(); ++p) {
        const auto ps = static_cast<StateId>(p);
        for (std::size_t a = 0; a < sigma; ++a) {
            const StateId c = child(ps, a);
            if (c == kNoState) continue;
            if (is_sink(ps)) return false;
            StateId f = kNoState;
            if (ps != root()) {
                StateId q = fail[p];
                while (true) {
                    if (child(q, a) != kNoState) {
                        f = child(q, a);
                        break;
                    }
                    if (q == root()) break;
                    q = fail[static_cast<std::size_t>(q)];
                }
            }
            if (f == kNoState) f = root();
            fail[static_cast<std::size_t>(c)] = f;
            member_suffix[static_cast<std::size_t>(c)] = is_sink(f) || member_suffix[static_cast<std::size_t>(f)];
            if (member_suffix[static_cast<std::size_t>(c)]) return false;
        }
    }
    return true;
}

Trie Trie::from_parts(Alphabet alphabet, std::size_t states,
                      const std::vector<std::tuple<StateId, char, StateId>>& edges,
                      const std::vector<StateId>& sinks)
{
    if (states == 0) throw InvalidInput("trie: needs at least a root state");
    const std::size_t sigma = alphabet.size();
    TransitionTable raw(sigma);
    for (std::size_t i = 0; i < states; ++i) raw.add_state();
    std::vector<int> indegree(states, 0);
    auto in_range = [states](StateId s) { return s >= 0 && static_cast<std::size_t>(s) < states; };
    for (const auto& [from, symbol, to] : edges) {
        if (!in_range(from) || !in_range(to)) throw InvalidInput("trie: edge endpoint out of range");
        const int r = alphabet.rank(symbol);
        if (r == Alphabet::kNoSymbol) throw InvalidInput(std::string("trie: symbol '") + symbol + "' not in alphabet");
        if (raw.get(from, static_cast<std::size_t>(r)) != kNoState) throw InvalidInput("trie: nondeterministic edge");
        raw.set(from, static_cast<std::size_t>(r), to);
        ++indegree[static_cast<std::size_t>(to)];
    }
    std::vector<bool> raw_sink(states, false);
    for (StateId s : sinks) {
        if (!in_range(s)) throw InvalidInput("trie: sink out of range");
        raw_sink[static_cast<std::size_t>(s)] = true;
    }
    if (indegree[0] != 0) throw InvalidInput("trie: root has an incoming edge");
    if (raw_sink[0]) throw InvalidInput("trie: the empty word cannot be a member");

    Trie trie(std::move(alphabet));
    std::vector<StateId> renamed(states, kNoState);
    renamed[0] = 0;
    std::deque<StateId> queue{0};
    while (!queue.empty()) {
        const StateId s = queue.front();
        queue.pop_front();
        const StateId ns = renamed[static_cast<std::size_t>(s)];
        bool leaf = true;
        for (std::size_t a = 0; a < sigma; ++a) {
            const StateId t = raw.get(s, a);
            if (t == kNoState) continue;
            leaf = false;
            if (indegree[static_cast<std::size_t>(t)] != 1 || renamed[static_cast<std::size_t>(t)] != kNoState) {
                throw InvalidInput("trie: graph is not a tree");
            }
            const StateId nt = trie.delta_.add_state();
            trie.sink_.push_back(raw_sink[static_cast<std::size_t>(t)]);
            trie.parent_.push_back(ns);
            trie.in_symbol_.push_back(trie.alphabet_.symbol(a));
            trie.depth_.push_back(trie.depth_[static_cast<std::size_t>(ns)] + 1);
            trie.delta_.set(ns, a, nt);
            renamed[static_cast<std::size_t>(t)] = nt;
            queue.push_back(t);
        }
        if (raw_sink[static_cast<std::size_t>(s)] && !leaf) {
            throw InvalidInput("trie: member \"" + trie.label(ns) + "\" is a proper prefix of another member");
        }
        if (leaf && !raw_sink[static_cast<std::size_t>(s)] && s != 0) {
            throw InvalidInput("trie: leaf \"" + trie.label(ns) + "\" is not a sink");
        }
    }
    if (std::find(renamed.begin(), renamed.end(), kNoState) != renamed.end()) {
        throw InvalidInput("trie: unreachable state");
    }
    return trie;
}

Trie build_trie(const WordSet& words, const Alphabet& alphabet, bool require_antifactorial)
{
    const std::size_t sigma = alphabet.size();
    TransitionTable raw(sigma);
    raw.add_state();
    std::vector<std::tuple<StateId, char, StateId>> edges;
    std::vector<StateId> sinks;
    for (const Word& w : words) {
        if (w.empty()) throw InvalidInput("trie: the empty word cannot be a member");
        alphabet.require_covers(w);
        StateId s = 0;
        for (char c : w) {
            const auto a = static_cast<std::size_t>(alphabet.rank(c));
            StateId t = raw.get(s, a);
            if (t == kNoState) {
                t = raw.add_state();
                raw.set(s, a, t);
                edges.emplace_back(s, c, t);
            }
            s = t;
        }
        sinks.push_back(s);
    }
    Trie trie = Trie::from_parts(alphabet, raw.size(), edges, sinks);
    if (require_antifactorial && !trie.is_antifactorial()) {
        throw NotAntifactorial("set is not antifactorial: some member is a factor of another");
    }
    return trie;
}

WordSet enumerate_language(const Trie& trie, std::size_t max_length)
{
    WordSet out;
    for (const Word& w : trie.words()) {
        if (w.size() <= max_length) out.insert(w);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dfa

Dfa::Dfa(Alphabet alphabet) : alphabet_(std::move(alphabet)), delta_(alphabet_.size()) {}

StateId Dfa::add_state(bool final)
{
    final_.push_back(final);
    if (failure_) failure_->push_back(kNoState);
    return delta_.add_state();
}

std::size_t Dfa::final_count() const
{
    return static_cast<std::size_t>(std::count(final_.begin(), final_.end(), true));
}

std::size_t Dfa::transition_count() const
{
    std::size_t n = 0;
    for (std::size_t s = 0; s < size(); ++s) {
        for (std::size_t a = 0; a < alphabet_.size(); ++a) {
            if (next(static_cast<StateId>(s), a) != kNoState) ++n;
        }
    }
    return n;
}

StateId Dfa::run_from(StateId s, std::string_view w) const
{
    for (char c : w) {
        const int a = alphabet_.rank(c);
        if (a == Alphabet::kNoSymbol) {
            throw InvalidInput(std::string("symbol '") + c + "' is not in alphabet \"" + alphabet_.symbols() + "\"");
        }
        if (s == kNoState) continue;
        s = next(s, static_cast<std::size_t>(a));
    }
    return s;
}

StateId Dfa::run(std::string_view w) const
{
    return run_from(initial_, w);
}

bool accepts(const Dfa& dfa, std::string_view w)
{
    const StateId s = dfa.run(w);
    return s != kNoState && dfa.is_final(s);
}

WordSet enumerate_language(const Dfa& dfa, std::size_t max_length)
{
    if (max_length > kEnumerationMaxLength) throw GuardExceeded("enumerate_language: max_length too large");
    WordSet out;
    std::vector<std::pair<StateId, Word>> level{{dfa.initial(), Word{}}};
    for (std::size_t len = 0;; ++len) {
        for (const auto& [s, w] : level) {
            if (dfa.is_final(s)) out.insert(w);
        }
        if (len == max_length) break;
        std::vector<std::pair<StateId, Word>> next_level;
        for (const auto& [s, w] : level) {
            for (std::size_t a = 0; a < dfa.alphabet().size(); ++a) {
                const StateId t = dfa.next(s, a);
                if (t == kNoState) continue;
                next_level.emplace_back(t, w + dfa.alphabet().symbol(a));
            }
        }
        if (next_level.size() > kEnumerationMaxWords) throw GuardExceeded("enumerate_language: too many words");
        if (next_level.empty()) break;
        level = std::move(next_level);
    }
    return out;
}

Dfa canonical_form(const Dfa& dfa)
{
    const std::size_t sigma = dfa.alphabet().size();
    std::vector<StateId> renamed(dfa.size(), kNoState);
    std::vector<StateId> order;
    order.reserve(dfa.size());
    renamed[static_cast<std::size_t>(dfa.initial())] = 0;
    order.push_back(dfa.initial());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t a = 0; a < sigma; ++a) {
            const StateId t = dfa.next(order[i], a);
            if (t == kNoState || renamed[static_cast<std::size_t>(t)] != kNoState) continue;
            renamed[static_cast<std::size_t>(t)] = static_cast<StateId>(order.size());
            order.push_back(t);
        }
    }
    Dfa out(dfa.alphabet());
    for (StateId s : order) out.add_state(dfa.is_final(s));
    out.set_initial(0);
    if (dfa.has_failure()) out.enable_failure();
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto ns = static_cast<StateId>(i);
        for (std::size_t a = 0; a < sigma; ++a) {
            const StateId t = dfa.next(order[i], a);
            if (t != kNoState) out.set_next(ns, a, renamed[static_cast<std::size_t>(t)]);
        }
        if (dfa.has_failure()) {
            const StateId f = dfa.failure(order[i]);
            out.set_failure(ns, f == kNoState ? kNoState : renamed[static_cast<std::size_t>(f)]);
        }
    }
    return out;
}

bool isomorphic(const Dfa& a, const Dfa& b)
{
    if (!(a.alphabet() == b.alphabet())) return false;
    return same_structure(canonical_form(a), canonical_form(b));
}

Dfa minimize(const Dfa& dfa)
{
    // Moore partition refinement on the reachable part, completed with a
    // dead state (last index).
    const Dfa reach = canonical_form(dfa);
    const std::size_t sigma = reach.alphabet().size();
    const std::size_t n = reach.size();
    const std::size_t dead = n;
    auto target = [&](std::size_t s, std::size_t a) -> std::size_t {
        if (s == dead) return dead;
        const StateId t = reach.next(static_cast<StateId>(s), a);
        return t == kNoState ? dead : static_cast<std::size_t>(t);
    };

    std::vector<int> cls(n + 1, 0);
    for (std::size_t s = 0; s < n; ++s) cls[s] = reach.is_final(static_cast<StateId>(s)) ? 1 : 0;
    std::size_t classes = 0;
    while (true) {
        std::map<std::vector<int>, int> ids;
        std::vector<int> next_cls(n + 1);
        std::vector<int> sig(sigma + 1);
        for (std::size_t s = 0; s <= n; ++s) {
            sig[0] = cls[s];
            for (std::size_t a = 0; a < sigma; ++a) sig[a + 1] = cls[target(s, a)];
            const auto [it, inserted] = ids.emplace(sig, static_cast<int>(ids.size()));
            next_cls[s] = it->second;
        }
        cls = std::move(next_cls);
        if (ids.size() == classes) break;
        classes = ids.size();
    }

    const int dead_class = cls[dead];
    Dfa out(reach.alphabet());
    std::vector<StateId> state_of(classes, kNoState);
    for (std::size_t s = 0; s < n; ++s) {
        const auto c = static_cast<std::size_t>(cls[s]);
        if (cls[s] == dead_class || state_of[c] != kNoState) continue;
        state_of[c] = out.add_state(reach.is_final(static_cast<StateId>(s)));
    }
    if (cls[0] == dead_class) {
        Dfa empty(reach.alphabet());
        empty.add_state(false);
        return empty;
    }
    for (std::size_t s = 0; s < n; ++s) {
        if (cls[s] == dead_class) continue;
        const StateId from = state_of[static_cast<std::size_t>(cls[s])];
        for (std::size_t a = 0; a < sigma; ++a) {
            const int tc = cls[target(s, a)];
            if (tc != dead_class) out.set_next(from, a, state_of[static_cast<std::size_t>(tc)]);
        }
    }
    out.set_initial(state_of[static_cast<std::size_t>(cls[0])]);
    return canonical_form(out);
}

bool equivalent(const Dfa& a, const Dfa& b)
{
    if (!(a.alphabet() == b.alphabet())) {
        throw InvalidInput("equivalent: alphabets differ (\"" + a.alphabet().symbols() + "\" vs \"" +
                           b.alphabet().symbols() + "\")");
    }
    return same_structure(minimize(a), minimize(b));
}

Dfa strip_sinks(const Dfa& dfa)
{
    const std::size_t sigma = dfa.alphabet().size();
    std::vector<StateId> renamed(dfa.size(), kNoState);
    Dfa out(dfa.alphabet());
    if (dfa.has_failure()) out.enable_failure();
    for (std::size_t s = 0; s < dfa.size(); ++s) {
        const auto id = static_cast<StateId>(s);
        bool absorbing = !dfa.is_final(id) && id != dfa.initial();
        for (std::size_t a = 0; a < sigma && absorbing; ++a) absorbing = dfa.next(id, a) == id;
        if (!absorbing) renamed[s] = out.add_state(dfa.is_final(id));
    }
    for (std::size_t s = 0; s < dfa.size(); ++s) {
        const StateId from = renamed[s];
        if (from == kNoState) continue;
        for (std::size_t a = 0; a < sigma; ++a) {
            const StateId t = dfa.next(static_cast<StateId>(s), a);
            if (t != kNoState && renamed[static_cast<std::size_t>(t)] != kNoState) {
                out.set_next(from, a, renamed[static_cast<std::size_t>(t)]);
            }
        }
        if (dfa.has_failure()) {
            const StateId f = dfa.failure(static_cast<StateId>(s));
            out.set_failure(from, f == kNoState ? kNoState : renamed[static_cast<std::size_t>(f)]);
        }
    }
    out.set_initial(renamed[static_cast<std::size_t>(dfa.initial())]);
    return out;
}

}  // namespace antidict
