#include "antidict/reconstruction.hpp"

#include <algorithm>
#include <limits>

#include "antidict/l_automaton.hpp"

namespace antidict {

namespace {

enum class Mark : unsigned char { unvisited, on_stack, done };

}  // namespace

Word first_cycle_label(const Dfa& dfa)
{
    const std::size_t sigma = dfa.alphabet().size();
    std::vector<Mark> mark(dfa.size(), Mark::unvisited);
    struct Frame {
        StateId state;
        std::size_t next_symbol;
    };
    std::vector<Frame> stack{{dfa.initial(), 0}};
    Word path;  // path[k] labels the edge stack[k] -> stack[k + 1]
    mark[static_cast<std::size_t>(dfa.initial())] = Mark::on_stack;
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next_symbol == sigma) {
            mark[static_cast<std::size_t>(top.state)] = Mark::done;
            stack.pop_back();
            if (!path.empty()) path.pop_back();
            continue;
        }
        const std::size_t a = top.next_symbol++;
        const StateId t = dfa.next(top.state, a);
        if (t == kNoState) continue;
        const char c = dfa.alphabet().symbol(a);
        switch (mark[static_cast<std::size_t>(t)]) {
        case Mark::on_stack: {
            std::size_t k = stack.size() - 1;
            while (stack[k].state != t) --k;
            return path.substr(k) + c;
        }
        case Mark::unvisited:
            mark[static_cast<std::size_t>(t)] = Mark::on_stack;
            path.push_back(c);
            stack.push_back({t, 0});
            break;
        case Mark::done:
            break;
        }
    }
    return {};
}

Word reconstruct_word(const MfwSet& set)
{
    const Dfa dfa = avoiding_dfa(set);
    const std::size_t sigma = dfa.alphabet().size();
    const std::size_t n = dfa.size();

    // Kahn's order over the states reachable from the initial state.
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t a = 0; a < sigma; ++a) {
            const StateId t = dfa.next(static_cast<StateId>(s), a);
            if (t != kNoState) ++indegree[static_cast<std::size_t>(t)];
        }
    }
    std::vector<StateId> order;
    order.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        if (indegree[s] == 0) order.push_back(static_cast<StateId>(s));
    }
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (std::size_t a = 0; a < sigma; ++a) {
            const StateId t = dfa.next(order[k], a);
            if (t != kNoState && --indegree[static_cast<std::size_t>(t)] == 0) order.push_back(t);
        }
    }
    if (order.size() != n) {
        throw ReconstructionError(ReconstructionError::Kind::cycle,
                                  "the words avoiding this set form an infinite language; "
                                  "it is not the antidictionary of a finite word");
    }

    // Longest path from the initial state, counting how many words reach it.
    constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> longest(n, kUnreached);
    std::vector<std::size_t> ways(n, 0);
    std::vector<StateId> from(n, kNoState);
    std::vector<char> via(n, '\0');
    longest[static_cast<std::size_t>(dfa.initial())] = 0;
    ways[static_cast<std::size_t>(dfa.initial())] = 1;
    for (StateId s : order) {
        const auto si = static_cast<std::size_t>(s);
        if (longest[si] == kUnreached) continue;
        for (std::size_t a = 0; a < sigma; ++a) {
            const StateId t = dfa.next(s, a);
            if (t == kNoState) continue;
            const auto ti = static_cast<std::size_t>(t);
            if (longest[ti] == kUnreached || longest[si] + 1 > longest[ti]) {
                longest[ti] = longest[si] + 1;
                ways[ti] = ways[si];
                from[ti] = s;
                via[ti] = dfa.alphabet().symbol(a);
            } else if (longest[si] + 1 == longest[ti]) {
                ways[ti] = std::min<std::size_t>(2, ways[ti] + ways[si]);
            }
        }
    }
    std::size_t best = 0;
    std::size_t best_ways = 0;
    StateId end = dfa.initial();
    for (std::size_t s = 0; s < n; ++s) {
        if (longest[s] == kUnreached) continue;
        if (longest[s] > best) {
            best = longest[s];
            best_ways = ways[s];
            end = static_cast<StateId>(s);
        } else if (longest[s] == best) {
            best_ways = std::min<std::size_t>(2, best_ways + ways[s]);
        }
    }
    if (best == 0) throw ReconstructionError(ReconstructionError::Kind::mismatch, "the set forbids every letter");
    if (best_ways > 1) {
        throw ReconstructionError(ReconstructionError::Kind::ambiguous,
                                  "several longest words avoid this set; it is not the antidictionary of a single word");
    }
    Word w(best, '\0');
    for (std::size_t i = best; i > 0; --i) {
        w[i - 1] = via[static_cast<std::size_t>(end)];
        end = from[static_cast<std::size_t>(end)];
    }
    if (mfw_linear(w, set.alphabet).words != set.words) {
        throw ReconstructionError(ReconstructionError::Kind::mismatch,
                                  "longest avoiding word \"" + w + "\" has a different antidictionary");
    }
    return w;
}

CircularWord reconstruct_circular(const MfwSet& set)
{
    const Dfa dfa = avoiding_dfa(set);
    const Word label = first_cycle_label(dfa);
    if (label.empty()) {
        throw ReconstructionError(ReconstructionError::Kind::no_cycle,
                                  "the words avoiding this set form a finite language; it is not the "
                                  "antidictionary of a circular word");
    }
    CircularWord cw(label);
    if (mfw_circular(cw, set.alphabet).words != set.words) {
        throw ReconstructionError(ReconstructionError::Kind::mismatch,
                                  "cycle \"" + label + "\" has a different antidictionary");
    }
    return cw;
}

}  // namespace antidict
