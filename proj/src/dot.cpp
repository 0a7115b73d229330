#include <sstream>

#include "antidict/automata.hpp"

namespace antidict {

namespace {

std::string escape(char c)
{
    switch (c) {
    case '"': return "\\\"";
    case '\\': return "\\\\";
    case '\n': return "\\n";
    default: return std::string(1, c);
    }
}

void header(std::ostringstream& os, const std::string& name)
{
    os << "digraph \"";
    for (char c : name) os << escape(c);
    os << "\" {\n  rankdir=LR;\n  node [shape=circle];\n";
}

void node(std::ostringstream& os, std::size_t id, bool final, bool initial)
{
    os << "  " << id << " [label=\"" << id << "\"";
    if (final) os << ", shape=doublecircle";
    if (initial) os << ", style=bold";
    os << "];\n";
}

}  // namespace

std::string export_dot(const Dfa& dfa, const std::string& name)
{
    // States are labelled by BFS order from the initial state.
    const Dfa d = canonical_form(dfa);
    std::ostringstream os;
    header(os, name);
    for (std::size_t s = 0; s < d.size(); ++s) node(os, s, d.is_final(static_cast<StateId>(s)), s == 0);
    for (std::size_t s = 0; s < d.size(); ++s) {
        for (std::size_t a = 0; a < d.alphabet().size(); ++a) {
            const StateId t = d.next(static_cast<StateId>(s), a);
            if (t == kNoState) continue;
            os << "  " << s << " -> " << t << " [label=\"" << escape(d.alphabet().symbol(a)) << "\"];\n";
        }
    }
    if (d.has_failure()) {
        for (std::size_t s = 0; s < d.size(); ++s) {
            const StateId f = d.failure(static_cast<StateId>(s));
            if (f != kNoState) os << "  " << s << " -> " << f << " [style=dashed];\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string export_dot(const Trie& trie, const std::string& name)
{
    std::ostringstream os;
    header(os, name);
    for (std::size_t s = 0; s < trie.size(); ++s) node(os, s, trie.is_sink(static_cast<StateId>(s)), s == 0);
    for (std::size_t s = 0; s < trie.size(); ++s) {
        for (std::size_t a = 0; a < trie.alphabet().size(); ++a) {
            const StateId t = trie.child(static_cast<StateId>(s), a);
            if (t == kNoState) continue;
            os << "  " << s << " -> " << t << " [label=\"" << escape(trie.alphabet().symbol(a)) << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace antidict
