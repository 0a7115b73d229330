// antidict: minimal forbidden words, factor automata and reconstruction from
// the command line.
//
// Exit codes: 0 success, 1 a verification failed, 2 bad input.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "antidict/automata.hpp"
#include "antidict/factor_automaton.hpp"
#include "antidict/fibonacci.hpp"
#include "antidict/l_automaton.hpp"
#include "antidict/mfw.hpp"
#include "antidict/reconstruction.hpp"
#include "antidict/serialize.hpp"
#include "antidict/verify.hpp"

namespace {

using namespace antidict;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

/// "-" reads stdin, an existing path reads the file, anything else is taken
/// as the JSON text itself.
std::string read_source(const std::string& arg)
{
    if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg);
        if (!in) throw InvalidInput("cannot read " + arg);
        return {std::istreambuf_iterator<char>(in), {}};
    }
    return arg;
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out << text;
    if (!out) throw InvalidInput("failed writing " + path);
}

Alphabet alphabet_for(const std::string& word, const std::string& symbols)
{
    if (word.empty()) throw InvalidInput("word must not be empty");
    return symbols.empty() ? Alphabet::of(word) : Alphabet(symbols);
}

struct MfwOptions {
    std::string word;
    std::string alphabet;
    bool circular = false;
    bool json = false;
};

int run_mfw(const MfwOptions& o)
{
    const Alphabet alphabet = alphabet_for(o.word, o.alphabet);
    alphabet.require_covers(o.word);
    const MfwSet set = o.circular ? mfw_circular(CircularWord(o.word), alphabet) : mfw_linear(o.word, alphabet);
    if (o.json) {
        std::cout << to_json(set).dump() << '\n';
    } else {
        for (const Word& m : set.words) std::cout << m << '\n';
    }
    return kExitOk;
}

struct AutomatonOptions {
    std::string word;
    std::string alphabet;
    bool circular = false;
    std::string dot_path;
    bool stats = false;
    bool json = false;
};

void print_stats(const Dfa& dfa)
{
    std::cout << "states=" << dfa.size() << '\n'
              << "transitions=" << dfa.transition_count() << '\n'
              << "finals=" << dfa.final_count() << '\n';
}

int run_automaton(const AutomatonOptions& o)
{
    const Alphabet alphabet = alphabet_for(o.word, o.alphabet);
    alphabet.require_covers(o.word);
    const Dfa dfa = o.circular ? circular_factor_dfa(CircularWord(o.word), alphabet)
                               : build_factor_automaton(o.word, alphabet);
    if (!o.dot_path.empty()) write_file(o.dot_path, export_dot(dfa));
    if (o.stats) print_stats(dfa);
    if (o.json) std::cout << to_json(dfa).dump() << '\n';
    if (!o.stats && !o.json && o.dot_path.empty()) std::cout << export_dot(dfa);
    return kExitOk;
}

struct ReconstructOptions {
    std::string mfw;
    bool circular = false;
};

int run_reconstruct(const ReconstructOptions& o)
{
    const MfwSet set = mfw_from_json(parse_json(read_source(o.mfw)));
    if (o.circular || set.source == MfwSet::Source::circular) {
        std::cout << reconstruct_circular(set).linearization() << '\n';
    } else {
        std::cout << reconstruct_word(set) << '\n';
    }
    return kExitOk;
}

struct LAutomatonOptions {
    std::string trie;
    bool keep_sinks = false;
    std::string dot_path;
    bool stats = false;
};

int run_l_automaton(const LAutomatonOptions& o)
{
    const Trie trie = trie_from_json(parse_json(read_source(o.trie)));
    Dfa dfa = l_automaton(trie);
    if (!o.keep_sinks) dfa = strip_sinks(dfa);
    if (!o.dot_path.empty()) write_file(o.dot_path, export_dot(dfa));
    if (o.stats) print_stats(dfa);
    if (!o.stats && o.dot_path.empty()) std::cout << to_json(dfa).dump() << '\n';
    return kExitOk;
}

struct FibOptions {
    std::size_t n = 0;
    std::size_t upto = 0;
    bool json = false;
};

int run_fib_check(const FibOptions& o)
{
    if ((o.n == 0) == (o.upto == 0)) throw InvalidInput("fib-check: give exactly one of --n or --upto");
    const std::size_t first = o.n != 0 ? o.n : 1;
    const std::size_t last = o.n != 0 ? o.n : o.upto;
    if (last > kFibonacciMaxIndex) {
        throw GuardExceeded("fib-check: index " + std::to_string(last) + " exceeds " +
                            std::to_string(kFibonacciMaxIndex));
    }
    bool all = true;
    nlohmann::json rows = nlohmann::json::array();
    if (!o.json) {
        std::cout << std::left << std::setw(4) << "n" << std::setw(9) << "F_n" << std::setw(5) << "|M|"
                  << std::setw(10) << "circular" << std::setw(8) << "linear" << std::setw(6) << "ok"
                  << "M_[f_n]\n";
    }
    for (std::size_t n = first; n <= last; ++n) {
        const FibonacciReport r = verify_fibonacci(n);
        all = all && r.passed();
        if (o.json) {
            nlohmann::json row = {{"n", n}, {"length", r.length}, {"circular_states", r.circular_states},
                                  {"linear_states", r.linear_states}, {"passed", r.passed()},
                                  {"mfw", to_json(r.mfw)["mfw"]}};
            for (const auto& c : r.checks) row["checks"][c.name] = c.passed;
            rows.push_back(std::move(row));
            continue;
        }
        std::ostringstream set;
        set << '{';
        bool first_word = true;
        for (const Word& w : r.mfw.words) {
            set << (first_word ? "" : ", ") << w;
            first_word = false;
        }
        set << '}';
        std::cout << std::left << std::setw(4) << n << std::setw(9) << r.length << std::setw(5) << r.mfw.size()
                  << std::setw(10) << r.circular_states << std::setw(8) << r.linear_states << std::setw(6)
                  << (r.passed() ? "pass" : "FAIL") << (r.length <= 64 ? set.str() : "(omitted)") << '\n';
        for (const auto& c : r.checks) {
            if (!c.passed) std::cout << "    " << c.name << ": " << c.detail << '\n';
        }
    }
    if (o.json) std::cout << rows.dump(2) << '\n';
    return all ? kExitOk : kExitVerification;
}

struct VerifyOptions {
    bool exhaustive = false;
    std::size_t max_length = 10;
    std::optional<std::size_t> ternary_max;
};

int run_verify(const VerifyOptions& o)
{
    if (!o.exhaustive) throw InvalidInput("verify: only --exhaustive is supported");
    if (o.max_length < 1 || o.max_length > 16) throw GuardExceeded("verify: --maxlen must be in [1, 16]");
    const std::size_t ternary = o.ternary_max.value_or(std::min<std::size_t>(o.max_length, 7));
    if (ternary > 10) throw GuardExceeded("verify: --ternary-maxlen must be at most 10");
    bool all = true;
    for (const auto& r : run_exhaustive(o.max_length, ternary)) {
        all = all && r.passed();
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases";
        if (r.failures) std::cout << ", " << r.failures << " failures; first: " << r.first_failure;
        std::cout << ")\n";
    }
    std::cout << (all ? "all properties hold" : "some properties FAILED") << '\n';
    return all ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Minimal forbidden words, factor automata and antidictionary reconstruction"};
    app.require_subcommand(1);

    MfwOptions mfw;
    auto* mfw_cmd = app.add_subcommand("mfw", "Print the minimal forbidden words of a word");
    mfw_cmd->add_option("word", mfw.word, "Input word")->required();
    mfw_cmd->add_option("--alphabet", mfw.alphabet, "Alphabet symbols (default: letters of the word)");
    mfw_cmd->add_flag("--circular", mfw.circular, "Treat the word as circular");
    mfw_cmd->add_flag("--json", mfw.json, "JSON output");

    AutomatonOptions aut;
    auto* aut_cmd = app.add_subcommand("automaton", "Build the factor automaton of a word");
    aut_cmd->add_option("word", aut.word, "Input word")->required();
    aut_cmd->add_option("--alphabet", aut.alphabet, "Alphabet symbols (default: letters of the word)");
    aut_cmd->add_flag("--circular", aut.circular, "Factor automaton of the circular word");
    aut_cmd->add_flag("--linear", "Factor automaton of the linear word (default)");
    aut_cmd->add_option("--dot", aut.dot_path, "Write Graphviz output to this path");
    aut_cmd->add_flag("--stats", aut.stats, "Print state and transition counts");
    aut_cmd->add_flag("--json", aut.json, "Print the automaton as JSON");

    ReconstructOptions rec;
    auto* rec_cmd = app.add_subcommand("reconstruct", "Recover a word from its minimal forbidden words");
    rec_cmd->add_option("--mfw", rec.mfw, "JSON set: inline text, a file path, or - for stdin")->required();
    rec_cmd->add_flag("--circular", rec.circular, "Recover a circular word");

    LAutomatonOptions laut;
    auto* laut_cmd = app.add_subcommand("l-automaton", "Run the L-automaton construction on a trie");
    laut_cmd->add_option("--from-trie", laut.trie, "Trie JSON: inline text, a file path, or -")->required();
    laut_cmd->add_flag("--keep-sinks", laut.keep_sinks, "Do not remove the absorbing sink states");
    laut_cmd->add_option("--dot", laut.dot_path, "Write Graphviz output to this path");
    laut_cmd->add_flag("--stats", laut.stats, "Print state and transition counts");

    FibOptions fib;
    auto* fib_cmd = app.add_subcommand("fib-check", "Check the circular Fibonacci word properties");
    fib_cmd->add_option("--n", fib.n, "Single index");
    fib_cmd->add_option("--upto", fib.upto, "All indices from 1 to this one");
    fib_cmd->add_flag("--json", fib.json, "JSON output");

    VerifyOptions ver;
    auto* ver_cmd = app.add_subcommand("verify", "Run the exhaustive property suite");
    ver_cmd->add_flag("--exhaustive", ver.exhaustive, "Sweep every small word");
    ver_cmd->add_option("--maxlen", ver.max_length, "Longest binary word");
    ver_cmd->add_option("--ternary-maxlen", ver.ternary_max, "Longest ternary word (default min(maxlen, 7))");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*mfw_cmd) return run_mfw(mfw);
        if (*aut_cmd) return run_automaton(aut);
        if (*rec_cmd) return run_reconstruct(rec);
        if (*laut_cmd) return run_l_automaton(laut);
        if (*fib_cmd) return run_fib_check(fib);
        if (*ver_cmd) return run_verify(ver);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerification;
    }
    return kExitInput;
}
