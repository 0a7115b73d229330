#include "antidict/fibonacci.hpp"

#include <algorithm>

#include "antidict/factor_automaton.hpp"
#include "antidict/l_automaton.hpp"

namespace antidict {

FibonacciFamily fibonacci_family(std::size_t n)
{
    if (n == 0) throw InvalidInput("fibonacci_family: index starts at 1");
    if (n > kFibonacciMaxIndex) {
        throw GuardExceeded("fibonacci_family: index " + std::to_string(n) + " exceeds " +
                            std::to_string(kFibonacciMaxIndex));
    }
    Word older = "b";
    Word current = n == 1 ? "b" : "a";
    for (std::size_t k = 3; k <= n; ++k) {
        Word next = current + older;
        older = std::move(current);
        current = std::move(next);
    }
    FibonacciFamily fam;
    fam.n = n;
    fam.f = current;
    fam.length = current.size();
    if (n >= 3) {
        fam.central = current.substr(0, current.size() - 2);
        const char x = n % 2 == 1 ? 'a' : 'b';
        const char y = x == 'a' ? 'b' : 'a';
        fam.singular = x + fam.central + x;
        fam.g = y + fam.central + y;
    }
    return fam;
}

bool verify_central_identity(std::size_t n)
{
    if (n < 5) throw InvalidInput("verify_central_identity: needs n >= 5");
    const auto fn = fibonacci_family(n);
    const auto f1 = fibonacci_family(n - 1);
    const auto f2 = fibonacci_family(n - 2);
    const Word xy = n % 2 == 1 ? "ab" : "ba";
    const Word yx = reversal(xy);
    return fn.f == fn.central + xy && fn.f == f1.central + yx + f2.central + xy &&
           fn.f == f2.central + xy + f1.central + xy;
}

MfwSet mfw_fibonacci_closed_form(std::size_t n)
{
    const auto fam = fibonacci_family(n);
    MfwSet out{{}, Alphabet("ab"), MfwSet::Source::circular, fam.f};
    switch (n) {
    case 1: out.words = {"a"}; return out;
    case 2: out.words = {"b"}; return out;
    case 3: out.words = {"aa", "bb"}; return out;
    default: break;
    }
    for (std::size_t i = 3; i <= n; ++i) out.words.insert(fibonacci_family(i).g);
    out.words.insert(fam.singular);
    return out;
}

bool FibonacciReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const FibonacciCheck& c) { return c.passed; });
}

namespace {

std::string join(const WordSet& words)
{
    std::string out = "{";
    for (const Word& w : words) {
        if (out.size() > 1) out += ", ";
        out += w;
    }
    return out + "}";
}

/// Longest prefix of `s` with a second occurrence, via the Z-array.
std::size_t longest_repeated_prefix(std::string_view s)
{
    const std::size_t n = s.size();
    std::vector<std::size_t> z(n, 0);
    std::size_t best = 0;
    for (std::size_t i = 1, l = 0, r = 0; i < n; ++i) {
        if (i < r) z[i] = std::min(r - i, z[i - l]);
        while (i + z[i] < n && s[z[i]] == s[i + z[i]]) ++z[i];
        if (i + z[i] > r) {
            l = i;
            r = i + z[i];
        }
        best = std::max(best, z[i]);
    }
    return best;
}

}  // namespace

FibonacciReport verify_fibonacci(std::size_t n)
{
    const auto fam = fibonacci_family(n);
    const Alphabet ab("ab");
    const CircularWord cw(fam.f);
    FibonacciReport report;
    report.n = n;
    report.length = fam.length;
    report.mfw = mfw_circular(cw, ab);
    auto check = [&report](std::string name, bool ok, std::string detail = {}) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    };

    const MfwSet closed = mfw_fibonacci_closed_form(n);
    check("closed_form", report.mfw.words == closed.words,
          "computed " + join(report.mfw.words) + ", expected " + join(closed.words));

    if (n >= 3) {
        WordSet centrals;
        for (std::size_t i = 3; i <= n; ++i) centrals.insert(fibonacci_family(i).central);
        const WordSet bispecial = bispecial_factors(fam.f + fam.f, ab);
        check("bispecial", bispecial == centrals, "bispecial factors of f_n f_n: " + join(bispecial));
    }
    if (n >= 4) {
        check("cardinality", report.mfw.size() == n - 1,
              "|M| = " + std::to_string(report.mfw.size()) + ", n - 1 = " + std::to_string(n - 1));
    }
    report.circular_states = circular_factor_dfa(cw, ab).size();
    check("circular_states", report.circular_states == 2 * fam.length - 1,
          std::to_string(report.circular_states) + " states, 2F_n - 1 = " + std::to_string(2 * fam.length - 1));
    report.linear_states = build_factor_automaton(fam.f, ab).size();
    check("linear_states", report.linear_states == fam.length + 1,
          std::to_string(report.linear_states) + " states, F_n + 1 = " + std::to_string(fam.length + 1));
    check("balanced", is_balanced(fam.f + fam.f, ab));
    if (n >= 5) {
        check("central_identity", verify_central_identity(n));
        const char x = n % 2 == 1 ? 'a' : 'b';
        const char y = x == 'a' ? 'b' : 'a';
        const Word probe = fam.central + x + y + fam.central;
        const std::size_t lrp = longest_repeated_prefix(probe);
        check("repeated_prefix", lrp == fam.central.size(),
              "longest repeated prefix has length " + std::to_string(lrp));
    }
    return report;
}

}  // namespace antidict
