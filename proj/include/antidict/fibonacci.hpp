#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "antidict/mfw.hpp"

namespace antidict {

/// Largest index accepted by the Fibonacci routines (F_30 = 832040).
inline constexpr std::size_t kFibonacciMaxIndex = 30;

/// The n-th Fibonacci word and its companions. For n < 3 the central and
/// singular words are empty.
struct FibonacciFamily {
    std::size_t n = 0;
    Word f;            // f_1 = b, f_2 = a, f_n = f_{n-1} f_{n-2}
    std::size_t length = 0;  // F_n
    Word central;      // u_n: f_n without its last two letters
    Word singular;     // f^_n = x u_n x, x = a for odd n, b for even n
    Word g;            // g^_n: f^_n with first and last letter swapped
};

/// Throws InvalidInput for n = 0 and GuardExceeded past kFibonacciMaxIndex.
FibonacciFamily fibonacci_family(std::size_t n);

/// f_n = u_n xy = u_{n-1} yx u_{n-2} xy = u_{n-2} xy u_{n-1} xy, with xy = ab
/// for odd n and ba for even n. Throws InvalidInput for n < 5.
bool verify_central_identity(std::size_t n);

/// {g^_3, ..., g^_n, f^_n} for n >= 4; {a}, {b}, {aa, bb} for n = 1, 2, 3.
MfwSet mfw_fibonacci_closed_form(std::size_t n);

struct FibonacciCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct FibonacciReport {
    std::size_t n = 0;
    std::size_t length = 0;
    MfwSet mfw;
    std::size_t circular_states = 0;
    std::size_t linear_states = 0;
    std::vector<FibonacciCheck> checks;

    bool passed() const;
};

/// Runs every structural check for index n; checks that do not apply to a
/// small n are omitted from the report.
FibonacciReport verify_fibonacci(std::size_t n);

}  // namespace antidict
