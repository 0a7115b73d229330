#pragma once

#include <stdexcept>
#include <string>

namespace antidict {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The caller passed something outside an operation's domain (bad alphabet,
/// empty word, non-antifactorial set, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A brute-force oracle was asked for an input larger than it will enumerate.
class GuardExceeded : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

class NotAntifactorial : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// A set of words could not be turned back into a word.
class ReconstructionError : public InvalidInput {
public:
    enum class Kind {
        cycle,       // avoiding language is infinite
        ambiguous,   // several longest words
        no_cycle,    // circular: nothing to read around
        mismatch,    // candidate does not reproduce the input set
    };

    ReconstructionError(Kind kind, const std::string& what)
        : InvalidInput(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

}  // namespace antidict
