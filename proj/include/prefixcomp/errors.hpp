#pragma once

#include <stdexcept>
#include <string>

namespace prefixcomp {

enum class Errc {
    NonPositiveProbability,
    BadTotal,
    TooLarge,
    SizeMismatch,
    BadSubset,
    PreconditionViolated,
    KraftOrderViolated,
    NotOptimalProfile,
    BadEpsilon,
    WrongSize,
    NotSorted,
    BadConfig,
    Io,
};

const char* errc_name(Errc e);

/// Domain error carrying a machine-checkable code.
class DomainError : public std::runtime_error {
public:
    DomainError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace prefixcomp
