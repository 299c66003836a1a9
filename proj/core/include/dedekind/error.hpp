#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dedekind {

enum class Errc {
    DomainError,
    NotAUnit,
    DivisionByZero,
    PreconditionError,
    NotIntegral,
    NotMonic,
    InseparableInput,
    IrreducibilityUncertified,
    NoMinimum,
    GcdNotOne,
    ValueNotMultipleOfSigma,
    NoUniformizerAtValue,
    SizeLimit,
    ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace dedekind
