#include "dedekind/error.hpp"

namespace dedekind {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::DomainError: return "DomainError";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::PreconditionError: return "PreconditionError";
    case Errc::NotIntegral: return "NotIntegral";
    case Errc::NotMonic: return "NotMonic";
    case Errc::InseparableInput: return "InseparableInput";
    case Errc::IrreducibilityUncertified: return "IrreducibilityUncertified";
    case Errc::NoMinimum: return "NoMinimum";
    case Errc::GcdNotOne: return "GcdNotOne";
    case Errc::ValueNotMultipleOfSigma: return "ValueNotMultipleOfSigma";
    case Errc::NoUniformizerAtValue: return "NoUniformizerAtValue";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace dedekind
