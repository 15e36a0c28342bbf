#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gramcalc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define GRAMCALC_DEFINE_ERROR(Name)            \
    class Name : public Error {                \
    public:                                    \
        using Error::Error;                    \
    }

GRAMCALC_DEFINE_ERROR(DivisionByZero);
GRAMCALC_DEFINE_ERROR(NonInvertibleSubstitution);
GRAMCALC_DEFINE_ERROR(InsufficientClearing);
GRAMCALC_DEFINE_ERROR(InexactDivision);
GRAMCALC_DEFINE_ERROR(ExtensionConflict);
GRAMCALC_DEFINE_ERROR(UnknownFamily);
GRAMCALC_DEFINE_ERROR(UnknownSequence);
GRAMCALC_DEFINE_ERROR(NotGammaExpressible);
GRAMCALC_DEFINE_ERROR(NotBetaExpressible);
GRAMCALC_DEFINE_ERROR(NonUnitConstantTerm);
GRAMCALC_DEFINE_ERROR(InvalidRadicalWitness);
GRAMCALC_DEFINE_ERROR(NotAPermutation);
GRAMCALC_DEFINE_ERROR(BoundExceeded);
GRAMCALC_DEFINE_ERROR(UnknownIdentity);

#undef GRAMCALC_DEFINE_ERROR

/// Raised by the text and JSON codecs; carries the offending offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace gramcalc
