#pragma once

#include <stdexcept>
#include <string>

namespace qp {

// Every failure raised by the library derives from Error so callers can
// catch the whole family in one place.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotDivisible : Error {
    using Error::Error;
};
struct NonInvertibleSubstitution : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct NotMonomial : Error {
    using Error::Error;
};
struct NonExactWeight : Error {
    using Error::Error;
};
struct MotzkinViolation : Error {
    using Error::Error;
};
struct NotNilpotent : Error {
    using Error::Error;
};
struct CaseMismatch : Error {
    using Error::Error;
};
struct PositivityViolation : Error {
    using Error::Error;
};
struct DecompositionMismatch : Error {
    using Error::Error;
};
struct ConservationFailure : Error {
    using Error::Error;
};

}  // namespace qp
