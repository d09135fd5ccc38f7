#pragma once

#include <stdexcept>
#include <string>

namespace kerov {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FamilyMismatch : Error {
    using Error::Error;
};
struct MissingImage : Error {
    using Error::Error;
};
struct NotDivisible : Error {
    using Error::Error;
};
struct NegativeCoefficient : Error {
    using Error::Error;
};
struct NonUnitConstantTerm : Error {
    using Error::Error;
};
struct InsufficientDepthData : Error {
    using Error::Error;
};
struct NotHomogeneous : Error {
    using Error::Error;
};
struct SingularBasis : Error {
    using Error::Error;
};
struct PartTooSmall : Error {
    using Error::Error;
};
struct DegenerateK : Error {
    using Error::Error;
};
struct BoundExceeded : Error {
    using Error::Error;
};
struct PreconditionViolated : Error {
    using Error::Error;
};
struct InvalidPartition : Error {
    using Error::Error;
};
struct ParseFailure : Error {
    using Error::Error;
};

}  // namespace kerov
