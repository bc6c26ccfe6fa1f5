#ifndef PMP_ERRORS_HPP
#define PMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pmp {

// Error taxonomy. InvalidInput-rooted errors map to CLI exit code 3,
// NumericFailure-rooted errors to exit code 4.

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidInput : Error {
    using Error::Error;
};

struct NumericFailure : Error {
    using Error::Error;
};

struct FieldMismatch : InvalidInput {
    using InvalidInput::InvalidInput;
};

// Division failed modulo the field modulus; the user-asserted
// irreducibility of the modulus is false.
struct NonInvertible : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct RootIsolationFailure : NumericFailure {
    using NumericFailure::NumericFailure;
};

struct NotMonic : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct DegreeNotDivisible : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct NoConvergence : NumericFailure {
    using NumericFailure::NumericFailure;
};

struct PathTooClose : NumericFailure {
    using NumericFailure::NumericFailure;
};

struct TrackingBreakdown : NumericFailure {
    using NumericFailure::NumericFailure;
};

struct AmbiguousAssociation : NumericFailure {
    using NumericFailure::NumericFailure;
};

struct AmbiguousCluster : NumericFailure {
    using NumericFailure::NumericFailure;
};

struct PreconditionUnverified : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct NotIndecomposable : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct ParseError : InvalidInput {
    using InvalidInput::InvalidInput;
};

}  // namespace pmp

#endif
