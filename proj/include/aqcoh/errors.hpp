#pragma once

#include <stdexcept>
#include <string>

namespace aqcoh {

// All library errors derive from Error so callers can catch one base type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cartan matrix fails the local validity checks (diagonal 2, nonpositive
// off-diagonal, symmetric zero pattern).
struct InvalidCartanMatrixError : Error {
    using Error::Error;
};

// Reflection closure kept producing new vectors past the configured bound:
// the Cartan matrix is affine or indefinite, not finite type.
struct NotFiniteTypeError : Error {
    using Error::Error;
};

// A set of roots handed in as a positive system fails P ∪ −P = Δ, P ∩ −P = ∅.
struct NotPositiveSystemError : Error {
    using Error::Error;
};

// A positive system was required to contain the fixed compact positive roots
// but does not.
struct DoesNotContainCompactPositiveError : Error {
    using Error::Error;
};

// A root did not decompose integrally over a claimed simple system (the basis
// matrix must be unimodular; failure means the input was not a simple system).
struct BasisDecompositionFailureError : Error {
    using Error::Error;
};

// The defining functional of a point parabolic is negative on some compact
// positive root.
struct NotDominantError : Error {
    using Error::Error;
};

// A discrete-series-only quantity was requested for a class that fails the
// discrete-series test.
struct NotDiscreteSeriesError : Error {
    using Error::Error;
};

// A simple-root subset's Dynkin diagram is not of finite type A/B/C/D/E/F/G.
struct UnrecognizedDiagramError : Error {
    using Error::Error;
};

// Weyl group enumeration would exceed the configured element cap.
struct WeylTooLargeError : Error {
    using Error::Error;
};

// Algebra specification (CLI flags or JSON document) could not be parsed.
struct SpecParseError : Error {
    using Error::Error;
};

} // namespace aqcoh
