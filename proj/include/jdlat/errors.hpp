#ifndef JDLAT_ERRORS_HPP
#define JDLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jdlat {

struct LatticeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CycleDetected : LatticeError {
    using LatticeError::LatticeError;
};

struct NotTransitivelyReduced : LatticeError {
    using LatticeError::LatticeError;
};

struct NoUniqueBound : LatticeError {
    int a, b;
    NoUniqueBound(int a_, int b_, const std::string& what)
        : LatticeError(what), a(a_), b(b_) {}
};

struct MultipleBottoms : LatticeError {
    using LatticeError::LatticeError;
};

struct MultipleTops : LatticeError {
    using LatticeError::LatticeError;
};

// Raised when the seven characterization checks disagree; indicates an
// implementation bug, never a property of the input.
struct EquivalenceViolated : LatticeError {
    using LatticeError::LatticeError;
};

struct NotJoinDistributive : LatticeError {
    using LatticeError::LatticeError;
};

struct NotMeetDistributive : LatticeError {
    using LatticeError::LatticeError;
};

struct ChainsDontCoverJir : LatticeError {
    using LatticeError::LatticeError;
};

// A trajectory met a maximal chain zero or several times, so the chain pair
// does not define a permutation. Signals a violated precondition.
struct NotWellDefined : LatticeError {
    using LatticeError::LatticeError;
};

struct NotABijection : LatticeError {
    using LatticeError::LatticeError;
};

struct DegreeMismatch : LatticeError {
    using LatticeError::LatticeError;
};

struct SizeLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidChain : LatticeError {
    using LatticeError::LatticeError;
};

} // namespace jdlat

#endif
