#pragma once

#include <stdexcept>
#include <string>

namespace mtr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inverting an element that shares a factor with the ring modulus.  For the
// quantities the recursion inverts this always indicates a bug upstream.
struct ZeroDivisorError : Error {
    using Error::Error;
};

// Series composition/inversion fed an inner series of the wrong valuation.
struct ValuationError : Error {
    using Error::Error;
};

// A requested coefficient lies beyond the guaranteed-valid cutoff.
struct CutoffError : Error {
    using Error::Error;
};

// Brute-force enumeration guard tripped (|mu| or m too large).
struct SizeGuardError : Error {
    using Error::Error;
};

// Internal Laurent working order was insufficient even after retries.
struct OrderGuardError : Error {
    using Error::Error;
};

// A spectator value landed on a critical point or a diagonal.
struct SpectatorAtPoleError : Error {
    using Error::Error;
};

struct SizeMismatchError : Error {
    using Error::Error;
};

} // namespace mtr
