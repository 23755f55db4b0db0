#pragma once

#include <stdexcept>
#include <string>

namespace galmod {

/// Base class for all galmod errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A theorem oracle was called on an instance that does not satisfy the
/// stated hypotheses.  The message names the failing hypothesis.
struct hypothesis_not_met : error {
    using error::error;
};

/// A configured size cap (group order, closure size, H1 system size, ...)
/// was exceeded.
struct cap_exceeded : error {
    using error::error;
};

/// Two values with different parent groups were combined.
struct parent_mismatch : error {
    using error::error;
};

/// A matrix does not define an endomorphism of the given group.
struct bad_endomorphism : error {
    using error::error;
};

/// A closure generator does not act bijectively on the module.
struct non_invertible_generator : error {
    using error::error;
};

/// The inertia model requires an odd prime.
struct odd_prime_required : error {
    using error::error;
};

/// A numerical semigroup with gcd(generators) > 1 is not cofinite.
struct not_cofinite : error {
    using error::error;
};

/// Malformed instance or report JSON; the message carries the JSON path.
struct parse_error : error {
    using error::error;
};

}  // namespace galmod
