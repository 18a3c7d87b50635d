#pragma once

#include <stdexcept>
#include <string>

namespace maslovlab {

// Error taxonomy shared by all modules. Everything derives from Error so
// callers (and the CLI exit-code mapping) can catch by family.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A frame whose two vectors are (numerically) dependent: condition number
// of the 2x4 matrix [u; v] exceeds cond_max.
struct DegenerateFrame : Error {
    using Error::Error;
};

// A plane that was required to be Lagrangian is not (|omega(u,v)| too large).
struct NotLagrangian : Error {
    using Error::Error;
};

// orbit_lagrangian_loop called at a point where the generating field vanishes.
struct FixedPointOrbit : Error {
    using Error::Error;
};

// Phase step >= pi survived refinement up to N_max samples (or the loop is
// not refinable): the winding number cannot be certified.
struct PhaseStepTooLarge : Error {
    using Error::Error;
};

// Newton projection failed to reach the residual target within the
// iteration budget.
struct NoConvergence : Error {
    using Error::Error;
};

// Newton projection hit a point where the defining polynomial's gradient
// (numerically) vanishes.
struct SingularGradient : Error {
    using Error::Error;
};

// Sphere index k outside 1..n.
struct InvalidIndex : Error {
    using Error::Error;
};

// Space profile outside n >= 0, g >= 0, b >= 1.
struct InvalidProfile : Error {
    using Error::Error;
};

// framing_winding given a field that vanishes somewhere on the circle.
struct VanishingField : Error {
    using Error::Error;
};

// A JSON document does not match its declared file schema.
struct SchemaError : Error {
    using Error::Error;
};

}  // namespace maslovlab
