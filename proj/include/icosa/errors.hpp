#pragma once

#include <stdexcept>
#include <string>

namespace icosa {

// Every failure the library reports is one of these. They all derive from
// Error so callers that only care about "something went wrong" can catch once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define ICOSA_ERROR(Name)                                   \
    struct Name : Error {                                   \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

ICOSA_ERROR(PoleError);
ICOSA_ERROR(SingularFiber);
ICOSA_ERROR(QuadratureFailure);
ICOSA_ERROR(ContinuationAmbiguity);
ICOSA_ERROR(NonIntegralGenus);
ICOSA_ERROR(LeftDomain);
ICOSA_ERROR(DegenerateRay);
ICOSA_ERROR(InvalidStart);
ICOSA_ERROR(CenterCrossing);
ICOSA_ERROR(PairingFailure);
ICOSA_ERROR(CellCountMismatch);
ICOSA_ERROR(CheckFailure);
ICOSA_ERROR(InvalidArgument);

#undef ICOSA_ERROR

} // namespace icosa
