#pragma once

#include <stdexcept>
#include <string>

namespace cohiggs {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A half-space region that was required to be bounded is not.
struct UnboundedRegion final : Error {
    explicit UnboundedRegion(const std::string& what = "region is unbounded") : Error(what) {}
};

/// A field term does not lie in the space of admissible maps for its degree.
struct InvalidTerm final : Error {
    explicit InvalidTerm(const std::string& what) : Error(what) {}
};

}  // namespace cohiggs
