#pragma once

#include <stdexcept>
#include <string>

namespace k0cat {

// Raised when user-supplied parameters or input files are malformed
// (bad ranges, unparsable files, diagonals that are not allowable, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Base class for "the input is well-formed, but the requested construction
// does not exist inside the supported combinatorial scope".  These are
// reported, never silently approximated.
struct ModelScopeError : std::runtime_error {
    explicit ModelScopeError(const std::string& msg) : std::runtime_error(msg) {}
};

// A triangle/shift query was made for a pair of non-crossing diagonals.
struct NotCrossing : ModelScopeError {
    explicit NotCrossing(const std::string& msg) : ModelScopeError(msg) {}
};

// An angle query was made for a pair of non-intertwining subsets.
struct NotIntertwining : ModelScopeError {
    explicit NotIntertwining(const std::string& msg) : ModelScopeError(msg) {}
};

// An iterated-cover tower ran into a cone that is neither zero nor a single
// diagonal; towers over decomposable cones are outside the supported scope.
struct NonIndecomposableCone : ModelScopeError {
    explicit NonIndecomposableCone(const std::string& msg) : ModelScopeError(msg) {}
};

// No resolving angle with all middle terms inside the tilting set exists for
// the requested object, so its index cannot be computed by this method.
struct NoResolution : ModelScopeError {
    explicit NoResolution(const std::string& msg) : ModelScopeError(msg) {}
};

} // namespace k0cat
