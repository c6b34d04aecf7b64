#ifndef TOEPSYZ_ERRORS_HPP
#define TOEPSYZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toepsyz {

/// Matrix (or leading coefficient block) is singular at the working precision.
struct SingularMatrixError : std::runtime_error {
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

/// The Euclidean remainder sequence skipped a required degree; callers are
/// expected to fall back to the dense basis construction.
struct DegenerateDegreeSequence : std::runtime_error {
    explicit DegenerateDegreeSequence(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace toepsyz

#endif
