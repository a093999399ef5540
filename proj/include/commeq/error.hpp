#pragma once

#include <stdexcept>
#include <string>

namespace commeq {

// Input-domain violation: malformed JSON, dimension mismatch, bad flags.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input rejected on mathematical grounds, e.g. f(P) != 0
// or a residual that is not zero.
struct MathRejection : std::runtime_error {
    explicit MathRejection(const std::string& what) : std::runtime_error(what) {}
};

} // namespace commeq
