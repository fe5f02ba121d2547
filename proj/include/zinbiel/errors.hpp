#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zinbiel {

// Base for all library errors; catch this at the CLI boundary.
struct ZinError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bar() applied to an element with a length-1 word in its support.
struct DegreeOneSupport : ZinError {
    using ZinError::ZinError;
};

// A support key is not present in the coordinateizer's index.
struct UnindexedKey : ZinError {
    using ZinError::ZinError;
};

// Two spans built over different coordinateizers were combined.
struct CoordinateizerMismatch : ZinError {
    using ZinError::ZinError;
};

// skew_coordinates called on an element with p(f) != -f or degree-1 support.
struct NotLie : ZinError {
    using ZinError::ZinError;
};

// An element claimed Lie whose coefficients violate the skew-rcom shape.
struct CorruptLie : ZinError {
    using ZinError::ZinError;
};

// A graded operation was asked for a component below its minimal degree.
struct DegreeTooSmall : ZinError {
    using ZinError::ZinError;
};

// Rewrite formula applied to word lengths outside its stated branches.
struct ShapeMismatch : ZinError {
    using ZinError::ZinError;
};

// Tree evaluation hit a leaf with no assigned value.
struct UnassignedLeaf : ZinError {
    using ZinError::ZinError;
};

// Truncated-polynomial operands carry different caps.
struct CapMismatch : ZinError {
    using ZinError::ZinError;
};

// The cap is too small for any truncation-free trial of the requested shape.
struct CapTooSmall : ZinError {
    using ZinError::ZinError;
};

// A certificate check did not produce its expected outcome.
struct CertificateViolation : ZinError {
    using ZinError::ZinError;
};

// corollary23_check called with a non-Lie b or c.
struct NotLieInput : ZinError {
    using ZinError::ZinError;
};

// Expression evaluated to something outside the algebra (e.g. a bare scalar).
struct EvalError : ZinError {
    using ZinError::ZinError;
};

struct SyntaxError : ZinError {
    std::size_t position;
    SyntaxError(std::size_t pos, const std::string& msg)
        : ZinError(msg + " at position " + std::to_string(pos)), position(pos) {}
};

}  // namespace zinbiel
