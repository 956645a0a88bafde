/**
 * @file error.hpp
 * @brief Error type carrying one of the library's stable error codes.
 *
 * Every failure that a caller may want to react to (resampling a degenerate
 * point, switching from tropical to rational mode, enlarging a band) is
 * reported as an lsym::Error whose code() is one of:
 *
 *   "minor-shape"           |I| != |J| or an index is out of range
 *   "needs-subtraction"     a determinant was requested in the min-plus semiring
 *   "increase-D"            a periodic matrix entry lies outside the stored band
 *   "degenerate-point"      a minor that must be invertible vanished
 *   "not-Q-type"            Q-invariant indices violate i + j <= m
 *   "not-pseudo-energy"     a colored shape fails the corner color condition
 *   "non-partition-content" cocharge was requested for non-partition content
 *   "bad-input"             malformed arguments not covered above
 */
#pragma once

#include <stdexcept>
#include <string>

namespace lsym {

class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const char* code, const std::string& detail) {
    throw Error(code, detail);
}

}  // namespace lsym
