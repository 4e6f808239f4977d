#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace llip {

enum class errc {
    invalid_range,
    non_finite_value,
    empty_adjacency,
    grid_mismatch,
    not_in_domain,
    invalid_k,
    negative_bound,
    ill_defined_at_point,
    insufficient_samples,
    negative_l,
    degenerate_probe,
    breakpoint_overflow,
    bad_input,
};

const char* to_string(errc c);

/// Error with a machine-readable code and, where it applies, the grid point
/// index the failure was detected at.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}
    Error(errc code, const std::string& msg, std::size_t point)
        : std::runtime_error(std::string(to_string(code)) + ": " + msg + " (point " +
                             std::to_string(point) + ")"),
          code_(code), point_(point) {}

    errc code() const noexcept { return code_; }
    std::optional<std::size_t> point() const noexcept { return point_; }

private:
    errc code_;
    std::optional<std::size_t> point_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }
[[noreturn]] inline void fail_at(errc code, const std::string& msg, std::size_t point) {
    throw Error(code, msg, point);
}

}  // namespace llip
