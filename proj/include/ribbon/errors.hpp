#pragma once

#include <stdexcept>
#include <string>

namespace ribbon {

// Error taxonomy. The CLI maps categories to exit codes:
//   parse errors -> 2, violated math preconditions -> 3, broken internal invariants -> 4.
enum class errc {
    parse_error,
    order_mismatch,
    order_too_small,
    non_unit,
    division_by_zero,
    character_not_one,
    kernel_membership,
    cover_mismatch,
    point_position,
    regularity_violation,
    precondition_violated,
    internal_invariant,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::parse_error: return "parse-error";
    case errc::order_mismatch: return "order-mismatch";
    case errc::order_too_small: return "order-too-small";
    case errc::non_unit: return "non-unit";
    case errc::division_by_zero: return "division-by-zero";
    case errc::character_not_one: return "character-not-one";
    case errc::kernel_membership: return "kernel-membership";
    case errc::cover_mismatch: return "cover-mismatch";
    case errc::point_position: return "point-position";
    case errc::regularity_violation: return "regularity-violation";
    case errc::precondition_violated: return "precondition-violated";
    case errc::internal_invariant: return "internal-invariant-violated";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, std::string message, std::string location = {})
        : std::runtime_error(std::move(message)), code_(code), location_(std::move(location)) {}

    errc code() const { return code_; }
    const std::string& location() const { return location_; }

private:
    errc code_;
    std::string location_;
};

[[noreturn]] inline void fail(errc code, const std::string& message, const std::string& location = {}) {
    throw error(code, message, location);
}

inline void check(bool ok, errc code, const std::string& message, const std::string& location = {}) {
    if (!ok) fail(code, message, location);
}

} // namespace ribbon
