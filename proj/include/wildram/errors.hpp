#pragma once

#include <stdexcept>
#include <string>

namespace wildram {

// Malformed textual input (expressions, TOML, JSON tables). CLI exit 2.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A documented operation precondition does not hold. CLI exit 3.
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; signals an engine bug, not a user error. CLI exit 4.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw precondition_error(what);
}

inline void check_internal(bool cond, const std::string& what) {
    if (!cond) throw internal_error(what);
}

}  // namespace wildram
