#pragma once

#include <stdexcept>
#include <string>

namespace sepfam {

// Thrown when an input violates a documented contract (e.g. a builder that
// needs general position is handed three collinear points).
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when an exact-enumeration routine is asked for more points than its
// supported instance size.
struct cap_error : std::length_error {
    explicit cap_error(const std::string& what) : std::length_error(what) {}
};

// Thrown by the file readers on malformed input.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sepfam
