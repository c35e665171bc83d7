#pragma once

#include <stdexcept>
#include <string>

namespace domideal {

// Input text that does not conform to the edge-list format.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration refused to run because the instance exceeds its size guard.
struct ScaleLimitError : std::runtime_error {
    explicit ScaleLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace domideal
