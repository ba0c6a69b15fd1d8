#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adlab {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

// A computation exceeded a configured resource cap (term count). Carries
// how far it got so partial results can be reported.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace adlab
