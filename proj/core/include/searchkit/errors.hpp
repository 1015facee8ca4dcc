#pragma once

#include <stdexcept>
#include <string>

namespace searchkit {

// Raised for malformed input files and instance text. The message already
// carries file/line context where available.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string &message)
        : std::runtime_error(message) {}
    ParseError(const std::string &message, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message) {}
};

}  // namespace searchkit
