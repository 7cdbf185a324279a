#pragma once

#include <stdexcept>
#include <string>

namespace sqt {

// Exit-code contract used by the CLI: 0 ok, 2 precondition, 3 parse,
// 4 internal consistency.
struct ArgumentError : std::runtime_error {
    explicit ArgumentError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

struct UnsupportedCoefficientError : ArgumentError {
    explicit UnsupportedCoefficientError(const std::string& msg) : ArgumentError(msg) {}
};

struct ReconstructionError : ArgumentError {
    explicit ReconstructionError(const std::string& msg) : ArgumentError(msg) {}
};

inline int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return 3;
    if (dynamic_cast<const InternalError*>(&e)) return 4;
    if (dynamic_cast<const ArgumentError*>(&e)) return 2;
    return 2;
}

} // namespace sqt
