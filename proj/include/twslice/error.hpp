#ifndef TWSLICE_ERROR_HPP
#define TWSLICE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace twslice {

/// Base error for all library failures.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text (circuit files, PACE files, JSON networks).
/// Carries a 1-based line number when one is known (0 otherwise).
struct ParseError : Error {
    int line = 0;
    explicit ParseError(const std::string& msg, int line_no = 0)
        : Error(line_no > 0 ? msg + " at line " + std::to_string(line_no) : msg),
          line(line_no) {}
};

} // namespace twslice

#endif
