#pragma once

#include <stdexcept>
#include <string>

namespace ordlink {

// Malformed PD text. Carries the 1-based line/column of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error("pd:" + std::to_string(line) + ":" + std::to_string(col) +
                             ": " + msg),
          line_(line), col_(col) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return col_; }

private:
    int line_;
    int col_;
};

// Structurally invalid input: bad arc multiplicities, non-planar face counts,
// roots that are not white faces, and similar contract violations.
class InvalidDiagram : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ordlink
