#pragma once

#include <stdexcept>
#include <string>

namespace ginvar {

/// Malformed input text; carries the 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_, col_;
};

/// Input is well-formed but outside an operation's domain (zero ideal,
/// non-stable generators, inhomogeneous data, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Randomized certification could not be completed.
class CertificationError : public std::runtime_error {
public:
    explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ginvar
