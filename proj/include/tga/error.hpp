#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tga {

/// Input text did not conform to a grammar. Positions are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Well-formed input whose contents are inconsistent (e.g. a presentation
/// file with vectors of the wrong length).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A brute-force or enumeration size guard was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An expression used an operation the presentation has no table for.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Presentation synthesis could not represent an element at the chosen truncation.
class UnsolvableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tga
