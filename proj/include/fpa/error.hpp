#pragma once

#include <stdexcept>
#include <string>

namespace fpa {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Syntax error in .fpa input, with 1-based source position.
struct ParseError : Error {
    int line;
    int col;
    ParseError(int line_, int col_, const std::string& msg)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
};

/// A structurally invalid presentation (undeclared generator, duplicate name, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// Precondition violation of a library operation (odd word not encodable,
/// degree exceeds truncation, missing idempotent relation, ...).
struct DomainError : Error {
    using Error::Error;
};

} // namespace fpa
