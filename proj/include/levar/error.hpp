#pragma once

#include <stdexcept>
#include <string>

namespace levar {

// Every failure mode of the library, one tag per contract violation.
// The tag name is always the first token of what(), so callers (and the
// CLI) can match on either the enum or the text.
enum class ErrorKind {
    OutOfBounds,
    ArityMismatch,
    BoundMismatch,
    LengthMismatch,
    LevelMismatch,
    EmptyShape,
    ProdMismatch,
    ShapeMismatch,
    CutMismatch,
    DimMismatch,
    OddExtent,
    FormatError,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
    throw Error(kind, detail);
}

} // namespace levar
