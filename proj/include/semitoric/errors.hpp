#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace semitoric {

enum class ErrorKind {
    Overflow,
    NotUnimodular,
    NotPrimitive,
    TooShort,
    BadDeterminant,
    SeamViolation,
    BadWinding,
    NotCounterClockwise,
    DegenerateStep,
    IndexOutOfRange,
    NotBlowdownSite,
    MinimumLength,
    NotMinimal,
    NotClassifiable,
    HelixEquationViolated,
    NotAHelixWord,
    SeedNotInS,
    InvalidPolygon,
    InvalidCorner,
    HiddenCornerUnsupported,
    Infeasible,
    InvalidInput,
};

const char* kind_name(ErrorKind kind);

// Thrown for every precondition or domain failure. Carries an optional
// index (for per-vector failures) and an optional reason tag.
class DomainError : public std::runtime_error {
public:
    DomainError(ErrorKind kind, std::string detail = {},
                std::optional<std::size_t> index = std::nullopt,
                std::string reason = {});

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> index() const noexcept { return index_; }
    const std::string& reason() const noexcept { return reason_; }
    const std::string& detail() const noexcept { return detail_; }

    // Short tag such as "NotPrimitive(1)" or "NotAHelixWord(WrongWinding)".
    std::string tag() const;

private:
    ErrorKind kind_;
    std::optional<std::size_t> index_;
    std::string reason_;
    std::string detail_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& what);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace semitoric
