#include "semitoric/errors.hpp"

namespace semitoric {

const char* kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::BadDeterminant: return "BadDeterminant";
    case ErrorKind::SeamViolation: return "SeamViolation";
    case ErrorKind::BadWinding: return "BadWinding";
    case ErrorKind::NotCounterClockwise: return "NotCounterClockwise";
    case ErrorKind::DegenerateStep: return "DegenerateStep";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotBlowdownSite: return "NotBlowdownSite";
    case ErrorKind::MinimumLength: return "MinimumLength";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::NotClassifiable: return "NotClassifiable";
    case ErrorKind::HelixEquationViolated: return "HelixEquationViolated";
    case ErrorKind::NotAHelixWord: return "NotAHelixWord";
    case ErrorKind::SeedNotInS: return "SeedNotInS";
    case ErrorKind::InvalidPolygon: return "InvalidPolygon";
    case ErrorKind::InvalidCorner: return "InvalidCorner";
    case ErrorKind::HiddenCornerUnsupported: return "HiddenCornerUnsupported";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

static std::string build_message(ErrorKind kind, const std::string& detail,
                                  std::optional<std::size_t> index,
                                  const std::string& reason) {
    std::string s = kind_name(kind);
    if (index) s += "(" + std::to_string(*index) + ")";
    else if (!reason.empty()) s += "(" + reason + ")";
    if (!detail.empty()) s += ": " + detail;
    return s;
}

DomainError::DomainError(ErrorKind kind, std::string detail,
                         std::optional<std::size_t> index, std::string reason)
    : std::runtime_error(build_message(kind, detail, index, reason)),
      kind_(kind), index_(index), reason_(std::move(reason)),
      detail_(std::move(detail)) {}

std::string DomainError::tag() const {
    std::string s = kind_name(kind_);
    if (index_) s += "(" + std::to_string(*index_) + ")";
    else if (!reason_.empty()) s += "(" + reason_ + ")";
    return s;
}

ParseError::ParseError(std::size_t offset, const std::string& what)
    : std::runtime_error("parse error at offset " + std::to_string(offset) +
                         ": " + what),
      offset_(offset) {}

}  // namespace semitoric
