#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sqcol {

enum class Errc {
    AsymmetricAdjacency,
    DuplicateNeighbor,
    SelfLoop,
    EulerViolation,
    UnknownVertex,
    NoSuchEdge,
    NotSameFace,
    Disconnected,
    PartialColoring,
    AlreadyColored,
    PaletteExhausted,
    PaletteTooSmall,
    TooLarge,
    Timeout,
    ConfigNotPresent,
    DegreeBudgetExceeded,
    BudgetViolated,
    NotACutvertex,
    OutOfRange,
    BadParameters,
    ParseError,
};

constexpr std::string_view to_string(Errc code)
{
    switch (code) {
    case Errc::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case Errc::DuplicateNeighbor: return "DuplicateNeighbor";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::EulerViolation: return "EulerViolation";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::NoSuchEdge: return "NoSuchEdge";
    case Errc::NotSameFace: return "NotSameFace";
    case Errc::Disconnected: return "Disconnected";
    case Errc::PartialColoring: return "PartialColoring";
    case Errc::AlreadyColored: return "AlreadyColored";
    case Errc::PaletteExhausted: return "PaletteExhausted";
    case Errc::PaletteTooSmall: return "PaletteTooSmall";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Timeout: return "Timeout";
    case Errc::ConfigNotPresent: return "ConfigNotPresent";
    case Errc::DegreeBudgetExceeded: return "DegreeBudgetExceeded";
    case Errc::BudgetViolated: return "BudgetViolated";
    case Errc::NotACutvertex: return "NotACutvertex";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::BadParameters: return "BadParameters";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Domain error raised by every sqcol operation. `detail` carries the
/// offending vertex for vertex-level errors and the line number for parse
/// errors; -1 otherwise.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message, long detail = -1)
        : std::runtime_error(std::string(to_string(code)) + ": " + message)
        , code_(code)
        , detail_(detail)
    {
    }

    Errc code() const noexcept { return code_; }
    long detail() const noexcept { return detail_; }

private:
    Errc code_;
    long detail_;
};

} // namespace sqcol
