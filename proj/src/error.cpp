#include <hyperloc/error.hpp>

namespace hyperloc
{

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
        case ErrorKind::ParseError:
            return "ParseError";
        case ErrorKind::DivisionByZero:
            return "DivisionByZero";
        case ErrorKind::TauProductUnsupported:
            return "TauProductUnsupported";
        case ErrorKind::TauPresent:
            return "TauPresent";
        case ErrorKind::ShapeMismatch:
            return "ShapeMismatch";
        case ErrorKind::DimensionOrder:
            return "DimensionOrder";
        case ErrorKind::ZeroColumn:
            return "ZeroColumn";
        case ErrorKind::MinorsNotCoprime:
            return "MinorsNotCoprime";
        case ErrorKind::RankDeficient:
            return "RankDeficient";
        case ErrorKind::NotACovector:
            return "NotACovector";
        case ErrorKind::NotUnimodular:
            return "NotUnimodular";
        case ErrorKind::PartialQSet:
            return "PartialQSet";
        case ErrorKind::NotInChamber:
            return "NotInChamber";
        case ErrorKind::ValidationFailed:
            return "ValidationFailed";
        case ErrorKind::BadShape:
            return "BadShape";
        case ErrorKind::BadM:
            return "BadM";
        case ErrorKind::NotInFiltration:
            return "NotInFiltration";
        case ErrorKind::NonSymbol:
            return "NonSymbol";
        case ErrorKind::InternalInconsistency:
            return "InternalInconsistency";
    }
    return "Unknown";
}

} // namespace hyperloc
