#ifndef HYPERLOC_ERROR_HPP
#define HYPERLOC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperloc
{

enum class ErrorKind {
    ParseError,
    DivisionByZero,
    TauProductUnsupported,
    TauPresent,
    ShapeMismatch,
    DimensionOrder,
    ZeroColumn,
    MinorsNotCoprime,
    RankDeficient,
    NotACovector,
    NotUnimodular,
    PartialQSet,
    NotInChamber,
    ValidationFailed,
    BadShape,
    BadM,
    NotInFiltration,
    NonSymbol,
    InternalInconsistency,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this exception. The kind is the
// machine-readable part (the CLI serializes it); the message is for humans.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string &message) : std::runtime_error(message), m_kind(kind) {}

    ErrorKind kind() const noexcept
    {
        return m_kind;
    }

private:
    ErrorKind m_kind;
};

} // namespace hyperloc

#endif
