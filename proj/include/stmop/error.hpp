#ifndef STMOP_ERROR_HPP
#define STMOP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace stmop {

enum class Errc {
    InvalidArgument,
    InvalidDiagonal,
    CrossingDiagonals,
    WrongDiagonalCount,
    DuplicateDiagonal,
    SizeLimitExceeded,
    SizeCapExceeded,
    NotAMopAfterDeletion,
    VertexNotInSet,
    NotTotalDominating,
    Infeasible,
    NoTotalDominatingSet,
    DisconnectedGraph,
    GraphTooSmall,
    NoConfigurationFound,
    InternalInvariantViolation,
    TraceMismatch,
    ParseError,
};

constexpr std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidDiagonal: return "InvalidDiagonal";
    case Errc::CrossingDiagonals: return "CrossingDiagonals";
    case Errc::WrongDiagonalCount: return "WrongDiagonalCount";
    case Errc::DuplicateDiagonal: return "DuplicateDiagonal";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::SizeCapExceeded: return "SizeCapExceeded";
    case Errc::NotAMopAfterDeletion: return "NotAMopAfterDeletion";
    case Errc::VertexNotInSet: return "VertexNotInSet";
    case Errc::NotTotalDominating: return "NotTotalDominating";
    case Errc::Infeasible: return "Infeasible";
    case Errc::NoTotalDominatingSet: return "NoTotalDominatingSet";
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::GraphTooSmall: return "GraphTooSmall";
    case Errc::NoConfigurationFound: return "NoConfigurationFound";
    case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
    case Errc::TraceMismatch: return "TraceMismatch";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace stmop

#endif // STMOP_ERROR_HPP
