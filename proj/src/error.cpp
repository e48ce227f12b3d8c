#include <netrel/error.hpp>

namespace netrel {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SourceEqualsTerminal: return "SourceEqualsTerminal";
    case ErrorCode::CyclicGraph: return "CyclicGraph";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::InvalidProbability: return "InvalidProbability";
    case ErrorCode::NonPositiveSnr: return "NonPositiveSnr";
    case ErrorCode::InvalidCount: return "InvalidCount";
    case ErrorCode::PartitionMismatch: return "PartitionMismatch";
    case ErrorCode::CutsNotDisjoint: return "CutsNotDisjoint";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::TooManyEdges: return "TooManyEdges";
    case ErrorCode::PathBudgetExceeded: return "PathBudgetExceeded";
    case ErrorCode::CutBudgetExceeded: return "CutBudgetExceeded";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

int exit_status(ErrorCode code)
{
    switch (code) {
    case ErrorCode::TooManyEdges:
    case ErrorCode::PathBudgetExceeded:
    case ErrorCode::CutBudgetExceeded:
        return 3;
    case ErrorCode::Internal:
        return 4;
    default:
        return 2;
    }
}

} // namespace netrel
