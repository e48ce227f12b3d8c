#ifndef NETREL_ERROR_HPP
#define NETREL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace netrel {

enum class ErrorCode {
    ParseError,
    IndexOutOfRange,
    SourceEqualsTerminal,
    CyclicGraph,
    NotConnected,
    InvalidProbability,
    NonPositiveSnr,
    InvalidCount,
    PartitionMismatch,
    CutsNotDisjoint,
    InvalidConfig,
    TooManyEdges,
    PathBudgetExceeded,
    CutBudgetExceeded,
    Internal,
};

std::string_view to_string(ErrorCode code);

// Process exit status for a failure of this kind: 2 parse/validation,
// 3 budget exceeded, 4 internal invariant violation.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what)
    {}

    ErrorCode code() const noexcept { return code_; }
    // The description without the error-code prefix.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorCode code_;
    std::string message_;
};

} // namespace netrel

#endif
