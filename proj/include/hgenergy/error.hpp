#ifndef HGENERGY_ERROR_HPP
#define HGENERGY_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hgenergy {

enum class ErrorCode {
    EdgeWrongSize,
    VertexOutOfRange,
    DuplicateEdge,
    EdgeNotFound,
    TooManyEdges,
    InvalidParams,
    EmptyHypergraph,
    InvalidPowerParams,
    PreconditionFailed,
    ParseError,
    NoConvergence,
    NegativeGramEigenvalue,
    ParityViolation,
};

std::string_view to_string(ErrorCode code);

// Input errors are the caller's fault; everything else is a numerical failure.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace hgenergy

#endif // HGENERGY_ERROR_HPP
