#include "hgenergy/error.hpp"

namespace hgenergy {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::EdgeWrongSize: return "EdgeWrongSize";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EdgeNotFound: return "EdgeNotFound";
    case ErrorCode::TooManyEdges: return "TooManyEdges";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::EmptyHypergraph: return "EmptyHypergraph";
    case ErrorCode::InvalidPowerParams: return "InvalidPowerParams";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NegativeGramEigenvalue: return "NegativeGramEigenvalue";
    case ErrorCode::ParityViolation: return "ParityViolation";
    }
    return "Unknown";
}

bool is_input_error(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NoConvergence:
    case ErrorCode::NegativeGramEigenvalue:
    case ErrorCode::ParityViolation:
        return false;
    default:
        return true;
    }
}

} // namespace hgenergy
