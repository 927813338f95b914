#include "netgeom/error.hpp"

namespace netgeom {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::BoundaryPoint: return "boundary point";
    case ErrorKind::DegenerateHyperplane: return "degenerate hyperplane";
    case ErrorKind::TooManyHyperplanes: return "too many hyperplanes";
    case ErrorKind::IllConditioned: return "ill-conditioned arrangement";
    case ErrorKind::MalformedJson: return "malformed JSON";
    case ErrorKind::SchemaViolation: return "schema violation";
    case ErrorKind::ShapeMismatch: return "shape mismatch";
    case ErrorKind::ZeroNormal: return "zero normal";
    case ErrorKind::EmptyNetwork: return "empty network";
    case ErrorKind::NonFinite: return "non-finite value";
    case ErrorKind::UniverseMismatch: return "universe mismatch";
    case ErrorKind::TooLarge: return "too large";
    case ErrorKind::InvalidArgument: return "invalid argument";
    }
    return "unknown";
}

}  // namespace netgeom
