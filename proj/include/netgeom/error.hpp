#ifndef NETGEOM_ERROR_HPP
#define NETGEOM_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace netgeom {

enum class ErrorKind {
    DimensionMismatch,
    BoundaryPoint,
    DegenerateHyperplane,
    TooManyHyperplanes,
    IllConditioned,
    MalformedJson,
    SchemaViolation,
    ShapeMismatch,
    ZeroNormal,
    EmptyNetwork,
    NonFinite,
    UniverseMismatch,
    TooLarge,
    InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. `index()` carries the offending
/// hyperplane / node / layer index (0-based) when one is meaningful.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> index = std::nullopt)
        : std::runtime_error(what), kind_(kind), index_(index) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> index() const noexcept { return index_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> index_;
};

}  // namespace netgeom

#endif
