#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sopcm {

/// Base class of every error the library raises on bad input or unmet
/// hypotheses. `kind()` is a stable machine-readable tag used by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct UnitIdealError : Error {
    explicit UnitIdealError(const std::string& what) : Error("unit_ideal", what) {}
};

struct ZeroIdealError : Error {
    explicit ZeroIdealError(const std::string& what) : Error("zero_ideal", what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse", what) {}
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string& what) : Error("invalid_input", what) {}
};

struct HypothesisError : Error {
    explicit HypothesisError(const std::string& what) : Error("hypothesis", what) {}
};

struct BoundExceeded : Error {
    explicit BoundExceeded(const std::string& what) : Error("bound_exceeded", what) {}
};

/// Raised when a computed object violates a proven invariant. Seeing this
/// means the implementation is wrong, not the input.
struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error("internal", what) {}
};

}  // namespace sopcm
