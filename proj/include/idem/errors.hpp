#pragma once

#include <stdexcept>
#include <string>

namespace idem {

/// Failure categories surfaced by the library. Input-class errors map to
/// CLI exit code 2, math-class errors to exit code 3.
enum class Errc {
    // input-class
    ParseError,
    DimensionMismatch,
    InvalidBounds,
    StrongViolation,
    ModeMismatch,
    NotAPath,
    // math-class
    ClosureUndefined,
    ClosureDiverges,
    RootUndefined,
    CapabilityMissing,
    NoCycle,
    MaxIterationsExceeded,
};

constexpr bool is_input_error(Errc e) {
    switch (e) {
    case Errc::ParseError:
    case Errc::DimensionMismatch:
    case Errc::InvalidBounds:
    case Errc::StrongViolation:
    case Errc::ModeMismatch:
    case Errc::NotAPath:
        return true;
    default:
        return false;
    }
}

const char* errc_name(Errc e);

class AlgebraError : public std::runtime_error {
public:
    AlgebraError(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
    throw AlgebraError(code, what);
}

}  // namespace idem
