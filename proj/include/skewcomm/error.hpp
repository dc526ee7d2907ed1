#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewcomm {

enum class Errc {
    InvalidField,
    IdentityAutomorphism,
    NoWitness,
    NotInSpan,
    NotInL,
    InfiniteOrder,
    ExponentBeyondPrecision,
    ZeroNotInvertible,
    PrecisionExceeded,
    WitnessFixed,
    NoSplit,
    Unsupported,
    UnsupportedOrder,
    K1Input,
    K1Leading,
    ZeroInput,
    FieldMismatch,
    SyntaxError,
    VerificationFailed,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace skewcomm
