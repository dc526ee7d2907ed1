#include "skewcomm/error.hpp"

namespace skewcomm {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidField: return "InvalidField";
        case Errc::IdentityAutomorphism: return "IdentityAutomorphism";
        case Errc::NoWitness: return "NoWitness";
        case Errc::NotInSpan: return "NotInSpan";
        case Errc::NotInL: return "NotInL";
        case Errc::InfiniteOrder: return "InfiniteOrder";
        case Errc::ExponentBeyondPrecision: return "ExponentBeyondPrecision";
        case Errc::ZeroNotInvertible: return "ZeroNotInvertible";
        case Errc::PrecisionExceeded: return "PrecisionExceeded";
        case Errc::WitnessFixed: return "WitnessFixed";
        case Errc::NoSplit: return "NoSplit";
        case Errc::Unsupported: return "Unsupported";
        case Errc::UnsupportedOrder: return "UnsupportedOrder";
        case Errc::K1Input: return "K1Input";
        case Errc::K1Leading: return "K1Leading";
        case Errc::ZeroInput: return "ZeroInput";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

}  // namespace skewcomm
