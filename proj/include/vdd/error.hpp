#pragma once

#include <stdexcept>
#include <string>

namespace vdd {

enum class Errc {
    InvalidArgument,
    DegenerateInput,
    EmptyResult,
    NoModel,
    OutOfAnnulus,
    OutOfRange,
    InvalidConfig,
    InvalidPolygon,
    InvalidRatios,
    IoError,
    ParseError,
    TooLarge,
    NonFiniteGradient,
    NonFiniteLoss,
    ImageTooSmall,
    ExternalTimeout,
    ExternalMalformedReply,
    IncompleteGrid,
    Internal,
};

const char* errc_name(Errc code);

/// Exception carrying one of the domain error codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool ok, Errc code, const std::string& message) {
    if (!ok) raise(code, message);
}

} // namespace vdd
