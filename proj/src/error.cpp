#include "vdd/error.hpp"

namespace vdd {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::DegenerateInput: return "DegenerateInput";
        case Errc::EmptyResult: return "EmptyResult";
        case Errc::NoModel: return "NoModel";
        case Errc::OutOfAnnulus: return "OutOfAnnulus";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::InvalidConfig: return "InvalidConfig";
        case Errc::InvalidPolygon: return "InvalidPolygon";
        case Errc::InvalidRatios: return "InvalidRatios";
        case Errc::IoError: return "IoError";
        case Errc::ParseError: return "ParseError";
        case Errc::TooLarge: return "TooLarge";
        case Errc::NonFiniteGradient: return "NonFiniteGradient";
        case Errc::NonFiniteLoss: return "NonFiniteLoss";
        case Errc::ImageTooSmall: return "ImageTooSmall";
        case Errc::ExternalTimeout: return "ExternalTimeout";
        case Errc::ExternalMalformedReply: return "ExternalMalformedReply";
        case Errc::IncompleteGrid: return "IncompleteGrid";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace vdd
