#include "poad/error.hpp"

namespace poad {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::BothEmpty: return "BothEmpty";
        case ErrorKind::InvalidConcept: return "InvalidConcept";
        case ErrorKind::MalformedConcept: return "MalformedConcept";
        case ErrorKind::UnknownParticipant: return "UnknownParticipant";
        case ErrorKind::NegativeMerge: return "NegativeMerge";
        case ErrorKind::InvalidBinding: return "InvalidBinding";
        case ErrorKind::MalformedPattern: return "MalformedPattern";
        case ErrorKind::MissingBinding: return "MissingBinding";
        case ErrorKind::EmptyCorpus: return "EmptyCorpus";
        case ErrorKind::CorpusTooSmall: return "CorpusTooSmall";
        case ErrorKind::MalformedContext: return "MalformedContext";
        case ErrorKind::InvalidFunction: return "InvalidFunction";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::DegenerateBasis: return "DegenerateBasis";
        case ErrorKind::InvalidEmbedding: return "InvalidEmbedding";
        case ErrorKind::TooFewPatterns: return "TooFewPatterns";
        case ErrorKind::InvalidProblem: return "InvalidProblem";
        case ErrorKind::UnknownCompressor: return "UnknownCompressor";
        case ErrorKind::CorruptStream: return "CorruptStream";
        case ErrorKind::UnknownPattern: return "UnknownPattern";
    }
    return "Unknown";
}

}  // namespace poad
