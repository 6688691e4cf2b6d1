#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace poad {

enum class ErrorKind {
    BothEmpty,
    InvalidConcept,
    MalformedConcept,
    UnknownParticipant,
    NegativeMerge,
    InvalidBinding,
    MalformedPattern,
    MissingBinding,
    EmptyCorpus,
    CorpusTooSmall,
    MalformedContext,
    InvalidFunction,
    ShapeMismatch,
    DegenerateBasis,
    InvalidEmbedding,
    TooFewPatterns,
    InvalidProblem,
    UnknownCompressor,
    CorruptStream,
    UnknownPattern,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Error raised by every module. The kind is stable and machine-checkable;
/// the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace poad
