#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace permpoly {

enum class ErrorKind {
    DuplicateEdge,
    SelfLoop,
    VertexOutOfRange,
    NotBipartite,
    Disconnected,
    TooLargeForOracle,
    NotPlanar,
    Not2Connected,
    NotResonant,
    ContainsEvenK23,
    OddLengthCycle,
    InvalidEmbedding,
    UnbalancedParts,
    HasCycleLengthDivisibleBy4,
    PoleInput,
    InvalidLengths,
    InvalidCode,
    OverlapDetected,
    InvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every operation of the library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace permpoly
