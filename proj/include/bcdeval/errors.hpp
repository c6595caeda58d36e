#pragma once

#include <stdexcept>
#include <string>

namespace bcdeval {

struct CyclicGraphError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonBinaryError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonSquareError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionTooLargeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularPrecisionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateColumnError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateLabelsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateRankingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptySampleSetError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooFewSamplesError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DuplicateSamplesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace bcdeval
