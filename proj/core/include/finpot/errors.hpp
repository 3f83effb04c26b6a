#pragma once

#include <stdexcept>
#include <string>

namespace finpot {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IngestError : Error {
    using Error::Error;
};

struct SamplingError : Error {
    using Error::Error;
};

struct TemplateError : Error {
    using Error::Error;
};

struct ExtractionError : Error {
    using Error::Error;
};

struct StructureError : Error {
    using Error::Error;
};

struct BackendError : Error {
    using Error::Error;
};

// Retryable backend failure (connection reset, 429, 5xx).
struct TransientBackendError : BackendError {
    using BackendError::BackendError;
};

struct CurationInputError : Error {
    using Error::Error;
};

struct TrainingError : Error {
    using Error::Error;
};

struct AggregationError : Error {
    using Error::Error;
};

// Judge response that could not be mapped to a verdict; keeps the raw text
// so callers can persist it for audit.
struct VerdictParseError : Error {
    VerdictParseError(const std::string& what, std::string raw)
        : Error(what), raw_response(std::move(raw)) {}
    std::string raw_response;
};

struct StageError : Error {
    StageError(std::string stage_name, const std::string& what)
        : Error("stage '" + stage_name + "': " + what), stage(std::move(stage_name)) {}
    std::string stage;
};

}  // namespace finpot
