#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fou {

// The CLI maps categories onto exit codes (input 2, numerical 3, unstable 4);
// library code throws the specific type below.
enum class ErrorCategory { invalid_input, numerical, unstable };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, std::string code, const std::string& what)
        : std::runtime_error(what), category_(category), code_(std::move(code)) {}

    ErrorCategory category() const noexcept { return category_; }
    const std::string& code() const noexcept { return code_; }

private:
    ErrorCategory category_;
    std::string code_;
};

#define FOU_ERROR_TYPE(NAME, CATEGORY)                         \
    class NAME : public Error {                                \
    public:                                                    \
        explicit NAME(const std::string& what)                 \
            : Error(ErrorCategory::CATEGORY, #NAME, what) {}   \
    }

FOU_ERROR_TYPE(InvalidArgument, invalid_input);
FOU_ERROR_TYPE(UnsupportedModel, invalid_input);
FOU_ERROR_TYPE(SingularAtZero, invalid_input);
FOU_ERROR_TYPE(NotAFilter, invalid_input);
FOU_ERROR_TYPE(PathTooShort, invalid_input);
FOU_ERROR_TYPE(LengthMismatch, invalid_input);
FOU_ERROR_TYPE(TooFewSamples, invalid_input);
FOU_ERROR_TYPE(FrequencyAboveNyquist, invalid_input);

FOU_ERROR_TYPE(CirculantNotPSD, numerical);
FOU_ERROR_TYPE(QuadratureNotConverged, numerical);
FOU_ERROR_TYPE(ZeroVariation, numerical);
FOU_ERROR_TYPE(NonPositiveRadicand, numerical);
FOU_ERROR_TYPE(NonPositiveBase, numerical);
FOU_ERROR_TYPE(DegeneratePath, numerical);
FOU_ERROR_TYPE(NotPositiveDefinite, numerical);

FOU_ERROR_TYPE(ExperimentUnstable, unstable);

#undef FOU_ERROR_TYPE

// Re-thrown by fit() so callers learn which pipeline stage failed.
class StageError : public Error {
public:
    StageError(std::string stage, const Error& inner)
        : Error(inner.category(), inner.code(),
                std::string(inner.what()) + " [stage: " + stage + "]"),
          stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace fou
