#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace astk {

// Base for all toolkit errors. what() is prefixed with the error name so
// diagnostics stay identifiable after the exception type is erased.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define ASTK_ERROR_TYPE(NAME)                         \
    struct NAME : Error {                             \
        explicit NAME(const std::string& message)     \
            : Error(#NAME, message) {}                \
    }

// dsp
ASTK_ERROR_TYPE(NyquistViolation);
ASTK_ERROR_TYPE(EmptyToneList);
ASTK_ERROR_TYPE(FrameTooLong);
ASTK_ERROR_TYPE(FrameTooShort);
ASTK_ERROR_TYPE(IoError);
ASTK_ERROR_TYPE(MalformedWav);

// simskin
ASTK_ERROR_TYPE(MalformedProfile);
ASTK_ERROR_TYPE(SeparabilityViolation);
ASTK_ERROR_TYPE(ForceOutOfRange);

// dataset
ASTK_ERROR_TYPE(MalformedCsv);
ASTK_ERROR_TYPE(MixedSkinIds);
ASTK_ERROR_TYPE(TooFewRecords);
ASTK_ERROR_TYPE(KTooLarge);

// learn
ASTK_ERROR_TYPE(DegenerateData);
ASTK_ERROR_TYPE(SingularCovariance);
ASTK_ERROR_TYPE(TaskMismatch);
ASTK_ERROR_TYPE(VersionMismatch);
ASTK_ERROR_TYPE(MalformedModelFile);

// metrics
ASTK_ERROR_TYPE(MixedTasks);
ASTK_ERROR_TYPE(LengthMismatch);
ASTK_ERROR_TYPE(EmptyInput);

// shared precondition failures that have no richer category
ASTK_ERROR_TYPE(InvalidArgument);

#undef ASTK_ERROR_TYPE

}  // namespace astk
