#pragma once

#include <stdexcept>
#include <string>

namespace qhgrass {

// Base for all domain errors raised by the library. The CLI maps these to
// exit code 1; internal consistency violations use std::logic_error instead.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidPartition : DomainError {
    using DomainError::DomainError;
};

struct NotContained : DomainError {
    using DomainError::DomainError;
};

struct NonzeroRemainder : DomainError {
    using DomainError::DomainError;
};

struct NotShiftInvariant : DomainError {
    using DomainError::DomainError;
};

struct TooLarge : DomainError {
    using DomainError::DomainError;
};

struct InvalidP : DomainError {
    using DomainError::DomainError;
};

struct InvalidK : DomainError {
    using DomainError::DomainError;
};

struct NotVerticalStrip : DomainError {
    using DomainError::DomainError;
};

} // namespace qhgrass
