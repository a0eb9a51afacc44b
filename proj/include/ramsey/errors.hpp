#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

// Error taxonomy, mirrored by CLI exit codes: domain -> 1, usage -> 2,
// certification -> 3. Capacity refusals (exact search would exceed its
// budget) are a flavor of domain error.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class CapacityError : public DomainError {
public:
    explicit CapacityError(const std::string& what) : DomainError(what) {}
};

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check failed: a quantity the implementation certifies as
// an identity did not hold. Indicates a bug or corrupted input, never a
// legitimate "no result" outcome.
class CertificationError : public std::runtime_error {
public:
    explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ramsey
