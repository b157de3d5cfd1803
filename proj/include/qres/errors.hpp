#pragma once

#include <stdexcept>
#include <string>

namespace qres {

/// Input is outside the supported scope (e.g. a blow-up center or singular
/// point that is not rational). CLI exit code 2.
struct ScopeError : std::runtime_error {
    explicit ScopeError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal cross-check failed. CLI exit code 3.
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qres
