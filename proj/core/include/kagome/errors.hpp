#pragma once

#include <stdexcept>
#include <string>

namespace kagome {

/// A ring element that must be inverted is zero / numerically singular.
struct SingularValue : std::runtime_error {
    explicit SingularValue(const std::string& what) : std::runtime_error(what) {}
};

/// Geometric input outside the domain of a map (0/0 cross-ratio, flat triangle).
struct DegenerateConfiguration : std::runtime_error {
    explicit DegenerateConfiguration(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed user input (files, CLI parameters).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kagome
