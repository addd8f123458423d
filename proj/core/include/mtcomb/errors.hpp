#pragma once

#include <stdexcept>

namespace mtcomb {

/// Thrown when a computation exceeds its configured size guard.
struct ResourceGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace mtcomb
