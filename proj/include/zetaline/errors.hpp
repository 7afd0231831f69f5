#pragma once

#include <stdexcept>
#include <string>

namespace zetaline {

// A bracketed solver or series failed to reach its tolerance.
struct convergence_error : std::runtime_error {
    explicit convergence_error(const std::string& what)
        : std::runtime_error(what) {}
};

// An evaluation could not meet the configured accuracy target.
struct accuracy_error : std::runtime_error {
    explicit accuracy_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Checkpoint state does not match the current configuration.
struct checkpoint_error : std::runtime_error {
    explicit checkpoint_error(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace zetaline
