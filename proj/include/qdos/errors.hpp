#pragma once

#include <stdexcept>
#include <string>

namespace qdos {

/// Raised when a configuration document (or a config-derived lookup) is
/// invalid. The message names the offending path or key. CLI maps this to
/// exit code 2, everything else to exit code 1.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qdos
