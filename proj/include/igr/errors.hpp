#pragma once

#include <stdexcept>
#include <string>

namespace igr {

// Malformed or out-of-contract input (bad endpoint, duplicate edge, ...).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A hard size/budget cap was exceeded. Caps produce refusals, never
// silent approximation. The message names the violated cap.
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace igr
