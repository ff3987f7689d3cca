#pragma once

#include <stdexcept>
#include <string>

namespace hexpath {

// Malformed external input: labels, path files, CLI arguments.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violation: value outside the operation's domain.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Search aborted by a node or memory limit. Partial results, if any,
// are attached by the thrower.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A verified-by-construction guarantee failed. Indicates a bug, never
// expected in normal operation.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace hexpath
