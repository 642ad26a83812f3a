#pragma once

#include <stdexcept>
#include <string>

namespace riglab {

struct invalid_parameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct invalid_distribution : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct empty_graph_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when an exact checker is asked for more than its configured cap.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace riglab
