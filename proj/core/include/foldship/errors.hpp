#pragma once

#include <stdexcept>
#include <string>

namespace foldship {

// Base class for all toolkit failures so callers can map them to exit codes.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad configuration file or invalid parameter values.
struct config_error : error {
    using error::error;
};

// Geometrically impossible request (bad fold angle, degenerate triangle, ...).
struct geometry_error : error {
    using error::error;
};

// Mesh is not a closed, consistently oriented surface.
struct topology_error : error {
    using error::error;
};

// Non-finite state encountered at runtime (simulation divergence etc.).
struct numeric_error : error {
    using error::error;
};

// Valid input asking for a feature this build does not implement.
struct unsupported_error : error {
    using error::error;
};

struct io_error : error {
    using error::error;
};

}
