#ifndef HOMEX_ERRORS_HPP
#define HOMEX_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace homex {

// Malformed input data: duplicate vertices in a face, apex collisions,
// unparseable facet files.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters outside a bound's hypotheses (e.g. k > d, or m at or below
// the connectivity threshold).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A stated operation precondition does not hold for the given arguments.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Request exceeds the configured enumeration capacity.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by growth_process when the complex is not strongly connected;
// carries the offending component partition (facet indices per component).
struct NotStronglyConnectedError : PreconditionError {
    std::vector<std::vector<int>> components;
    NotStronglyConnectedError(const std::string& what,
                              std::vector<std::vector<int>> comps)
        : PreconditionError(what), components(std::move(comps)) {}
};

} // namespace homex

#endif
