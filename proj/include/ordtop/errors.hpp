#ifndef ORDTOP_ERRORS_HPP
#define ORDTOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ordtop {

// Malformed or inconsistent input: bad JSON shape, violated precondition,
// out-of-range coordinate, unknown label, depth-limit overflow.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematically honest refusal: the requested object does not exist at the
// requested resolution (e.g. every coordinate of the target saturates).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ordtop

#endif
