#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cquant {

/// Two generators whose embedded abscissas coincide: their bisector is not a
/// vertical line, so it has no single crossing with the support.
class DegenerateBoundary : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Partition breakpoints out of order, or feet not strictly increasing.
class InvalidQuantizer : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A Voronoi cell with zero probability mass; carries the offending index.
class EmptyCell : public std::runtime_error {
public:
    EmptyCell(std::size_t index, const std::string& what)
        : std::runtime_error(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Request beyond what an exhaustive search will handle.
class CapabilityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace cquant
