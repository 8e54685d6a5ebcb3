// errors.hpp — Exception types shared across the library.

#pragma once

#include <stdexcept>
#include <string>

namespace npath {

// Thrown when a value fails a domain-type invariant (normalization, finiteness,
// Hermiticity, ...). The message names the invariant and, where applicable, the
// offending index.
class invariant_error : public std::invalid_argument {
public:
    explicit invariant_error(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when an input document (scenario JSON) is malformed or has the wrong
// shape, as opposed to describing an invalid physical state.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace npath
