#pragma once

#include <stdexcept>
#include <string>

namespace quboforge {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// Assignment/model size mismatch or an index outside [0, n).
class DimensionError : public Error {
 public:
    using Error::Error;
};

/// Malformed input file (JSON, graph, CSV, TSV). Messages name the
/// offending line or field.
class ParseError : public Error {
 public:
    using Error::Error;
};

/// Invalid solver or generator configuration.
class ConfigError : public Error {
 public:
    using Error::Error;
};

/// Problem size beyond what the solver supports.
class CapacityError : public Error {
 public:
    using Error::Error;
};

/// Problem instance violates its own invariants (empty set, bad matrix
/// dimensions, ...).
class InstanceError : public Error {
 public:
    using Error::Error;
};

}  // namespace quboforge
