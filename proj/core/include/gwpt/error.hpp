#pragma once

#include <stdexcept>
#include <string>

namespace gwpt {

// Root of every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two series with different formal variables were combined.
class VariableMismatch : public Error {
public:
    using Error::Error;
};

// A series or graded series could not be inverted (zero or missing unit).
class InversionError : public Error {
public:
    using Error::Error;
};

// An operation would need infinitely many coefficients, or more than were supplied.
class TruncationError : public Error {
public:
    using Error::Error;
};

// A lattice or map violates the finiteness / shape contract.
class LatticeError : public Error {
public:
    using Error::Error;
};

// Scenario data violates a structural invariant.
class ScenarioError : public Error {
public:
    using Error::Error;
};

// A relative invariant demanded by a degeneration formula is absent from its table.
class MissingTableEntry : public Error {
public:
    using Error::Error;
};

// A scenario file could not be read.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace gwpt
