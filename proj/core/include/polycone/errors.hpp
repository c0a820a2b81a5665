#pragma once

#include <stdexcept>
#include <string>

namespace polycone {

// Root of everything the library throws on bad input or broken invariants.
class PolyconeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public PolyconeError {
 public:
  using PolyconeError::PolyconeError;
};

class InconsistentSystem : public PolyconeError {
 public:
  using PolyconeError::PolyconeError;
};

class EmptyPolyhedron : public PolyconeError {
 public:
  using PolyconeError::PolyconeError;
};

class DimensionCapExceeded : public PolyconeError {
 public:
  using PolyconeError::PolyconeError;
};

// x is not in the set it was supposed to be in (reports violated rows).
class OutsideSet : public PolyconeError {
 public:
  using PolyconeError::PolyconeError;
};

// (x, x*) is not a point of the graph of the normal cone mapping.
class InvalidGraphPoint : public PolyconeError {
 public:
  using PolyconeError::PolyconeError;
};

class DependentGenerators : public PolyconeError {
 public:
  using PolyconeError::PolyconeError;
};

class OutsideDomain : public PolyconeError {
 public:
  using PolyconeError::PolyconeError;
};

class ParseError : public PolyconeError {
 public:
  using PolyconeError::PolyconeError;
};

class InfeasibleCandidate : public PolyconeError {
 public:
  using PolyconeError::PolyconeError;
};

// Two independent computations of the same object disagreed.
class InternalInconsistency : public PolyconeError {
 public:
  using PolyconeError::PolyconeError;
};

}  // namespace polycone
