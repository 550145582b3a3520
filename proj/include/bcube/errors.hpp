#pragma once

#include <stdexcept>
#include <string>

namespace bcube {

/// Base for construction failures. Inside the fault budgets these indicate a
/// defect; outside them they are legitimate outcomes.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoPath : public ConstructionError {
 public:
  using ConstructionError::ConstructionError;
};

class NoDpc : public ConstructionError {
 public:
  using ConstructionError::ConstructionError;
};

class NotFound : public ConstructionError {
 public:
  using ConstructionError::ConstructionError;
};

/// Exhaustive search refused because the instance exceeds the node cap.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bcube
