#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

/// Base class for all domain errors thrown by the library.
class HardyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Mismatched or invalid dimensions (d <= 0, basis/state size disagreement).
class DimensionError : public HardyError {
  public:
    using HardyError::HardyError;
};

/// Outcome label or index outside {0, ..., d-1}.
class RangeError : public HardyError {
  public:
    using HardyError::HardyError;
};

/// Input violates a documented precondition (e.g. non-triangular state).
class PreconditionError : public HardyError {
  public:
    using HardyError::HardyError;
};

/// The orthonormal-complement construction ran out of directions.
class ConstructionError : public HardyError {
  public:
    ConstructionError(int level, const std::string& what)
        : HardyError(what), level_(level) {}
    int level() const { return level_; }

  private:
    int level_;
};

/// A guarded resource limit (e.g. the LHV enumeration cap) was exceeded.
class ResourceLimitError : public HardyError {
  public:
    using HardyError::HardyError;
};

/// API misuse that is not a data problem (e.g. two settings of one party).
class UsageError : public HardyError {
  public:
    using HardyError::HardyError;
};

}  // namespace hardy
