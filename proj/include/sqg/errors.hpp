#pragma once

#include <stdexcept>
#include <string>

namespace sqg {

/// Numerical failure at runtime (overflow, blow-up, non-convergence).
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// A Gevrey exponential exceeded the configured cap; results would be inf.
class OverflowError : public NumericalError {
  public:
    explicit OverflowError(const std::string& what) : NumericalError(what) {}
};

/// Solution left the trusted range (physical max or per-step growth guard).
class BlowUpError : public NumericalError {
  public:
    explicit BlowUpError(const std::string& what) : NumericalError(what) {}
};

/// File-format or filesystem failure.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sqg
