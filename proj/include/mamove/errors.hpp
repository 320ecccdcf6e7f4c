#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mamove {

enum class ErrorKind {
  InvalidArgument,
  SingularChannel,
  InfeasibleSpacing,
  FitDiverged,
  ZeroGradient,
};

std::string_view to_string(ErrorKind kind);

/// Base for every error raised by the library. `kind()` lets callers that
/// record failures (sweeps, search grids) keep a stable category.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorKind::InvalidArgument, what) {}
};

/// Gram matrix too ill-conditioned to invert (coinciding antennas or users
/// that the array cannot tell apart).
class SingularChannel : public Error {
 public:
  explicit SingularChannel(const std::string& what) : Error(ErrorKind::SingularChannel, what) {}
};

class InfeasibleSpacing : public Error {
 public:
  explicit InfeasibleSpacing(const std::string& what) : Error(ErrorKind::InfeasibleSpacing, what) {}
};

class FitDiverged : public Error {
 public:
  explicit FitDiverged(const std::string& what) : Error(ErrorKind::FitDiverged, what) {}
};

class ZeroGradient : public Error {
 public:
  explicit ZeroGradient(const std::string& what) : Error(ErrorKind::ZeroGradient, what) {}
};

}  // namespace mamove
