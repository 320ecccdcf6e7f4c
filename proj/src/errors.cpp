#include "mamove/errors.hpp"

namespace mamove {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SingularChannel: return "SingularChannel";
    case ErrorKind::InfeasibleSpacing: return "InfeasibleSpacing";
    case ErrorKind::FitDiverged: return "FitDiverged";
    case ErrorKind::ZeroGradient: return "ZeroGradient";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace mamove
