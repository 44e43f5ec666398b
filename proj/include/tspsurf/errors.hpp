#ifndef TSPSURF_ERRORS_HPP
#define TSPSURF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tspsurf {

enum class ErrorCode {
  UnsupportedFormat,
  MalformedSection,
  IndexOutOfRange,
  ComplexTooLarge,
  DegenerateGeometry,
  NotPlanarCompatible,
  TooFewTriangles,
  DisconnectedEdgeSet,
  BackendUnavailable,
  BackendParseError,
  TooLarge,
  DecodeError,
  NotACycle,
  NotHamiltonian,
  MultipleCycles,
  NoCoordinates,
  InvalidArgument,
  IoError,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception carrying a machine-checkable error code.
class TspError : public std::runtime_error {
public:
  TspError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

} // namespace tspsurf

#endif
