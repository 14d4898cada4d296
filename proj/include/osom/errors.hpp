#pragma once

#include <stdexcept>
#include <string>

namespace osom {

enum class ErrorCode {
    // instance / config validation
    BiasOutOfRange,
    ThetaNormExceeded,
    SimpleModelNonzeroTheta,
    InvalidParam,
    // estimation / envelopes
    RoundBeforeWarmup,
    LengthMismatch,
    ZeroPulls,
    // policy protocol
    HorizonExceeded,
    ArmMismatch,
    // cli / io
    UnknownFlag,
    InvalidValue,
    MissingRequired,
    IoError,
};

const char* to_string(ErrorCode code);

// Single exception type carrying a machine-checkable code.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace osom
