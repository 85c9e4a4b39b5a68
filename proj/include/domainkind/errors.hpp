#pragma once

#include <stdexcept>
#include <string>

namespace domainkind {

// Broad failure categories, used by the CLI to pick exit codes and by tests
// to assert on the reason a call was rejected.
enum class ErrorKind {
    Input,         // malformed or out-of-range arguments
    OutOfDomain,   // a point that is not inside the domain / disk
    Precondition,  // a mathematical precondition does not hold
    Accuracy,      // a numerical routine could not meet its tolerance
    Indeterminate, // the answer is not well defined (e.g. degenerate critical point)
    Bracket,       // bisection bracket does not straddle the threshold
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::Input: return "input";
    case ErrorKind::OutOfDomain: return "out-of-domain";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Accuracy: return "accuracy";
    case ErrorKind::Indeterminate: return "indeterminate";
    case ErrorKind::Bracket: return "bracket";
    }
    return "unknown";
}

} // namespace domainkind
