#pragma once

#include <stdexcept>
#include <string>

namespace multifan {

// Error taxonomy mirrored by the CLI exit codes:
//   ValidationError  -> 2  (malformed input, schema violation, invalid fan)
//   PreconditionError-> 3  (well-formed input outside an operation's domain)
//   InternalError    -> 4  (a certified identity failed; indicates a bug)
enum class ErrorKind { Validation, Precondition, Internal };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

inline void requireValid(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::Validation, message);
}

inline void requirePre(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::Precondition, message);
}

inline void internalCheck(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::Internal, message);
}

}  // namespace multifan
