#ifndef CASIMIR_ERRORS_HPP
#define CASIMIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace casimir {

/// Base class for all library errors. Carries the process exit code used by
/// the CLI (2 = bad input, 3 = non-dominant weight, 4 = degenerate roots,
/// 5 = internal contract violation).
class Error : public std::runtime_error {
 public:
  Error(std::string msg, int exit_code) : std::runtime_error(std::move(msg)), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("parse error: " + msg, 2) {}
};

struct NegativeEntry : Error {
  explicit NegativeEntry(const std::string& msg) : Error("negative entry: " + msg, 2) {}
};

struct NotDominant : Error {
  explicit NotDominant(const std::string& msg) : Error("not dominant: " + msg, 3) {}
};

struct MixedSignature : Error {
  explicit MixedSignature(const std::string& msg) : Error("mixed signature: " + msg, 5) {}
};

struct IndexBelowRange : Error {
  explicit IndexBelowRange(const std::string& msg) : Error("index below range: " + msg, 5) {}
};

struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& msg) : Error("shape mismatch: " + msg, 5) {}
};

struct SlotMismatch : Error {
  explicit SlotMismatch(const std::string& msg) : Error("slot mismatch: " + msg, 5) {}
};

struct DimensionCap : Error {
  explicit DimensionCap(const std::string& msg) : Error("dimension cap exceeded: " + msg, 5) {}
};

struct NotHomogeneous : Error {
  explicit NotHomogeneous(const std::string& msg) : Error("not homogeneous: " + msg, 5) {}
};

struct NotScalar : Error {
  explicit NotScalar(const std::string& msg) : Error("operator is not scalar: " + msg, 5) {}
};

struct Unstable : Error {
  explicit Unstable(const std::string& msg) : Error("truncation unstable: " + msg, 5) {}
};

struct DegenerateRoots : Error {
  explicit DegenerateRoots(const std::string& msg) : Error("degenerate roots: " + msg, 4) {}
};

struct TruncationTooSmall : Error {
  explicit TruncationTooSmall(const std::string& msg) : Error("truncation too small: " + msg, 5) {}
};

/// Internal contract violation (a bug, not a user error).
struct InternalError : Error {
  explicit InternalError(const std::string& msg) : Error("internal error: " + msg, 5) {}
};

}  // namespace casimir

#endif  // CASIMIR_ERRORS_HPP
