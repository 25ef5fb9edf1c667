#ifndef POWREC_ERROR_HPP
#define POWREC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace powrec {

// Domain error with a stable machine-readable code; the CLI prints these as
// "error: CODE message" and exits 1.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct AssociativityError : Error {
  AssociativityError(int x, int y, int z, const std::string& message)
      : Error("E_ASSOC", message), x(x), y(y), z(z) {}
  int x;
  int y;
  int z;
};

struct RangeError : Error {
  explicit RangeError(const std::string& m) : Error("E_RANGE", m) {}
};

struct SizeLimitError : Error {
  explicit SizeLimitError(const std::string& m) : Error("E_SIZE_LIMIT", m) {}
};

struct BoundExceededError : Error {
  explicit BoundExceededError(const std::string& m) : Error("E_BOUND", m) {}
};

struct MissingSingletonError : Error {
  explicit MissingSingletonError(const std::string& m)
      : Error("E_MISSING_SINGLETON", m) {}
};

struct EmptyFiberError : Error {
  explicit EmptyFiberError(const std::string& m) : Error("E_EMPTY_FIBER", m) {}
};

struct NotHomomorphismError : Error {
  explicit NotHomomorphismError(const std::string& m) : Error("E_NOT_HOM", m) {}
};

struct AlphabetMismatchError : Error {
  explicit AlphabetMismatchError(const std::string& m)
      : Error("E_ALPHABET", m) {}
};

struct SyntaxError : Error {
  SyntaxError(std::size_t position, const std::string& m)
      : Error("E_SYNTAX", m + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

struct UnboundVariableError : Error {
  explicit UnboundVariableError(const std::string& m)
      : Error("E_UNBOUND_VAR", m) {}
};

struct TrackLimitError : Error {
  explicit TrackLimitError(const std::string& m) : Error("E_TRACK_LIMIT", m) {}
};

struct FormatError : Error {
  explicit FormatError(const std::string& m) : Error("E_FORMAT", m) {}
};

struct IoError : Error {
  explicit IoError(const std::string& m) : Error("E_IO", m) {}
};

}  // namespace powrec

#endif  // POWREC_ERROR_HPP
