#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tightforge {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A table violates one of the structural axioms.  `witness` names the
/// offending elements, typically as a triple "(a, b, c)".
class InvalidStructure : public Error {
 public:
  InvalidStructure(std::string reason, std::string witness)
      : Error(reason + (witness.empty() ? "" : " at " + witness)),
        reason_(std::move(reason)),
        witness_(std::move(witness)) {}

  const std::string& reason() const noexcept { return reason_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string reason_;
  std::string witness_;
};

/// Covers are only defined for nonzero targets.
class ZeroTarget : public Error {
 public:
  ZeroTarget() : Error("cover target is the zero element") {}
};

class SizeCapExceeded : public Error {
 public:
  SizeCapExceeded(const std::string& what, std::size_t size, std::size_t cap)
      : Error(what + ": size " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}

  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

class PreconditionFailed : public Error {
 public:
  explicit PreconditionFailed(const std::string& what) : Error("precondition failed: " + what) {}
};

/// The dual map was requested for a homomorphism that is not tight.
class NotTight : public Error {
 public:
  explicit NotTight(const std::string& witness) : Error("homomorphism is not tight: " + witness) {}
};

/// Malformed input document; `where` is a field path such as "meet[2][1]".
class InputError : public Error {
 public:
  InputError(std::string where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// Raised when an internally asserted theorem-level invariant fails.  Seeing
/// one of these means a bug in the library, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error("invariant violated: " + what) {}
};

inline void ensure(bool condition, const char* what) {
  if (!condition) throw InvariantViolation(what);
}

}  // namespace tightforge
