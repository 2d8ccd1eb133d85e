#ifndef RMF_ERROR_HPP
#define RMF_ERROR_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rmf {

/// Malformed type text. `position()` is the 0-based byte offset of the
/// offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A well-formed request that violates a mathematical precondition
/// (non-existent type, zero index handed to an enumerator, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration visited more candidate structures than allowed.
class WorkLimitExceeded : public std::runtime_error {
 public:
  explicit WorkLimitExceeded(std::uint64_t limit)
      : std::runtime_error("work limit of " + std::to_string(limit) +
                           " candidate structures exceeded"),
        limit_(limit) {}

  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

}  // namespace rmf

#endif  // RMF_ERROR_HPP
