#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace cardlab {

enum class ErrorKind {
  Syntax,          // malformed DSL input
  Sort,            // naturals/reals mixing, or an operation on the wrong sort
  Guard,           // decidability guard (e.g. polynomial image intersected with another)
  UndefinedInput,  // 0^0 and similar
  UnknownResult,   // answer depends on an undecided comparison (CH)
  UnknownSize,
  NotDisjoint,
  Exhausted,       // asked for more elements than a finite set has
  SizeMismatch,
  UnitMismatch,
  SizeLimit,       // brute-force oracle input too large
  ResourceLimit,   // period/threshold/exponent beyond the configured caps
  Catalog,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the engine. `module` names the owning module and
/// `subject` the offending subexpression when one is known.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string& message,
        std::string subject = {}, std::optional<std::size_t> position = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }
  const std::string& subject() const noexcept { return subject_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

  /// Copy of this error with the subject filled in, if it was empty.
  Error with_subject(std::string subject) const;
  /// Copy of this error with the position filled in, if it was empty.
  Error with_position(std::size_t position) const;

 private:
  ErrorKind kind_;
  std::string module_;
  std::string subject_;
  std::optional<std::size_t> position_;
};

}  // namespace cardlab

namespace cardlab {

/// `sets: guard violation at 8: message [subject]`
std::string describe(const Error& e);

}  // namespace cardlab
