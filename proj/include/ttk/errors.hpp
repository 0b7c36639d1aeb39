#ifndef TTK_ERRORS_HPP_
#define TTK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ttk {

// Stable error identifiers, used by the CLI for reporting and by tests to
// assert on failure modes without parsing message text.
enum class Err {
  UnknownId,
  DuplicateId,
  NotComposable,
  MissingTableEntry,
  DegreeOverflow,
  PreconditionFailed,
  NotAbelian,
  NotIsomorphism,
  InvalidMorphism,
  NotPointed,
  NotConnected,
  NotSkeletal,
  CompositesNotNull,
  NotDefined,
  EnumerationCapExceeded,
  InvalidK,
  InvalidChain,
  IndexOutOfWindow,
  IndexOutOfRange,
  SecondaryInvalid,
  NotAResolution,
  NotAdditive,
  NoCorrectionFound,
  NotACocycle,
  D2Nonzero,
  NoXiExists,
  WindowExceeded,
  BasisMismatch,
  IllDefinedComposition,
  InvalidDouble,
  UnknownFormat,
  BadInput,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, std::string const& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg),
        code_(code) {}

  Err code() const noexcept {
    return code_;
  }

 private:
  Err code_;
};

[[noreturn]] inline void throw_error(Err code, std::string const& msg) {
  throw Error(code, msg);
}

}  // namespace ttk
#endif  // TTK_ERRORS_HPP_
