#ifndef SUPERSAT_ERROR_HPP
#define SUPERSAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace supersat {

enum class Errc {
  InvalidParameter,
  ElementOutOfRange,
  MalformedLine,
  DuplicateSubset,
  MissingHeader,
  SizeMismatch,
  NotInFamily,
  InvalidChain,
  TooLarge,
  Overflow,
  Io,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::ElementOutOfRange: return "ElementOutOfRange";
    case Errc::MalformedLine: return "MalformedLine";
    case Errc::DuplicateSubset: return "DuplicateSubset";
    case Errc::MissingHeader: return "MissingHeader";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::NotInFamily: return "NotInFamily";
    case Errc::InvalidChain: return "InvalidChain";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Overflow: return "Overflow";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

/// Every precondition violation in the library is reported with this type.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

inline void require(bool condition, Errc code, const std::string& what) {
  if (!condition) throw Error(code, what);
}

} // namespace supersat

#endif // SUPERSAT_ERROR_HPP
