#pragma once

#include <stdexcept>
#include <string>

namespace ratiolab {

enum class Errc {
  UniverseTooLarge,
  RankMismatch,
  DuplicateSet,
  ElementOutOfRange,
  FamilyTooLarge,
  NotIntersecting,
  NotMaximal,
  TooLargeToVerify,
  TooLargeToEnumerate,
  UncoveredVertex,
  UncoveredUniverse,
  NotPrime,
  BadParameters,
  NoPrimeInWindow,
  NoFeasibleParams,
  NoFamilies,
  TauEqualsR,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::UniverseTooLarge: return "UniverseTooLarge";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::DuplicateSet: return "DuplicateSet";
    case Errc::ElementOutOfRange: return "ElementOutOfRange";
    case Errc::FamilyTooLarge: return "FamilyTooLarge";
    case Errc::NotIntersecting: return "NotIntersecting";
    case Errc::NotMaximal: return "NotMaximal";
    case Errc::TooLargeToVerify: return "TooLargeToVerify";
    case Errc::TooLargeToEnumerate: return "TooLargeToEnumerate";
    case Errc::UncoveredVertex: return "UncoveredVertex";
    case Errc::UncoveredUniverse: return "UncoveredUniverse";
    case Errc::NotPrime: return "NotPrime";
    case Errc::BadParameters: return "BadParameters";
    case Errc::NoPrimeInWindow: return "NoPrimeInWindow";
    case Errc::NoFeasibleParams: return "NoFeasibleParams";
    case Errc::NoFamilies: return "NoFamilies";
    case Errc::TauEqualsR: return "TauEqualsR";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace ratiolab
