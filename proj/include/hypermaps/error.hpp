#ifndef HYPERMAPS_ERROR_HPP
#define HYPERMAPS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypermaps {

enum class ErrorCode {
  EmptyGenerators,
  DegreeMismatch,
  NotAMember,
  NotNormal,
  GroupTooLarge,
  NotInvolution,
  HasFixedPoint,
  NotTransitive,
  InvalidImage,
  NotConservative,
  NotBipartite,
  NotBipartiteRegular,
  NotAMap,
  InvalidRestriction,
  NoValencyOneClass,
  KernelMismatch,
  LimitExceeded,
  Degenerate,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::HasFixedPoint: return "HasFixedPoint";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::InvalidImage: return "InvalidImage";
    case ErrorCode::NotConservative: return "NotConservative";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::NotBipartiteRegular: return "NotBipartiteRegular";
    case ErrorCode::NotAMap: return "NotAMap";
    case ErrorCode::InvalidRestriction: return "InvalidRestriction";
    case ErrorCode::NoValencyOneClass: return "NoValencyOneClass";
    case ErrorCode::KernelMismatch: return "KernelMismatch";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message adds the offending generator, flag or count.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hypermaps

#endif  // HYPERMAPS_ERROR_HPP
