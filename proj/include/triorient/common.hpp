#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace triorient {

inline constexpr const char* kVersion = "0.1.0";

enum class Errc {
  NonTriangularFace,
  InconsistentRotation,
  WrongExternalCount,
  NotSimple,
  TooSmall,
  Infeasible,
  NoValidColoring,
  ExternalVertex,
  InvalidTower,
  CapExceeded,
  TooLarge,
  IncompleteSpace,
  EmptySide,
  HorizonTooShort,
  BadInput,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonTriangularFace: return "NonTriangularFace";
    case Errc::InconsistentRotation: return "InconsistentRotation";
    case Errc::WrongExternalCount: return "WrongExternalCount";
    case Errc::NotSimple: return "NotSimple";
    case Errc::TooSmall: return "TooSmall";
    case Errc::Infeasible: return "Infeasible";
    case Errc::NoValidColoring: return "NoValidColoring";
    case Errc::ExternalVertex: return "ExternalVertex";
    case Errc::InvalidTower: return "InvalidTower";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::TooLarge: return "TooLarge";
    case Errc::IncompleteSpace: return "IncompleteSpace";
    case Errc::EmptySide: return "EmptySide";
    case Errc::HorizonTooShort: return "HorizonTooShort";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

/// Error with a machine-readable code and the offending field/vertex/face.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string field, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + " [" + field + "]: " + msg),
        code_(code),
        field_(std::move(field)) {}

  Errc code() const { return code_; }
  const std::string& field() const { return field_; }

 private:
  Errc code_;
  std::string field_;
};

[[noreturn]] inline void fail(Errc code, const std::string& field, const std::string& msg) {
  throw Error(code, field, msg);
}

// Edge colors of a Schnyder wood. Each external vertex roots the tree of
// its own color: external[0] red, external[1] green, external[2] blue.
enum class Color : std::uint8_t { Blue = 0, Red = 1, Green = 2 };

inline const char* color_name(Color c) {
  switch (c) {
    case Color::Blue: return "blue";
    case Color::Red: return "red";
    case Color::Green: return "green";
  }
  return "?";
}

}  // namespace triorient
