#pragma once

#include <stdexcept>
#include <string>

namespace pick3d {

/// Every domain failure the library can report. CLI exit codes map
/// DegenerateBasis and GenerationFailed to 2 (degenerate-but-understood
/// inputs), everything else to 1.
enum class Errc {
  ZeroVector,
  DegenerateBasis,
  NotInPlane,
  NotInLattice,
  TooFewVertices,
  DuplicateVertex,
  NotCoplanar,
  DegenerateArea,
  SelfIntersecting,
  NormalMismatch,
  DegenerateSegment,
  InternalInconsistency,
  DegeneratePickValue,
  GenerationFailed,
  InvalidR,
  ParseError,
  IoError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace pick3d
