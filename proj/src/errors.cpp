#include "pick3d/errors.hpp"

namespace pick3d {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::DegenerateBasis: return "DegenerateBasis";
    case Errc::NotInPlane: return "NotInPlane";
    case Errc::NotInLattice: return "NotInLattice";
    case Errc::TooFewVertices: return "TooFewVertices";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::NotCoplanar: return "NotCoplanar";
    case Errc::DegenerateArea: return "DegenerateArea";
    case Errc::SelfIntersecting: return "SelfIntersecting";
    case Errc::NormalMismatch: return "NormalMismatch";
    case Errc::DegenerateSegment: return "DegenerateSegment";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::DegeneratePickValue: return "DegeneratePickValue";
    case Errc::GenerationFailed: return "GenerationFailed";
    case Errc::InvalidR: return "InvalidR";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace pick3d
