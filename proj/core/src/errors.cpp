#include "hyperspec/errors.hpp"

namespace hyperspec {

const char* errcName(Errc code) {
  switch (code) {
    case Errc::EdgeWrongSize: return "EdgeWrongSize";
    case Errc::DuplicateVertexInEdge: return "DuplicateVertexInEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::RankTooSmall: return "RankTooSmall";
    case Errc::RankExceedsOrder: return "RankExceedsOrder";
    case Errc::IsolatedVertexPresent: return "IsolatedVertexPresent";
    case Errc::EmptySelection: return "EmptySelection";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotUnitVector: return "NotUnitVector";
    case Errc::NotConverged: return "NotConverged";
    case Errc::NonPositiveIterate: return "NonPositiveIterate";
    case Errc::NonPositiveScale: return "NonPositiveScale";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::NoEdges: return "NoEdges";
    case Errc::ParameterOrder: return "ParameterOrder";
    case Errc::BadParams: return "BadParams";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::ParseError: return "ParseError";
    case Errc::Overflow: return "Overflow";
  }
  return "UnknownError";
}

}  // namespace hyperspec
