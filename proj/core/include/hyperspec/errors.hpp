#pragma once

#include <stdexcept>
#include <string>

namespace hyperspec {

// Every failure mode raised by the library. Names are stable API: the CLI
// prints errcName() on stderr and tests match on it.
enum class Errc {
  EdgeWrongSize,
  DuplicateVertexInEdge,
  VertexOutOfRange,
  DuplicateEdge,
  RankTooSmall,
  RankExceedsOrder,
  IsolatedVertexPresent,
  EmptySelection,
  DimensionMismatch,
  NotUnitVector,
  NotConverged,
  NonPositiveIterate,
  NonPositiveScale,
  InstanceTooLarge,
  NoEdges,
  ParameterOrder,
  BadParams,
  UnknownFixture,
  ParseError,
  Overflow,
};

const char* errcName(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errcName(code)) + ": " + detail),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hyperspec
