#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperspec/errors.hpp"

namespace hyperspec {

// Vertex ids are 1-based everywhere: in edges, in files, and in the
// per-vertex arrays below, whose index 0 slot is unused padding.
using VertexId = int;
using Edge = std::vector<VertexId>;

class Hypergraph;

// Validates and canonicalizes. Throws Error with code:
//   BadParams             n < 1
//   RankTooSmall          k < 2
//   RankExceedsOrder      k > n while edges are present
//   EdgeWrongSize         an edge whose size differs from k
//   DuplicateVertexInEdge repeated vertex inside one edge
//   VertexOutOfRange      vertex outside 1..n
//   DuplicateEdge         two edges with the same vertex set
// An edgeless hypergraph with k > n is allowed; it represents degenerate
// generator output such as a star with zero edges.
Hypergraph buildHypergraph(VertexId order, int rank, std::vector<Edge> edges);

// A k-uniform hypergraph on vertices 1..n. Immutable once built; edges are
// stored sorted (each edge ascending, the edge list lexicographic) and an
// incidence index maps each vertex to the edges containing it.
class Hypergraph {
 public:
  VertexId order() const noexcept { return order_; }  // n
  int rank() const noexcept { return rank_; }         // k

  std::size_t edgeCount() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Indices into edges() of the edges containing v.
  const std::vector<std::size_t>& incidentEdges(VertexId v) const;
  std::int64_t degree(VertexId v) const;

 private:
  friend Hypergraph buildHypergraph(VertexId, int, std::vector<Edge>);

  Hypergraph() = default;

  VertexId order_ = 0;
  int rank_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;  // [1..n]
};

// Degrees and average 2-degrees, plus the two vertex orderings the bound
// formulas consume. avg2[v] = (sum over edges e containing v of the product
// of the degrees of the other k-1 vertices of e) / degree(v)^(k-1); it is
// undefined (and omitted, along with sortedByM) when any vertex is isolated.
// Both orderings break ties by larger degree first, then smaller id.
struct DegreeProfile {
  std::vector<std::int64_t> degrees;         // [1..n]
  std::optional<std::vector<double>> avg2;   // [1..n]
  std::vector<VertexId> sortedByD;           // ids, degree descending
  std::vector<VertexId> sortedByM;           // ids, avg2 descending; empty if !avg2
};

// Throws Error(Overflow) if a degree product overflows the double range.
DegreeProfile degreeProfile(const Hypergraph& g);

struct ComponentDecomposition {
  std::vector<int> componentOf;                 // [1..n] -> 0-based component
  std::vector<std::vector<VertexId>> components;  // ids ascending per component
  std::vector<VertexId> isolatedVertices;       // the singleton edgeless ones
};

ComponentDecomposition connectedComponents(const Hypergraph& g);
bool isConnected(const Hypergraph& g);

struct RegularityCheck {
  bool regular = false;
  std::int64_t degree = 0;  // the common degree when regular
};

RegularityCheck isRegular(const Hypergraph& g);

// A blow-up attaches one new vertex (the apex) to every edge of a smaller
// uniform hypergraph. G matches when some vertex lies in all edges and the
// remaining non-isolated vertices share one common degree. False if edgeless.
struct BlowupCheck {
  bool blowup = false;
  VertexId apex = 0;
  std::int64_t baseDegree = 0;
};

BlowupCheck isBlowupOfRegular(const Hypergraph& g);

// True when max avg2 - min avg2 <= relTol * max avg2.
// Throws Error(IsolatedVertexPresent) when avg2 is undefined.
bool hasEqualAvg2Degrees(const Hypergraph& g, double relTol = 1e-9);

// Subhypergraph spanned by the chosen edges, relabeled to 1..order.
// vertexMap[w] is the original id of new vertex w.
struct InducedSubhypergraph {
  Hypergraph graph;
  std::vector<VertexId> vertexMap;  // [1..sub order]
};

// Throws Error(EmptySelection) when edgeIndices is empty and
// Error(BadParams) on an out-of-range edge index.
InducedSubhypergraph inducedSubhypergraph(const Hypergraph& g,
                                          const std::vector<std::size_t>& edgeIndices);

}  // namespace hyperspec
