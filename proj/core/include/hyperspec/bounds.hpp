#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// rho = spectral radius of the adjacency tensor,
// mu  = spectral radius of the signless Laplacian tensor.
enum class BoundTarget { Rho, Mu };
enum class BoundKind { Upper, Lower };

const char* boundTargetName(BoundTarget t);  // "rho" / "mu"
const char* boundKindName(BoundKind k);      // "upper" / "lower"

// The four classical degree bounds: rho <= Delta, mu <= 2*Delta,
// rho >= delta, mu >= 2*delta. Always defined (degrees always exist).
struct DegreeBounds {
  double rhoUpper = 0.0;
  double muUpper = 0.0;
  double rhoLower = 0.0;
  double muLower = 0.0;
};

DegreeBounds degreeBounds(const Hypergraph& g);

struct IntervalBound {
  double lo = 0.0;
  double hi = 0.0;
};

// min/max average 2-degree bracket rho.
// Throws Error(IsolatedVertexPresent) when avg2 is undefined.
IntervalBound avg2Bounds(const Hypergraph& g);

// rho <= m1^(1/k) * m2^(1-1/k) with m1 >= m2 the two largest average
// 2-degrees. Evaluated as (m1/m2)^(1/k) * m2 so equal inputs reproduce the
// common value exactly. Throws Error(IsolatedVertexPresent).
double rhoUpperM(const Hypergraph& g);

// rho <= d1^(1/k) * d2^(1-1/k) with d1 >= d2 the two largest degrees.
// Throws Error(NoEdges) (with no edges the trivial bound 0 is degreeBounds'
// job and the two-degree product would be 0^0-shaped).
double rhoUpperD(const Hypergraph& g);

// rho >= mn^(1/k) * m_{n-1}^(1-1/k) with mn <= m_{n-1} the two smallest
// average 2-degrees. Throws Error(IsolatedVertexPresent).
double rhoLowerM(const Hypergraph& g);

// Lower bound from the extremal two-center family: over adjacent vertex
// pairs (u, v) with degree(u) >= degree(v), take Delta = degree(u),
// delta = degree(v), gamma = number of edges containing both, and evaluate
// the largest root of the associated characteristic polynomial:
//   value = ((Delta + delta - 2*gamma + gamma^2 + sqrt((Delta - delta)^2
//            + gamma^4 + 2*(Delta + delta - 2*gamma)*gamma^2)) / 2)^(1/k).
// The witness keeps the maximizing pair. sharp is set when g is exactly the
// two-center hypergraph for the witness parameters: every edge meets {u, v},
// gamma edges contain both, every other vertex has degree 1.
struct StarBoundWitness {
  VertexId u = 0;
  VertexId v = 0;
  std::int64_t Delta = 0;
  std::int64_t delta = 0;
  std::int64_t gamma = 0;
  double value = 0.0;
  bool sharp = false;
};

// Throws Error(NoEdges).
StarBoundWitness rhoLowerStar(const Hypergraph& g);

// Characteristic polynomial of the two-center hypergraph in s = rho^k:
//   f(rho) = (s - (Delta - gamma)) * (s^2 - (Delta + delta - 2*gamma +
//            gamma^2) * s + (Delta - gamma) * (delta - gamma)).
// Requires Delta >= delta >= gamma >= 1; throws Error(ParameterOrder).
struct StarPolynomial {
  std::array<double, 2> linear{};     // {c0, c1}: c0 + c1 * s
  std::array<double, 3> quadratic{};  // {c0, c1, c2}: c0 + c1 * s + c2 * s^2

  double evaluate(double rho, int k) const;  // the full product at s = rho^k
  double largestRoot() const;                // largest s root
};

StarPolynomial starPolynomial(std::int64_t Delta, std::int64_t delta,
                              std::int64_t gamma, int k);

// mu <= d1 + d1 * (1/dStar)^(k-1), where dStar is the unique root of
//   h(t) = d2 * t^k + (d2 - d1) * t^(k-1) - d1
// in ((d1/d2)^(1/k), d1/d2] and d1 >= d2 are the two largest degrees. For
// k = 2 or d1 == d2 the root is d1/d2 analytically and the bound is exactly
// d1 + d2; otherwise dStar is found by bisection. sharp is set when g is
// connected and regular or a blow-up of a regular hypergraph.
struct MoBound {
  double dStar = 0.0;
  double bound = 0.0;
  bool sharp = false;
};

// Throws Error(NoEdges).
MoBound muUpperMo(const Hypergraph& g);

// Weaker closed form mu <= d1 + d1^(1/k) * d2^(1-1/k). Throws Error(NoEdges).
double muUpperMoWeaker(const Hypergraph& g);

// mu <= rhoUpperM(g) + Delta. Throws Error(IsolatedVertexPresent).
double muUpperMPlusDelta(const Hypergraph& g);

// Index range convention for the j/i sweeps below. Printed keeps the range
// 2..n from the bound statements; ExcludeScaled instead drops the rank of
// the vertex the proof scales (rank 1 for the upper bound, so the two agree
// there; rank n for the lower bound).
enum class IndexConvention { Printed, ExcludeScaled };

const char* indexConventionName(IndexConvention c);

// Min-max upper bound that pairs each vertex's degree with its own average
// 2-degree. Rank vertices by avg2 descending (ties: degree descending, then
// id); with M/D the reordered arrays,
//   theta_j = max over ranks i in 2..n of (M1/Mj)^(1/k) * M_i + D_i
//   bound   = min over j in 1..n of max((M1/Mj)^(1/k) * M_j + D_1, theta_j)
// When several vertices tie for rank 1, each tied candidate is tried in that
// position and the smallest resulting bound wins. thetaTable[j] (1-based
// rank) is the inner value for the winning candidate.
// Throws Error(IsolatedVertexPresent).
struct ThetaBound {
  double bound = 0.0;
  int argminRank = 0;                // j attaining the outer min
  std::vector<double> thetaTable;    // [1..n], slot 0 unused
};

ThetaBound muUpperTheta(const Hypergraph& g,
                        IndexConvention convention = IndexConvention::Printed);

// Companion max-min lower bound; the smallest avg2 value sits at rank n:
//   bound = max over j of min((Mn/Mj)^(1/k) * M_j + D_n,
//                             min over ranked i of (Mn/Mj)^(1/k) * M_i + D_i)
// with the i-range chosen by the convention (Printed: ranks 2..n). Ties for
// rank n maximize over the candidates. Throws Error(IsolatedVertexPresent).
struct GammaBound {
  double bound = 0.0;
  int argmaxRank = 0;
};

GammaBound muLowerGamma(const Hypergraph& g,
                        IndexConvention convention = IndexConvention::Printed);

// Edge-wise pair bounds:
//   maxDegreeSum   = max over edges e of the two largest degrees in e, summed
//   maxPairFormula = max over unordered pairs {u, v} inside an edge of
//                    (d_u + d_v + sqrt((d_u - d_v)^2 + 4 * m_u * m_v)) / 2
// Throws Error(NoEdges); maxPairFormula needs avg2, so a hypergraph with an
// isolated vertex throws Error(IsolatedVertexPresent).
struct EdgePairBounds {
  double maxDegreeSum = 0.0;
  double maxPairFormula = 0.0;
};

EdgePairBounds yzlEdgeBounds(const Hypergraph& g);

// One evaluated bound. Exactly one of value / inapplicableReason is active:
// an inapplicable bound carries the name of the violated hypothesis
// (an Errc name such as IsolatedVertexPresent) instead of a number.
struct BoundEntry {
  std::string boundId;
  BoundTarget target = BoundTarget::Rho;
  BoundKind kind = BoundKind::Upper;
  std::optional<double> value;
  std::string inapplicableReason;
  bool sharp = false;       // equality certified by the matching structure test
  std::string note;         // human formula text
  std::optional<StarBoundWitness> witness;  // set for the two-center bound
};

struct BoundReport {
  std::vector<BoundEntry> entries;

  const BoundEntry* find(const std::string& boundId) const;
};

// Evaluates every bound above on g, never throwing for an inapplicable
// hypothesis (the entry records the reason instead).
BoundReport fullReport(const Hypergraph& g);

}  // namespace hyperspec
