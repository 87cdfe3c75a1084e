#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

enum class OperatorKind { Adjacency, SignlessLaplacian };

const char* operatorName(OperatorKind kind);

// Implicit action of the order-k adjacency or signless Laplacian tensor of a
// k-uniform hypergraph, optionally conjugated by a positive diagonal scaling
// u (which preserves the eigenvalues). Never materializes the tensor:
//   adjacency   (Ax)_v = sum over edges e containing v of prod_{w in e, w!=v} x_w
//   signless    (Qx)_v = degree(v) * x_v^(k-1) + (Ax)_v
// The hypergraph must outlive the operator.
class TensorOperator {
 public:
  TensorOperator(const Hypergraph& g, OperatorKind kind);

  const Hypergraph& hypergraph() const noexcept { return *g_; }
  OperatorKind kind() const noexcept { return kind_; }
  bool isScaled() const noexcept { return !scale_.empty(); }
  const std::vector<double>& scale() const noexcept { return scale_; }

  // x is indexed by vertex id (size n+1, slot 0 ignored). Throws
  // Error(DimensionMismatch) on a wrong-sized vector.
  std::vector<double> apply(const std::vector<double>& x) const;

 private:
  friend TensorOperator scaledOperator(const TensorOperator&, const std::vector<double>&);

  const Hypergraph* g_;
  OperatorKind kind_;
  std::vector<double> scale_;  // empty means identity
};

// Conjugation by diag(u): x -> S(u)^-1 T(u .* x) with S(u)_v = u_v^(k-1).
// Requires u[v] > 0 and finite for all v; throws Error(NonPositiveScale).
// Scaling a scaled operator composes the factors.
TensorOperator scaledOperator(const TensorOperator& base, const std::vector<double>& u);

// k * sum over edges of prod_{v in e} x_v, for x on the unit k-norm sphere.
// Throws Error(NotUnitVector) when | ||x||_k - 1 | > 1e-9 and
// Error(DimensionMismatch) on a wrong-sized vector.
double rayleigh(const Hypergraph& g, const std::vector<double>& x);

struct PowerOptions {
  double shift = 1.0;       // sigma added as sigma * x^(k-1); keeps iterates positive
  double tol = 1e-10;       // stop when hi - lo <= tol * max(hi, 1.0)
  std::size_t maxIter = 1000000;
  bool recordTrace = false;  // keep per-iteration (lo, hi) pairs
};

// Certified eigenvalue estimate: lo <= lambda <= hi holds exactly (the pair
// is a min/max of Rayleigh-like ratios at the returned positive vector),
// lambda = (lo + hi) / 2, and the vector has unit k-norm.
struct EigenEstimate {
  double lambda = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> vector;  // [1..n], slot 0 unused
  std::size_t iterations = 0;
  bool converged = false;
  double shiftUsed = 0.0;
  std::vector<std::pair<double, double>> trace;  // filled when recordTrace
};

class NotConvergedError : public Error {
 public:
  explicit NotConvergedError(EigenEstimate partial);
  const EigenEstimate& estimate() const noexcept { return estimate_; }

 private:
  EigenEstimate estimate_;
};

// Shifted power iteration for the spectral radius of a nonnegative tensor
// operator. The hypergraph should be connected (use spectralRadius /
// signlessLaplacianRadius for general input); on a disconnected input the hi
// certificate still holds but lo may undershoot the true radius.
// Requires shift > 0 for Adjacency (whose diagonal is zero) and shift >= 0
// for SignlessLaplacian; throws Error(BadParams) otherwise, NotConvergedError
// after maxIter, and Error(NonPositiveIterate) if an iterate degenerates.
EigenEstimate powerIteration(const TensorOperator& op, const PowerOptions& opts = {});

// Largest adjacency eigenvalue of g: solves each connected component
// separately and takes the best certified interval (lo is the largest
// component lo, hi the largest component hi). Edgeless input yields 0.
EigenEstimate spectralRadius(const Hypergraph& g, const PowerOptions& opts = {});

// Same decomposition for the signless Laplacian tensor.
EigenEstimate signlessLaplacianRadius(const Hypergraph& g, const PowerOptions& opts = {});

struct OracleOptions {
  int restarts = 48;
  int steps = 600;
  std::optional<std::uint64_t> seed;  // default: HYPERSPEC_SEED env var, else fixed
};

struct OracleResult {
  double value = 0.0;           // best Rayleigh value seen (a lower bound)
  std::vector<double> argVector;  // [1..n], unit k-norm, where it was attained
  std::uint64_t seed = 0;
};

// Derivative-free maximization of x^T (Tx) over the nonnegative unit k-norm
// sphere: multiplicative updates from random positive starts, keeping the
// best value over every iterate. Independent of powerIteration's certificate
// logic on purpose; used to cross-check it. Throws Error(InstanceTooLarge)
// when g has more than 12 vertices.
OracleResult bruteForceOracle(const Hypergraph& g, OperatorKind kind,
                              const OracleOptions& opts = {});

}  // namespace hyperspec
