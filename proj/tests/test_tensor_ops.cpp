#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "doctest.h"
#include "hyperspec/errors.hpp"
#include "hyperspec/generators.hpp"
#include "hyperspec/tensor_ops.hpp"
#include "test_support.hpp"

using namespace hyperspec;

namespace {

// Frozen reference values for the bundled fixtures (17 significant digits),
// each certified independently with 60-digit interval arithmetic.
constexpr double kRhoH1 = 6.0;
constexpr double kRhoH2 = 5.0;
constexpr double kRhoG1 = 2.4779672430090125;
constexpr double kRhoG2 = 1.4655712318767680;
constexpr double kRhoG3 = 4.7495367223344363;
constexpr double kMuH1 = 13.815007314005327;
constexpr double kMuH2 = 12.275632377039300;
constexpr double kMuG1 = 8.0616884359048098;
constexpr double kMuG2 = 3.2055694304005903;
constexpr double kMuG3 = 9.6397117689357861;

std::vector<double> unitUniform(const Hypergraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<double> x(n + 1, std::pow(static_cast<double>(n), -1.0 / g.rank()));
  x[0] = 0.0;
  return x;
}

}  // namespace

TEST_SUITE("tensor_ops") {

TEST_CASE("apply on a single edge") {
  const Hypergraph g = buildHypergraph(3, 3, {{1, 2, 3}});
  const TensorOperator adj(g, OperatorKind::Adjacency);
  const TensorOperator qlap(g, OperatorKind::SignlessLaplacian);
  const std::vector<double> x = {0.0, 1.0, 2.0, 3.0};

  const std::vector<double> a = adj.apply(x);
  CHECK(a[1] == 6.0);
  CHECK(a[2] == 3.0);
  CHECK(a[3] == 2.0);

  const std::vector<double> q = qlap.apply(x);
  CHECK(q[1] == 6.0 + 1.0);
  CHECK(q[2] == 3.0 + 4.0);
  CHECK(q[3] == 2.0 + 9.0);
}

TEST_CASE("apply handles zero entries without poisoning products") {
  const Hypergraph g = buildHypergraph(4, 3, {{1, 2, 3}, {2, 3, 4}});
  const TensorOperator adj(g, OperatorKind::Adjacency);
  const std::vector<double> x = {0.0, 0.0, 2.0, 3.0, 5.0};
  const std::vector<double> y = adj.apply(x);
  CHECK(y[1] == 6.0);
  CHECK(y[2] == 0.0 + 15.0);
  CHECK(y[3] == 0.0 + 10.0);
  CHECK(y[4] == 6.0);
  for (double v : y) CHECK(std::isfinite(v));
}

TEST_CASE("apply validates dimensions") {
  const Hypergraph g = buildHypergraph(3, 3, {{1, 2, 3}});
  const TensorOperator adj(g, OperatorKind::Adjacency);
  CHECK_THROWS_AS(adj.apply(std::vector<double>(3, 1.0)), Error);
  try {
    adj.apply(std::vector<double>(5, 1.0));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DimensionMismatch);
  }
}

TEST_CASE("rayleigh value on the unit sphere") {
  const Hypergraph g = buildHypergraph(3, 3, {{1, 2, 3}});
  const std::vector<double> x = unitUniform(g);
  // k * sum_e prod x = 3 * (1/3) = 1, the exact spectral radius of one edge.
  CHECK(rayleigh(g, x) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(rayleigh(g, std::vector<double>(4, 1.0)), Error);
  try {
    rayleigh(g, std::vector<double>(4, 1.0));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotUnitVector);
  }
}

TEST_CASE("power iteration certifies fixture spectral radii") {
  struct Row {
    const char* name;
    double rho;
    double mu;
  };
  const Row rows[] = {
      {"H1", kRhoH1, kMuH1}, {"H2", kRhoH2, kMuH2}, {"G1", kRhoG1, kMuG1},
      {"G2", kRhoG2, kMuG2}, {"G3", kRhoG3, kMuG3},
  };
  for (const Row& row : rows) {
    CAPTURE(row.name);
    const Hypergraph g = fixture(row.name);

    const EigenEstimate ra = spectralRadius(g);
    CHECK(ra.converged);
    CHECK(ra.iterations <= 100000);
    CHECK(ra.lambda == doctest::Approx(row.rho).epsilon(1e-9));
    // The certificate interval brackets the true value (1e-9 roundoff slack).
    CHECK(ra.lo <= row.rho + 1e-9);
    CHECK(ra.hi >= row.rho - 1e-9);
    CHECK(ra.hi - ra.lo <= 1e-10 * std::max(ra.hi, 1.0) + 1e-15);

    const EigenEstimate rq = signlessLaplacianRadius(g);
    CHECK(rq.converged);
    CHECK(rq.lambda == doctest::Approx(row.mu).epsilon(1e-9));
    CHECK(rq.lo <= row.mu + 1e-9);
    CHECK(rq.hi >= row.mu - 1e-9);

    // Eigenvector slots are positive (connected input) with unit k-norm.
    double norm = 0.0;
    for (VertexId v = 1; v <= g.order(); ++v) {
      CHECK(ra.vector[static_cast<std::size_t>(v)] > 0.0);
      norm += std::pow(ra.vector[static_cast<std::size_t>(v)], g.rank());
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rayleigh(g, ra.vector) <= ra.hi + 1e-9);
  }
}

TEST_CASE("certificate trace is monotone") {
  PowerOptions opts;
  opts.recordTrace = true;
  const EigenEstimate est = spectralRadius(fixture("H2"), opts);
  REQUIRE(est.trace.size() >= 2);
  for (std::size_t i = 0; i + 1 < est.trace.size(); ++i) {
    CHECK(est.trace[i].first <= est.trace[i + 1].first + 1e-12);
    CHECK(est.trace[i].second >= est.trace[i + 1].second - 1e-12);
    CHECK(est.trace[i].first <= est.trace[i].second);
  }
  CHECK(est.trace.back().first == est.lo);
  CHECK(est.trace.back().second == est.hi);
}

TEST_CASE("non-convergence carries partial diagnostics") {
  PowerOptions opts;
  opts.maxIter = 3;
  opts.tol = 1e-15;
  try {
    spectralRadius(fixture("G1"), opts);
    FAIL("expected NotConvergedError");
  } catch (const NotConvergedError& e) {
    CHECK(e.code() == Errc::NotConverged);
    const EigenEstimate& est = e.estimate();
    CHECK_FALSE(est.converged);
    CHECK(est.iterations == 3);
    CHECK(est.lo <= est.hi);
    // The hi certificate already bounds the radius from above.
    CHECK(est.hi >= kRhoG1 - 1e-9);
    CHECK(est.lo <= kRhoG1 + 1e-9);
    double norm = 0.0;
    for (std::size_t v = 1; v < est.vector.size(); ++v) {
      norm += std::pow(est.vector[v], 4);
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("power iteration rejects bad options") {
  const Hypergraph g = fixture("G2");
  const TensorOperator adj(g, OperatorKind::Adjacency);
  auto expectBad = [&](PowerOptions opts) {
    try {
      powerIteration(adj, opts);
      FAIL("expected BadParams");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::BadParams);
    }
  };
  expectBad({.shift = 0.0});  // zero diagonal needs a positive shift
  expectBad({.shift = -1.0});
  expectBad({.tol = 0.0});
  expectBad({.tol = -1e-3});
  expectBad({.maxIter = 0});

  // Zero shift is fine for the signless Laplacian (positive diagonal).
  const TensorOperator qlap(g, OperatorKind::SignlessLaplacian);
  PowerOptions zero;
  zero.shift = 0.0;
  const EigenEstimate est = powerIteration(qlap, zero);
  CHECK(est.converged);
  CHECK(est.lambda == doctest::Approx(kMuG2).epsilon(1e-9));
  CHECK(est.shiftUsed == 0.0);
}

TEST_CASE("diagonal scaling preserves eigenvalues") {
  const Hypergraph g = fixture("G2");
  const TensorOperator adj(g, OperatorKind::Adjacency);
  std::mt19937_64 rng(7u);
  std::uniform_real_distribution<double> dist(0.2, 5.0);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> u(static_cast<std::size_t>(g.order()) + 1, 1.0);
    for (VertexId v = 1; v <= g.order(); ++v) u[static_cast<std::size_t>(v)] = dist(rng);
    const TensorOperator scaled = scaledOperator(adj, u);
    CHECK(scaled.isScaled());
    const EigenEstimate est = powerIteration(scaled);
    CHECK(est.converged);
    CHECK(est.lambda == doctest::Approx(kRhoG2).epsilon(1e-8));
  }
}

TEST_CASE("scaling a scaled operator composes") {
  const Hypergraph g = buildHypergraph(4, 3, {{1, 2, 3}, {2, 3, 4}});
  const TensorOperator adj(g, OperatorKind::Adjacency);
  const std::vector<double> u = {0.0, 2.0, 0.5, 3.0, 1.5};
  const std::vector<double> w = {0.0, 1.0, 4.0, 0.25, 2.0};
  std::vector<double> uw(u.size(), 1.0);
  for (std::size_t i = 1; i < u.size(); ++i) uw[i] = u[i] * w[i];

  const TensorOperator once = scaledOperator(scaledOperator(adj, u), w);
  const std::vector<double> direct = scaledOperator(adj, uw).apply({0.0, 1.0, 2.0, 3.0, 4.0});
  const std::vector<double> composed = once.apply({0.0, 1.0, 2.0, 3.0, 4.0});
  for (std::size_t i = 1; i < direct.size(); ++i) {
    CHECK(composed[i] == doctest::Approx(direct[i]).epsilon(1e-12));
  }
}

TEST_CASE("scaling validates entries") {
  const Hypergraph g = buildHypergraph(3, 3, {{1, 2, 3}});
  const TensorOperator adj(g, OperatorKind::Adjacency);
  auto expectBadScale = [&](std::vector<double> u) {
    try {
      scaledOperator(adj, u);
      FAIL("expected NonPositiveScale");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NonPositiveScale);
    }
  };
  expectBadScale({0.0, 1.0, 0.0, 1.0});
  expectBadScale({0.0, 1.0, -2.0, 1.0});
  expectBadScale({0.0, 1.0, std::nan(""), 1.0});
  CHECK_THROWS_AS(scaledOperator(adj, std::vector<double>{0.0, 1.0}), Error);
}

TEST_CASE("disconnected input takes the dominant component") {
  // Hyperstar with 4 edges (rho = 4^(1/3)) next to one with 2 (rho = 2^(1/3)).
  std::vector<Edge> edges;
  for (int e = 0; e < 4; ++e) {
    edges.push_back({1, 2 + 2 * e, 3 + 2 * e});
  }
  for (int e = 0; e < 2; ++e) {
    edges.push_back({10, 11 + 2 * e, 12 + 2 * e});
  }
  const Hypergraph g = buildHypergraph(14, 3, edges);
  REQUIRE_FALSE(isConnected(g));

  const EigenEstimate est = spectralRadius(g);
  CHECK(est.converged);
  CHECK(est.lambda == doctest::Approx(std::pow(4.0, 1.0 / 3.0)).epsilon(1e-9));
  // Eigenvector is supported on the dominant component only.
  CHECK(est.vector[1] > 0.0);
  CHECK(est.vector[10] == 0.0);
  CHECK(est.vector[11] == 0.0);
  CHECK(est.lo <= std::pow(4.0, 1.0 / 3.0) + 1e-9);
  CHECK(est.hi >= std::pow(4.0, 1.0 / 3.0) - 1e-9);
}

TEST_CASE("edgeless input has spectral radius zero") {
  const Hypergraph g = buildHypergraph(5, 3, {});
  const EigenEstimate ra = spectralRadius(g);
  CHECK(ra.converged);
  CHECK(ra.lambda == 0.0);
  CHECK(ra.lo == 0.0);
  CHECK(ra.hi == 0.0);
  const EigenEstimate rq = signlessLaplacianRadius(g);
  CHECK(rq.lambda == 0.0);
  double norm = 0.0;
  for (VertexId v = 1; v <= 5; ++v) norm += std::pow(ra.vector[static_cast<std::size_t>(v)], 3);
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("brute-force oracle agrees with the certified iteration") {
  const Hypergraph g = fixture("G2");
  const OracleResult adjOracle = bruteForceOracle(g, OperatorKind::Adjacency);
  CHECK(adjOracle.value == doctest::Approx(kRhoG2).epsilon(1e-5));
  CHECK(rayleigh(g, adjOracle.argVector) == doctest::Approx(adjOracle.value).epsilon(1e-9));

  const OracleResult qOracle = bruteForceOracle(g, OperatorKind::SignlessLaplacian);
  CHECK(qOracle.value == doctest::Approx(kMuG2).epsilon(1e-5));
  // The oracle value never exceeds the certified upper bound.
  const EigenEstimate est = signlessLaplacianRadius(g);
  CHECK(qOracle.value <= est.hi + 1e-9);
}

TEST_CASE("oracle is deterministic for a fixed seed and bounded in size") {
  const Hypergraph g = fixture("G3");
  OracleOptions opts;
  opts.seed = 1234u;
  const OracleResult a = bruteForceOracle(g, OperatorKind::Adjacency, opts);
  const OracleResult b = bruteForceOracle(g, OperatorKind::Adjacency, opts);
  CHECK(a.value == b.value);
  CHECK(a.seed == 1234u);
  CHECK(a.argVector == b.argVector);

  try {
    bruteForceOracle(hyperstar(3, 6), OperatorKind::Adjacency);  // 13 vertices
    FAIL("expected InstanceTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InstanceTooLarge);
  }
}

}  // TEST_SUITE
