#include "hyperspec/tensor_ops.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <sstream>
#include <string>

namespace hyperspec {

namespace {

// Entries this small make the division form of the edge product unreliable;
// the kernel switches to explicit leave-one-out products.
constexpr double kTinyEntry = 1e-300;

double ipow(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

double kNorm(const std::vector<double>& x, int k) {
  double sum = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) sum += ipow(std::fabs(x[i]), k);
  return std::pow(sum, 1.0 / k);
}

void kNormalize(std::vector<double>& x, int k) {
  const double norm = kNorm(x, k);
  for (std::size_t i = 1; i < x.size(); ++i) x[i] /= norm;
}

void checkSize(const std::vector<double>& x, VertexId n, const char* what) {
  if (x.size() != static_cast<std::size_t>(n) + 1) {
    throw Error(Errc::DimensionMismatch,
                std::string(what) + " expects size n+1 = " + std::to_string(n + 1) +
                    ", got " + std::to_string(x.size()));
  }
}

std::vector<double> uniformUnit(VertexId n, int k) {
  std::vector<double> x(static_cast<std::size_t>(n) + 1, 0.0);
  const double v = std::pow(static_cast<double>(n), -1.0 / k);
  for (VertexId i = 1; i <= n; ++i) x[static_cast<std::size_t>(i)] = v;
  return x;
}

}  // namespace

const char* operatorName(OperatorKind kind) {
  return kind == OperatorKind::Adjacency ? "adjacency" : "qlap";
}

TensorOperator::TensorOperator(const Hypergraph& g, OperatorKind kind)
    : g_(&g), kind_(kind) {}

std::vector<double> TensorOperator::apply(const std::vector<double>& x) const {
  const VertexId n = g_->order();
  const int k = g_->rank();
  checkSize(x, n, "apply");

  const std::vector<double>* in = &x;
  std::vector<double> z;
  if (isScaled()) {
    z.resize(x.size());
    for (VertexId v = 1; v <= n; ++v) {
      z[static_cast<std::size_t>(v)] =
          scale_[static_cast<std::size_t>(v)] * x[static_cast<std::size_t>(v)];
    }
    in = &z;
  }

  std::vector<double> y(x.size(), 0.0);
  for (const Edge& e : g_->edges()) {
    double prod = 1.0;
    double smallest = std::numeric_limits<double>::infinity();
    for (VertexId v : e) {
      const double xv = (*in)[static_cast<std::size_t>(v)];
      prod *= xv;
      smallest = std::min(smallest, std::fabs(xv));
    }
    if (smallest < kTinyEntry) {
      for (VertexId v : e) {
        double part = 1.0;
        for (VertexId w : e) {
          if (w != v) part *= (*in)[static_cast<std::size_t>(w)];
        }
        y[static_cast<std::size_t>(v)] += part;
      }
    } else {
      for (VertexId v : e) {
        y[static_cast<std::size_t>(v)] += prod / (*in)[static_cast<std::size_t>(v)];
      }
    }
  }

  if (kind_ == OperatorKind::SignlessLaplacian) {
    for (VertexId v = 1; v <= n; ++v) {
      y[static_cast<std::size_t>(v)] +=
          static_cast<double>(g_->degree(v)) * ipow((*in)[static_cast<std::size_t>(v)], k - 1);
    }
  }

  if (isScaled()) {
    for (VertexId v = 1; v <= n; ++v) {
      y[static_cast<std::size_t>(v)] /= ipow(scale_[static_cast<std::size_t>(v)], k - 1);
    }
  }
  return y;
}

TensorOperator scaledOperator(const TensorOperator& base, const std::vector<double>& u) {
  const VertexId n = base.hypergraph().order();
  checkSize(u, n, "scaledOperator");
  for (VertexId v = 1; v <= n; ++v) {
    const double uv = u[static_cast<std::size_t>(v)];
    if (!(uv > 0.0) || !std::isfinite(uv)) {
      throw Error(Errc::NonPositiveScale,
                  "scale entry " + std::to_string(v) + " is not a positive finite number");
    }
  }
  TensorOperator out(base.hypergraph(), base.kind());
  out.scale_ = u;
  if (base.isScaled()) {
    for (VertexId v = 1; v <= n; ++v) {
      out.scale_[static_cast<std::size_t>(v)] *= base.scale_[static_cast<std::size_t>(v)];
    }
  }
  return out;
}

double rayleigh(const Hypergraph& g, const std::vector<double>& x) {
  const int k = g.rank();
  checkSize(x, g.order(), "rayleigh");
  const double norm = kNorm(x, k);
  if (std::fabs(norm - 1.0) > 1e-9) {
    throw Error(Errc::NotUnitVector, "k-norm is " + std::to_string(norm));
  }
  double sum = 0.0;
  for (const Edge& e : g.edges()) {
    double prod = 1.0;
    for (VertexId v : e) prod *= x[static_cast<std::size_t>(v)];
    sum += prod;
  }
  return k * sum;
}

NotConvergedError::NotConvergedError(EigenEstimate partial)
    : Error(Errc::NotConverged,
            "interval [" + std::to_string(partial.lo) + ", " + std::to_string(partial.hi) +
                "] after " + std::to_string(partial.iterations) + " iterations"),
      estimate_(std::move(partial)) {}

EigenEstimate powerIteration(const TensorOperator& op, const PowerOptions& opts) {
  const Hypergraph& g = op.hypergraph();
  const VertexId n = g.order();
  const int k = g.rank();

  if (!(opts.shift >= 0.0) || !std::isfinite(opts.shift)) {
    throw Error(Errc::BadParams, "shift must be finite and >= 0");
  }
  if (op.kind() == OperatorKind::Adjacency && opts.shift == 0.0) {
    throw Error(Errc::BadParams,
                "shift must be > 0 for the adjacency operator (zero diagonal)");
  }
  if (!(opts.tol > 0.0) || opts.maxIter == 0) {
    throw Error(Errc::BadParams, "tol must be > 0 and maxIter >= 1");
  }

  EigenEstimate est;
  est.shiftUsed = opts.shift;
  est.vector = uniformUnit(n, k);

  std::vector<double>& x = est.vector;
  for (std::size_t it = 1; it <= opts.maxIter; ++it) {
    std::vector<double> y = op.apply(x);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (VertexId v = 1; v <= n; ++v) {
      const double xv = x[static_cast<std::size_t>(v)];
      double& yv = y[static_cast<std::size_t>(v)];
      yv += opts.shift * ipow(xv, k - 1);
      if (!(yv > 0.0) || !std::isfinite(yv)) {
        throw Error(Errc::NonPositiveIterate,
                    "iterate entry " + std::to_string(v) + " degenerated at iteration " +
                        std::to_string(it));
      }
      const double ratio = yv / ipow(xv, k - 1);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    lo -= opts.shift;
    hi -= opts.shift;

    est.lo = lo;
    est.hi = hi;
    est.lambda = 0.5 * (lo + hi);
    est.iterations = it;
    if (opts.recordTrace) est.trace.emplace_back(lo, hi);

    if (hi - lo <= opts.tol * std::max(hi, 1.0)) {
      est.converged = true;
      return est;
    }

    if (k == 2) {
      x = std::move(y);
    } else {
      for (VertexId v = 1; v <= n; ++v) {
        x[static_cast<std::size_t>(v)] =
            std::pow(y[static_cast<std::size_t>(v)], 1.0 / (k - 1));
      }
    }
    kNormalize(x, k);
  }

  throw NotConvergedError(std::move(est));
}

namespace {

EigenEstimate solveByComponents(const Hypergraph& g, OperatorKind kind,
                                const PowerOptions& opts) {
  const VertexId n = g.order();
  const int k = g.rank();

  EigenEstimate global;
  global.shiftUsed = opts.shift;
  global.converged = true;
  global.vector = uniformUnit(n, k);
  if (g.edgeCount() == 0) return global;

  const ComponentDecomposition comps = connectedComponents(g);
  std::vector<std::vector<std::size_t>> edgesOf(comps.components.size());
  for (std::size_t ei = 0; ei < g.edgeCount(); ++ei) {
    const VertexId head = g.edges()[ei].front();
    edgesOf[static_cast<std::size_t>(comps.componentOf[static_cast<std::size_t>(head)])]
        .push_back(ei);
  }

  bool first = true;
  for (std::size_t c = 0; c < edgesOf.size(); ++c) {
    if (edgesOf[c].empty()) continue;
    InducedSubhypergraph sub = inducedSubhypergraph(g, edgesOf[c]);
    TensorOperator op(sub.graph, kind);

    auto embed = [&](EigenEstimate& local) {
      std::vector<double> lifted(static_cast<std::size_t>(n) + 1, 0.0);
      for (VertexId w = 1; w <= sub.graph.order(); ++w) {
        lifted[static_cast<std::size_t>(sub.vertexMap[static_cast<std::size_t>(w)])] =
            local.vector[static_cast<std::size_t>(w)];
      }
      local.vector = std::move(lifted);
    };

    EigenEstimate local;
    try {
      local = powerIteration(op, opts);
    } catch (NotConvergedError& e) {
      EigenEstimate partial = e.estimate();
      embed(partial);
      partial.iterations += global.iterations;
      throw NotConvergedError(std::move(partial));
    }

    global.iterations += local.iterations;
    if (first || local.lambda > global.lambda) {
      embed(local);
      global.vector = std::move(local.vector);
      global.lambda = local.lambda;
      global.trace = std::move(local.trace);
    }
    // The global radius is the max over components, so each endpoint is the
    // max of the component endpoints.
    global.lo = first ? local.lo : std::max(global.lo, local.lo);
    global.hi = first ? local.hi : std::max(global.hi, local.hi);
    first = false;
  }

  global.lambda = 0.5 * (global.lo + global.hi);
  return global;
}

std::uint64_t defaultOracleSeed() {
  if (const char* env = std::getenv("HYPERSPEC_SEED")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return parsed;
  }
  return 0x9e3779b97f4a7c15ULL;
}

}  // namespace

EigenEstimate spectralRadius(const Hypergraph& g, const PowerOptions& opts) {
  return solveByComponents(g, OperatorKind::Adjacency, opts);
}

EigenEstimate signlessLaplacianRadius(const Hypergraph& g, const PowerOptions& opts) {
  return solveByComponents(g, OperatorKind::SignlessLaplacian, opts);
}

OracleResult bruteForceOracle(const Hypergraph& g, OperatorKind kind,
                              const OracleOptions& opts) {
  const VertexId n = g.order();
  const int k = g.rank();
  if (n > 12) {
    throw Error(Errc::InstanceTooLarge,
                "oracle is limited to 12 vertices, got " + std::to_string(n));
  }

  TensorOperator op(g, kind);
  OracleResult out;
  out.seed = opts.seed ? *opts.seed : defaultOracleSeed();
  out.argVector = uniformUnit(n, k);
  out.value = -1.0;

  std::mt19937_64 rng(out.seed);
  std::uniform_real_distribution<double> entry(0.05, 1.0);

  for (int r = 0; r <= std::max(opts.restarts, 0); ++r) {
    std::vector<double> x;
    if (r == 0) {
      x = uniformUnit(n, k);
    } else {
      x.assign(static_cast<std::size_t>(n) + 1, 0.0);
      for (VertexId v = 1; v <= n; ++v) x[static_cast<std::size_t>(v)] = entry(rng);
      kNormalize(x, k);
    }

    for (int s = 0; s < std::max(opts.steps, 1); ++s) {
      std::vector<double> w = op.apply(x);
      double val = 0.0;
      for (VertexId v = 1; v <= n; ++v) {
        val += x[static_cast<std::size_t>(v)] * w[static_cast<std::size_t>(v)];
      }
      if (val > out.value) {
        out.value = val;
        out.argVector = x;
      }

      // Shifted multiplicative ascent; the shift keeps the iterate positive
      // so alternating sign patterns (k = 2 bipartite) cannot stall it.
      double total = 0.0;
      for (VertexId v = 1; v <= n; ++v) {
        double& wv = w[static_cast<std::size_t>(v)];
        wv += ipow(x[static_cast<std::size_t>(v)], k - 1);
        total += wv;
      }
      if (!(total > 0.0) || !std::isfinite(total)) break;
      if (k > 2) {
        for (VertexId v = 1; v <= n; ++v) {
          w[static_cast<std::size_t>(v)] = std::pow(w[static_cast<std::size_t>(v)], 1.0 / (k - 1));
        }
      }
      kNormalize(w, k);
      x = std::move(w);
    }
  }

  if (out.value < 0.0) out.value = 0.0;
  return out;
}

}  // namespace hyperspec
