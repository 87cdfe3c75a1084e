#include "hyperspec/generators.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "hyperspec/fixtures_embed.hpp"
#include "hyperspec/io.hpp"

namespace hyperspec {

namespace {

void requireRank(int k) {
  if (k < 2) throw Error(Errc::BadParams, "rank must be >= 2, got " + std::to_string(k));
}

// Appends `count` blocks of `width` fresh vertices to `shared`, one edge per
// block, starting at id `next`.
void appendStarEdges(std::vector<Edge>& edges, const Edge& shared, std::int64_t count,
                     int width, VertexId& next) {
  for (std::int64_t i = 0; i < count; ++i) {
    Edge e = shared;
    for (int t = 0; t < width; ++t) e.push_back(next++);
    edges.push_back(std::move(e));
  }
}

}  // namespace

Hypergraph hyperstar(int k, std::int64_t d) {
  requireRank(k);
  if (d < 0) throw Error(Errc::BadParams, "edge count must be >= 0, got " + std::to_string(d));

  std::vector<Edge> edges;
  VertexId next = 2;
  appendStarEdges(edges, {1}, d, k - 1, next);
  const VertexId n = static_cast<VertexId>(1 + d * (k - 1));
  return buildHypergraph(std::max(n, 1), k, std::move(edges));
}

Hypergraph blowUp(const Hypergraph& base) {
  if (base.edgeCount() == 0) throw Error(Errc::NoEdges, "blow-up needs at least one edge");
  const VertexId apex = base.order() + 1;
  std::vector<Edge> edges;
  edges.reserve(base.edgeCount());
  for (const Edge& e : base.edges()) {
    Edge lifted = e;
    lifted.push_back(apex);
    edges.push_back(std::move(lifted));
  }
  return buildHypergraph(apex, base.rank() + 1, std::move(edges));
}

Hypergraph gDeltaDeltaGamma(int k, std::int64_t d1, std::int64_t d2, std::int64_t gamma) {
  requireRank(k);
  if (d1 < 1 || d2 < 0 || gamma < 1) {
    throw Error(Errc::BadParams, "need d1 >= 1, d2 >= 0, gamma >= 1");
  }
  if (k == 2 && gamma > 1) {
    throw Error(Errc::DuplicateEdge, "k = 2 bridge edges are all {1, 2}");
  }

  std::vector<Edge> edges;
  VertexId next = 3;
  appendStarEdges(edges, {1}, d1, k - 1, next);
  appendStarEdges(edges, {2}, d2, k - 1, next);
  appendStarEdges(edges, {1, 2}, gamma, k - 2, next);
  return buildHypergraph(next - 1, k, std::move(edges));
}

Hypergraph gFromFinalDegrees(int k, std::int64_t Delta, std::int64_t delta,
                             std::int64_t gamma) {
  requireRank(k);
  if (!(1 <= gamma && gamma <= delta && delta <= Delta)) {
    throw Error(Errc::ParameterOrder,
                "need 1 <= gamma <= delta <= Delta, got gamma=" + std::to_string(gamma) +
                    " delta=" + std::to_string(delta) + " Delta=" + std::to_string(Delta));
  }
  if (Delta > gamma) return gDeltaDeltaGamma(k, Delta - gamma, delta - gamma, gamma);

  // Delta == gamma forces delta == gamma: every edge contains both centers.
  if (k == 2 && gamma > 1) {
    throw Error(Errc::DuplicateEdge, "k = 2 bridge edges are all {1, 2}");
  }
  std::vector<Edge> edges;
  VertexId next = 3;
  appendStarEdges(edges, {1, 2}, gamma, k - 2, next);
  return buildHypergraph(next - 1, k, std::move(edges));
}

Hypergraph completeUniform(VertexId n, int k) {
  requireRank(k);
  if (n < k) {
    throw Error(Errc::BadParams,
                "need n >= k, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }

  double approx = 1.0;
  for (int i = 0; i < k; ++i) approx *= static_cast<double>(n - i) / (i + 1);
  if (approx > 5e6) {
    throw Error(Errc::InstanceTooLarge, "complete hypergraph would have too many edges");
  }

  std::vector<Edge> edges;
  Edge cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    edges.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == n - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
    for (int t = pos + 1; t < k; ++t) {
      cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  return buildHypergraph(n, k, std::move(edges));
}

namespace {

std::string canonicalName(std::string_view name) {
  std::string up;
  up.reserve(name.size());
  for (char c : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  return up;
}

struct FixtureRow {
  std::string_view name;
  std::string_view text;
};

const FixtureRow kFixtures[] = {
    {"H1", embedded::kFixtureH1}, {"H2", embedded::kFixtureH2},
    {"G1", embedded::kFixtureG1}, {"G2", embedded::kFixtureG2},
    {"G3", embedded::kFixtureG3},
};

}  // namespace

std::string_view fixtureText(std::string_view name) {
  const std::string up = canonicalName(name);
  for (const FixtureRow& row : kFixtures) {
    if (row.name == up) return row.text;
  }
  throw Error(Errc::UnknownFixture, "no fixture named '" + std::string(name) + "'");
}

Hypergraph fixture(std::string_view name) {
  return parseHypergraph(fixtureText(name));
}

const std::vector<std::string_view>& fixtureNames() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const FixtureRow& row : kFixtures) out.push_back(row.name);
    return out;
  }();
  return names;
}

}  // namespace hyperspec
