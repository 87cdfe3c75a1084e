#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// Star with d edges glued at vertex 1 (the heart); each edge adds k-1 fresh
// leaves, so the order is 1 + d*(k-1) and the spectral radius is d^(1/k).
// d = 0 yields the single isolated vertex. Requires k >= 2, d >= 0
// (Error(BadParams)).
Hypergraph hyperstar(int k, std::int64_t d);

// Appends one new vertex (id = order + 1) to every edge, turning a k-uniform
// hypergraph into a (k+1)-uniform one. Throws Error(NoEdges).
Hypergraph blowUp(const Hypergraph& base);

// Two stars joined by shared edges: vertex 1 (u) carries d1 private edges,
// vertex 2 (v) carries d2, and gamma bridge edges contain both u and v, each
// filled with k-2 fresh vertices. Final degrees: u has d1 + gamma, v has
// d2 + gamma, every other vertex 1. Order is
// (1 + d1*(k-1)) + (1 + d2*(k-1)) + gamma*(k-2); numbering is u, v, u's
// leaves edge by edge, v's leaves, bridge fillers. Requires k >= 2, d1 >= 1,
// d2 >= 0, gamma >= 1 (Error(BadParams)); for k = 2, gamma > 1 would repeat
// the edge {1, 2} and throws Error(DuplicateEdge).
Hypergraph gDeltaDeltaGamma(int k, std::int64_t d1, std::int64_t d2,
                            std::int64_t gamma);

// Same family addressed by the final center degrees Delta = d1 + gamma and
// delta = d2 + gamma that the extremal characterization uses. Requires
// Delta >= delta >= gamma >= 1 (Error(ParameterOrder)) and k >= 2
// (Error(BadParams)). Delta == gamma degenerates to d1 = 0: every edge is a
// bridge and the two centers form a sunflower core.
Hypergraph gFromFinalDegrees(int k, std::int64_t Delta, std::int64_t delta,
                             std::int64_t gamma);

// All (n choose k) edges; regular of degree (n-1 choose k-1). Requires
// 2 <= k <= n (Error(BadParams)) and refuses instances with more than 5e6
// edges (Error(InstanceTooLarge)).
Hypergraph completeUniform(VertexId n, int k);

// The named example hypergraphs used throughout the tests, embedded at build
// time from data/*.hg and parsed with the regular text reader. Recognized
// names (case-insensitive): H1, H2, G1, G2, G3. Unknown names throw
// Error(UnknownFixture).
Hypergraph fixture(std::string_view name);

// The embedded canonical file content for a fixture name.
std::string_view fixtureText(std::string_view name);

// All recognized fixture names in canonical order.
const std::vector<std::string_view>& fixtureNames();

}  // namespace hyperspec
