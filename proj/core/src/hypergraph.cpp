#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <vector>

namespace hyperspec {

Hypergraph buildHypergraph(VertexId order, int rank, std::vector<Edge> edges) {
  if (order < 1) {
    throw Error(Errc::BadParams, "order must be >= 1, got " + std::to_string(order));
  }
  if (rank < 2) {
    throw Error(Errc::RankTooSmall, "rank must be >= 2, got " + std::to_string(rank));
  }
  if (rank > order && !edges.empty()) {
    throw Error(Errc::RankExceedsOrder,
                "rank " + std::to_string(rank) + " exceeds order " + std::to_string(order));
  }

  for (auto& e : edges) {
    if (static_cast<int>(e.size()) != rank) {
      throw Error(Errc::EdgeWrongSize,
                  "edge has " + std::to_string(e.size()) + " vertices, expected " +
                      std::to_string(rank));
    }
    for (VertexId v : e) {
      if (v < 1 || v > order) {
        throw Error(Errc::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " outside 1.." + std::to_string(order));
      }
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(Errc::DuplicateVertexInEdge, "edge repeats a vertex");
    }
  }

  std::sort(edges.begin(), edges.end());
  if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end()) {
    std::string verts;
    for (VertexId v : *it) verts += (verts.empty() ? "" : " ") + std::to_string(v);
    throw Error(Errc::DuplicateEdge, "edge {" + verts + "} appears twice");
  }

  Hypergraph g;
  g.order_ = order;
  g.rank_ = rank;
  g.edges_ = std::move(edges);
  g.incidence_.assign(static_cast<std::size_t>(order) + 1, {});
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    for (VertexId v : g.edges_[i]) g.incidence_[static_cast<std::size_t>(v)].push_back(i);
  }
  return g;
}

const std::vector<std::size_t>& Hypergraph::incidentEdges(VertexId v) const {
  if (v < 1 || v > order_) {
    throw Error(Errc::VertexOutOfRange,
                "vertex " + std::to_string(v) + " outside 1.." + std::to_string(order_));
  }
  return incidence_[static_cast<std::size_t>(v)];
}

std::int64_t Hypergraph::degree(VertexId v) const {
  return static_cast<std::int64_t>(incidentEdges(v).size());
}

DegreeProfile degreeProfile(const Hypergraph& g) {
  const VertexId n = g.order();
  const int k = g.rank();

  DegreeProfile p;
  p.degrees.assign(static_cast<std::size_t>(n) + 1, 0);
  bool isolated = false;
  for (VertexId v = 1; v <= n; ++v) {
    p.degrees[static_cast<std::size_t>(v)] = g.degree(v);
    isolated = isolated || p.degrees[static_cast<std::size_t>(v)] == 0;
  }

  if (!isolated) {
    std::vector<double> avg2(static_cast<std::size_t>(n) + 1, 0.0);
    for (VertexId v = 1; v <= n; ++v) {
      double rowSum = 0.0;
      for (std::size_t ei : g.incidentEdges(v)) {
        double prod = 1.0;
        for (VertexId w : g.edges()[ei]) {
          if (w != v) prod *= static_cast<double>(p.degrees[static_cast<std::size_t>(w)]);
        }
        rowSum += prod;
      }
      double dPow = 1.0;
      for (int t = 0; t < k - 1; ++t) dPow *= static_cast<double>(p.degrees[static_cast<std::size_t>(v)]);
      if (!std::isfinite(rowSum) || !std::isfinite(dPow)) {
        throw Error(Errc::Overflow, "degree products exceed the double range");
      }
      avg2[static_cast<std::size_t>(v)] = rowSum / dPow;
    }
    p.avg2 = std::move(avg2);
  }

  p.sortedByD.resize(static_cast<std::size_t>(n));
  for (VertexId v = 1; v <= n; ++v) p.sortedByD[static_cast<std::size_t>(v) - 1] = v;
  std::sort(p.sortedByD.begin(), p.sortedByD.end(), [&](VertexId a, VertexId b) {
    auto da = p.degrees[static_cast<std::size_t>(a)];
    auto db = p.degrees[static_cast<std::size_t>(b)];
    if (da != db) return da > db;
    return a < b;
  });

  if (p.avg2) {
    p.sortedByM = p.sortedByD;  // same id pool, reordered below
    const auto& m = *p.avg2;
    std::sort(p.sortedByM.begin(), p.sortedByM.end(), [&](VertexId a, VertexId b) {
      double ma = m[static_cast<std::size_t>(a)];
      double mb = m[static_cast<std::size_t>(b)];
      if (ma != mb) return ma > mb;
      auto da = p.degrees[static_cast<std::size_t>(a)];
      auto db = p.degrees[static_cast<std::size_t>(b)];
      if (da != db) return da > db;
      return a < b;
    });
  }

  return p;
}

ComponentDecomposition connectedComponents(const Hypergraph& g) {
  const VertexId n = g.order();
  ComponentDecomposition d;
  d.componentOf.assign(static_cast<std::size_t>(n) + 1, -1);

  std::vector<char> edgeSeen(g.edgeCount(), 0);
  for (VertexId s = 1; s <= n; ++s) {
    if (d.componentOf[static_cast<std::size_t>(s)] >= 0) continue;
    const int comp = static_cast<int>(d.components.size());
    std::vector<VertexId> members;
    std::vector<VertexId> stack{s};
    d.componentOf[static_cast<std::size_t>(s)] = comp;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (std::size_t ei : g.incidentEdges(v)) {
        if (edgeSeen[ei]) continue;
        edgeSeen[ei] = 1;
        for (VertexId w : g.edges()[ei]) {
          if (d.componentOf[static_cast<std::size_t>(w)] < 0) {
            d.componentOf[static_cast<std::size_t>(w)] = comp;
            stack.push_back(w);
          }
        }
      }
    }
    std::sort(members.begin(), members.end());
    if (members.size() == 1 && g.degree(members.front()) == 0) {
      d.isolatedVertices.push_back(members.front());
    }
    d.components.push_back(std::move(members));
  }
  return d;
}

bool isConnected(const Hypergraph& g) {
  return connectedComponents(g).components.size() == 1;
}

RegularityCheck isRegular(const Hypergraph& g) {
  RegularityCheck r;
  r.degree = g.degree(1);
  for (VertexId v = 2; v <= g.order(); ++v) {
    if (g.degree(v) != r.degree) return {false, 0};
  }
  r.regular = true;
  return r;
}

BlowupCheck isBlowupOfRegular(const Hypergraph& g) {
  if (g.edgeCount() == 0) return {};

  // Apex candidates: vertices lying in every edge.
  std::vector<VertexId> candidates(g.edges().front().begin(), g.edges().front().end());
  for (const Edge& e : g.edges()) {
    std::vector<VertexId> kept;
    std::set_intersection(candidates.begin(), candidates.end(), e.begin(), e.end(),
                          std::back_inserter(kept));
    candidates = std::move(kept);
    if (candidates.empty()) return {};
  }

  for (VertexId apex : candidates) {
    std::int64_t base = -1;
    bool ok = true;
    for (VertexId v = 1; v <= g.order() && ok; ++v) {
      if (v == apex) continue;
      std::int64_t d = g.degree(v);
      if (d == 0) continue;
      if (base < 0) base = d;
      ok = d == base;
    }
    if (ok && base > 0) return {true, apex, base};
  }
  return {};
}

bool hasEqualAvg2Degrees(const Hypergraph& g, double relTol) {
  DegreeProfile p = degreeProfile(g);
  if (!p.avg2) {
    throw Error(Errc::IsolatedVertexPresent, "average 2-degrees undefined");
  }
  const auto& m = *p.avg2;
  double lo = m[1], hi = m[1];
  for (VertexId v = 2; v <= g.order(); ++v) {
    lo = std::min(lo, m[static_cast<std::size_t>(v)]);
    hi = std::max(hi, m[static_cast<std::size_t>(v)]);
  }
  return hi - lo <= relTol * hi;
}

InducedSubhypergraph inducedSubhypergraph(const Hypergraph& g,
                                          const std::vector<std::size_t>& edgeIndices) {
  if (edgeIndices.empty()) {
    throw Error(Errc::EmptySelection, "no edges selected");
  }

  std::set<std::size_t> chosen;
  for (std::size_t ei : edgeIndices) {
    if (ei >= g.edgeCount()) {
      throw Error(Errc::BadParams, "edge index " + std::to_string(ei) + " out of range");
    }
    chosen.insert(ei);
  }

  std::set<VertexId> used;
  for (std::size_t ei : chosen) {
    for (VertexId v : g.edges()[ei]) used.insert(v);
  }

  std::vector<VertexId> vertexMap(used.size() + 1, 0);
  std::vector<VertexId> newId(static_cast<std::size_t>(g.order()) + 1, 0);
  VertexId next = 1;
  for (VertexId v : used) {
    vertexMap[static_cast<std::size_t>(next)] = v;
    newId[static_cast<std::size_t>(v)] = next++;
  }

  std::vector<Edge> edges;
  edges.reserve(chosen.size());
  for (std::size_t ei : chosen) {
    Edge e;
    e.reserve(g.edges()[ei].size());
    for (VertexId v : g.edges()[ei]) e.push_back(newId[static_cast<std::size_t>(v)]);
    edges.push_back(std::move(e));
  }

  return {buildHypergraph(static_cast<VertexId>(used.size()), g.rank(), std::move(edges)),
          std::move(vertexMap)};
}

}  // namespace hyperspec
