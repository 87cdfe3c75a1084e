#include "hyperspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace hyperspec {

namespace {

double ipow(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// a^(1/k) * b^(1-1/k), evaluated as (a/b)^(1/k) * b so a == b returns the
// common value exactly (several worked values are rational and tests compare
// them exactly).
double geomSplit(double a, double b, int k) {
  return std::pow(a / b, 1.0 / k) * b;
}

struct Ranked {
  // Values in rank order (0-based rank; rank 1 of the formulas is index 0).
  std::vector<double> m;
  std::vector<double> d;
};

Ranked rankWithFirst(const DegreeProfile& p, VertexId first) {
  Ranked r;
  r.m.reserve(p.sortedByM.size());
  r.d.reserve(p.sortedByM.size());
  const auto& m = *p.avg2;
  r.m.push_back(m[static_cast<std::size_t>(first)]);
  r.d.push_back(static_cast<double>(p.degrees[static_cast<std::size_t>(first)]));
  for (VertexId v : p.sortedByM) {
    if (v == first) continue;
    r.m.push_back(m[static_cast<std::size_t>(v)]);
    r.d.push_back(static_cast<double>(p.degrees[static_cast<std::size_t>(v)]));
  }
  return r;
}

Ranked rankWithLast(const DegreeProfile& p, VertexId last) {
  Ranked r;
  r.m.reserve(p.sortedByM.size());
  r.d.reserve(p.sortedByM.size());
  const auto& m = *p.avg2;
  for (VertexId v : p.sortedByM) {
    if (v == last) continue;
    r.m.push_back(m[static_cast<std::size_t>(v)]);
    r.d.push_back(static_cast<double>(p.degrees[static_cast<std::size_t>(v)]));
  }
  r.m.push_back(m[static_cast<std::size_t>(last)]);
  r.d.push_back(static_cast<double>(p.degrees[static_cast<std::size_t>(last)]));
  return r;
}

DegreeProfile profileWithAvg2(const Hypergraph& g) {
  DegreeProfile p = degreeProfile(g);
  if (!p.avg2) {
    throw Error(Errc::IsolatedVertexPresent, "average 2-degrees undefined");
  }
  return p;
}

void requireEdges(const Hypergraph& g) {
  if (g.edgeCount() == 0) throw Error(Errc::NoEdges, "hypergraph has no edges");
}

double fStar(double Delta, double delta, double gamma, int k) {
  const double a = Delta + delta - 2.0 * gamma + gamma * gamma;
  const double disc = (Delta - delta) * (Delta - delta) + ipow(gamma, 4) +
                      2.0 * (Delta + delta - 2.0 * gamma) * gamma * gamma;
  return std::pow(0.5 * (a + std::sqrt(disc)), 1.0 / k);
}

// True when g is exactly the two-center star described by the witness:
// every edge meets {u, v}, gamma of them contain both, and every other
// vertex has degree 1.
bool matchesTwoCenter(const Hypergraph& g, VertexId u, VertexId v, std::int64_t gamma) {
  std::int64_t both = 0;
  for (const Edge& e : g.edges()) {
    const bool hasU = std::binary_search(e.begin(), e.end(), u);
    const bool hasV = std::binary_search(e.begin(), e.end(), v);
    if (hasU && hasV) {
      ++both;
    } else if (!hasU && !hasV) {
      return false;
    }
  }
  if (both != gamma) return false;
  for (VertexId w = 1; w <= g.order(); ++w) {
    if (w == u || w == v) continue;
    if (g.degree(w) != 1) return false;
  }
  return true;
}

std::int64_t sharedEdgeCount(const Hypergraph& g, VertexId u, VertexId v) {
  std::int64_t count = 0;
  for (std::size_t ei : g.incidentEdges(u)) {
    const Edge& e = g.edges()[ei];
    if (std::binary_search(e.begin(), e.end(), v)) ++count;
  }
  return count;
}

double maxDegreeSumImpl(const Hypergraph& g, const DegreeProfile& p) {
  double best = 0.0;
  for (const Edge& e : g.edges()) {
    std::int64_t top = 0, second = 0;
    for (VertexId v : e) {
      const std::int64_t d = p.degrees[static_cast<std::size_t>(v)];
      if (d >= top) {
        second = top;
        top = d;
      } else {
        second = std::max(second, d);
      }
    }
    best = std::max(best, static_cast<double>(top + second));
  }
  return best;
}

double maxPairFormulaImpl(const Hypergraph& g, const DegreeProfile& p) {
  const auto& m = *p.avg2;
  double best = 0.0;
  for (const Edge& e : g.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        const double du = static_cast<double>(p.degrees[static_cast<std::size_t>(e[i])]);
        const double dv = static_cast<double>(p.degrees[static_cast<std::size_t>(e[j])]);
        const double mu = m[static_cast<std::size_t>(e[i])];
        const double mv = m[static_cast<std::size_t>(e[j])];
        const double val = 0.5 * (du + dv + std::sqrt((du - dv) * (du - dv) + 4.0 * mu * mv));
        best = std::max(best, val);
      }
    }
  }
  return best;
}

}  // namespace

const char* boundTargetName(BoundTarget t) {
  return t == BoundTarget::Rho ? "rho" : "mu";
}

const char* boundKindName(BoundKind k) {
  return k == BoundKind::Upper ? "upper" : "lower";
}

const char* indexConventionName(IndexConvention c) {
  return c == IndexConvention::Printed ? "printed" : "excludeScaled";
}

DegreeBounds degreeBounds(const Hypergraph& g) {
  std::int64_t maxD = 0, minD = std::numeric_limits<std::int64_t>::max();
  for (VertexId v = 1; v <= g.order(); ++v) {
    const std::int64_t d = g.degree(v);
    maxD = std::max(maxD, d);
    minD = std::min(minD, d);
  }
  return {static_cast<double>(maxD), static_cast<double>(2 * maxD),
          static_cast<double>(minD), static_cast<double>(2 * minD)};
}

IntervalBound avg2Bounds(const Hypergraph& g) {
  const DegreeProfile p = profileWithAvg2(g);
  const auto& m = *p.avg2;
  IntervalBound b{m[1], m[1]};
  for (VertexId v = 2; v <= g.order(); ++v) {
    b.lo = std::min(b.lo, m[static_cast<std::size_t>(v)]);
    b.hi = std::max(b.hi, m[static_cast<std::size_t>(v)]);
  }
  return b;
}

double rhoUpperM(const Hypergraph& g) {
  const DegreeProfile p = profileWithAvg2(g);
  const auto& m = *p.avg2;
  const double m1 = m[static_cast<std::size_t>(p.sortedByM[0])];
  const double m2 = m[static_cast<std::size_t>(p.sortedByM[1])];
  return geomSplit(m1, m2, g.rank());
}

double rhoUpperD(const Hypergraph& g) {
  requireEdges(g);
  const DegreeProfile p = degreeProfile(g);
  const double d1 = static_cast<double>(p.degrees[static_cast<std::size_t>(p.sortedByD[0])]);
  const double d2 = static_cast<double>(p.degrees[static_cast<std::size_t>(p.sortedByD[1])]);
  return geomSplit(d1, d2, g.rank());
}

double rhoLowerM(const Hypergraph& g) {
  const DegreeProfile p = profileWithAvg2(g);
  const auto& m = *p.avg2;
  const std::size_t n = p.sortedByM.size();
  const double mn = m[static_cast<std::size_t>(p.sortedByM[n - 1])];
  const double mn1 = m[static_cast<std::size_t>(p.sortedByM[n - 2])];
  return geomSplit(mn, mn1, g.rank());
}

StarBoundWitness rhoLowerStar(const Hypergraph& g) {
  requireEdges(g);
  const DegreeProfile p = degreeProfile(g);
  const std::int64_t Delta = p.degrees[static_cast<std::size_t>(p.sortedByD[0])];

  StarBoundWitness best;
  best.value = -1.0;
  for (VertexId u = 1; u <= g.order(); ++u) {
    if (p.degrees[static_cast<std::size_t>(u)] != Delta) continue;

    std::vector<char> isNeighbor(static_cast<std::size_t>(g.order()) + 1, 0);
    std::int64_t dvMax = 0;
    for (std::size_t ei : g.incidentEdges(u)) {
      for (VertexId w : g.edges()[ei]) {
        if (w == u) continue;
        isNeighbor[static_cast<std::size_t>(w)] = 1;
        dvMax = std::max(dvMax, p.degrees[static_cast<std::size_t>(w)]);
      }
    }

    for (VertexId v = 1; v <= g.order(); ++v) {
      if (!isNeighbor[static_cast<std::size_t>(v)]) continue;
      if (p.degrees[static_cast<std::size_t>(v)] != dvMax) continue;
      const std::int64_t gamma = sharedEdgeCount(g, u, v);
      const double value = fStar(static_cast<double>(Delta), static_cast<double>(dvMax),
                                 static_cast<double>(gamma), g.rank());
      if (value > best.value) {
        best = {u, v, Delta, dvMax, gamma, value, false};
      }
    }
  }

  best.sharp = matchesTwoCenter(g, best.u, best.v, best.gamma);
  return best;
}

double StarPolynomial::evaluate(double rho, int k) const {
  const double s = std::pow(rho, k);
  const double lin = linear[0] + linear[1] * s;
  const double quad = quadratic[0] + quadratic[1] * s + quadratic[2] * s * s;
  return lin * quad;
}

double StarPolynomial::largestRoot() const {
  const double linRoot = -linear[0] / linear[1];
  const double b = quadratic[1], c = quadratic[0];
  const double disc = b * b - 4.0 * c;
  const double quadRoot = 0.5 * (-b + std::sqrt(std::max(disc, 0.0)));
  return std::max(linRoot, quadRoot);
}

StarPolynomial starPolynomial(std::int64_t Delta, std::int64_t delta,
                              std::int64_t gamma, int k) {
  if (!(1 <= gamma && gamma <= delta && delta <= Delta)) {
    throw Error(Errc::ParameterOrder,
                "need 1 <= gamma <= delta <= Delta, got gamma=" + std::to_string(gamma) +
                    " delta=" + std::to_string(delta) + " Delta=" + std::to_string(Delta));
  }
  if (k < 2) throw Error(Errc::RankTooSmall, "rank must be >= 2");

  const double a = static_cast<double>(Delta - gamma);
  const double b = static_cast<double>(delta - gamma);
  const double g2 = static_cast<double>(gamma) * static_cast<double>(gamma);

  StarPolynomial f;
  f.linear = {-a, 1.0};
  f.quadratic = {a * b, -(a + b + g2), 1.0};
  return f;
}

MoBound muUpperMo(const Hypergraph& g) {
  requireEdges(g);
  const DegreeProfile p = degreeProfile(g);
  const int k = g.rank();
  const double d1 = static_cast<double>(p.degrees[static_cast<std::size_t>(p.sortedByD[0])]);
  const double d2 = static_cast<double>(p.degrees[static_cast<std::size_t>(p.sortedByD[1])]);

  MoBound out;
  if (d1 == d2) {
    out.dStar = 1.0;
    out.bound = 2.0 * d1;
  } else if (k == 2) {
    // h(t) = (d2 t - d1)(t + 1): the positive root is exactly d1/d2 and the
    // bound collapses to d1 + d2.
    out.dStar = d1 / d2;
    out.bound = d1 + d2;
  } else {
    const double hi = d1 / d2;
    const double lo = std::pow(hi, 1.0 / k);
    auto h = [&](double t) { return d2 * ipow(t, k) + (d2 - d1) * ipow(t, k - 1) - d1; };
    double a = lo, b = hi;
    double mid = 0.5 * (a + b);
    for (int it = 0; it < 200; ++it) {
      mid = 0.5 * (a + b);
      const double hm = h(mid);
      if (std::fabs(hm) <= 1e-12 * d1 || b - a <= 1e-14) break;
      // h is increasing through the bracket: negative at lo, positive at hi.
      if (hm < 0.0) {
        a = mid;
      } else {
        b = mid;
      }
    }
    out.dStar = mid;
    out.bound = d1 + d1 / ipow(mid, k - 1);
  }

  out.sharp = isConnected(g) && (isRegular(g).regular || isBlowupOfRegular(g).blowup);
  return out;
}

double muUpperMoWeaker(const Hypergraph& g) {
  requireEdges(g);
  const DegreeProfile p = degreeProfile(g);
  const double d1 = static_cast<double>(p.degrees[static_cast<std::size_t>(p.sortedByD[0])]);
  const double d2 = static_cast<double>(p.degrees[static_cast<std::size_t>(p.sortedByD[1])]);
  return d1 + geomSplit(d1, d2, g.rank());
}

double muUpperMPlusDelta(const Hypergraph& g) {
  const double m = rhoUpperM(g);
  return m + degreeBounds(g).rhoUpper;
}

ThetaBound muUpperTheta(const Hypergraph& g, IndexConvention convention) {
  // Both conventions coincide here: the proof scales the rank-1 vertex, so
  // excluding it is the printed range 2..n.
  (void)convention;

  const DegreeProfile p = profileWithAvg2(g);
  const auto& m = *p.avg2;
  const int k = g.rank();
  const std::size_t n = p.sortedByM.size();
  const double mMax = m[static_cast<std::size_t>(p.sortedByM[0])];

  ThetaBound best;
  best.bound = std::numeric_limits<double>::infinity();
  for (VertexId c : p.sortedByM) {
    if (m[static_cast<std::size_t>(c)] != mMax) break;
    const Ranked r = rankWithFirst(p, c);

    double candBound = std::numeric_limits<double>::infinity();
    int candRank = 0;
    std::vector<double> table(n + 1, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double t = std::pow(r.m[0] / r.m[j], 1.0 / k);
      const double outer = t * r.m[j] + r.d[0];
      double theta = -std::numeric_limits<double>::infinity();
      for (std::size_t i = 1; i < n; ++i) {
        theta = std::max(theta, t * r.m[i] + r.d[i]);
      }
      table[j + 1] = theta;
      const double val = std::max(outer, theta);
      if (val < candBound) {
        candBound = val;
        candRank = static_cast<int>(j) + 1;
      }
    }

    if (candBound < best.bound) {
      best.bound = candBound;
      best.argminRank = candRank;
      best.thetaTable = std::move(table);
    }
  }
  return best;
}

GammaBound muLowerGamma(const Hypergraph& g, IndexConvention convention) {
  const DegreeProfile p = profileWithAvg2(g);
  const auto& m = *p.avg2;
  const int k = g.rank();
  const std::size_t n = p.sortedByM.size();
  const double mMin = m[static_cast<std::size_t>(p.sortedByM[n - 1])];

  GammaBound best;
  best.bound = -std::numeric_limits<double>::infinity();
  for (auto it = p.sortedByM.rbegin(); it != p.sortedByM.rend(); ++it) {
    const VertexId c = *it;
    if (m[static_cast<std::size_t>(c)] != mMin) break;
    const Ranked r = rankWithLast(p, c);

    const std::size_t iBegin = convention == IndexConvention::Printed ? 1 : 0;
    const std::size_t iEnd = convention == IndexConvention::Printed ? n : n - 1;

    double candBound = -std::numeric_limits<double>::infinity();
    int candRank = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const double y = std::pow(r.m[n - 1] / r.m[j], 1.0 / k);
      const double outer = y * r.m[j] + r.d[n - 1];
      double inner = std::numeric_limits<double>::infinity();
      for (std::size_t i = iBegin; i < iEnd; ++i) {
        inner = std::min(inner, y * r.m[i] + r.d[i]);
      }
      const double val = std::min(outer, inner);
      if (val > candBound) {
        candBound = val;
        candRank = static_cast<int>(j) + 1;
      }
    }

    if (candBound > best.bound) {
      best.bound = candBound;
      best.argmaxRank = candRank;
    }
  }
  return best;
}

EdgePairBounds yzlEdgeBounds(const Hypergraph& g) {
  requireEdges(g);
  const DegreeProfile p = profileWithAvg2(g);
  return {maxDegreeSumImpl(g, p), maxPairFormulaImpl(g, p)};
}

const BoundEntry* BoundReport::find(const std::string& boundId) const {
  for (const BoundEntry& e : entries) {
    if (e.boundId == boundId) return &e;
  }
  return nullptr;
}

BoundReport fullReport(const Hypergraph& g) {
  const DegreeProfile p = degreeProfile(g);
  const bool hasEdges = g.edgeCount() > 0;
  const bool hasAvg2 = p.avg2.has_value();
  const bool connected = isConnected(g);
  const bool regular = isRegular(g).regular;
  const bool equalM = hasAvg2 && hasEqualAvg2Degrees(g);

  BoundReport rep;
  auto add = [&](std::string id, BoundTarget target, BoundKind kind, bool applicable,
                 Errc reason, double value, bool sharp, std::string note) {
    BoundEntry e;
    e.boundId = std::move(id);
    e.target = target;
    e.kind = kind;
    if (applicable) {
      e.value = value;
      e.sharp = sharp;
    } else {
      e.inapplicableReason = errcName(reason);
    }
    e.note = std::move(note);
    rep.entries.push_back(std::move(e));
  };

  const DegreeBounds db = degreeBounds(g);
  const bool degSharp = connected && regular;
  add("rho_upper_delta", BoundTarget::Rho, BoundKind::Upper, true, Errc::NoEdges,
      db.rhoUpper, degSharp, "rho <= max degree");
  add("mu_upper_2delta", BoundTarget::Mu, BoundKind::Upper, true, Errc::NoEdges,
      db.muUpper, degSharp, "mu <= 2 * max degree");
  add("rho_lower_delta", BoundTarget::Rho, BoundKind::Lower, true, Errc::NoEdges,
      db.rhoLower, degSharp, "rho >= min degree");
  add("mu_lower_2delta", BoundTarget::Mu, BoundKind::Lower, true, Errc::NoEdges,
      db.muLower, degSharp, "mu >= 2 * min degree");

  const bool mSharp = connected && equalM;
  if (hasAvg2) {
    const IntervalBound iv = avg2Bounds(g);
    add("rho_upper_avg2_max", BoundTarget::Rho, BoundKind::Upper, true, Errc::NoEdges,
        iv.hi, mSharp, "rho <= max avg2");
    add("rho_lower_avg2_min", BoundTarget::Rho, BoundKind::Lower, true, Errc::NoEdges,
        iv.lo, mSharp, "rho >= min avg2");
    add("rho_upper_m", BoundTarget::Rho, BoundKind::Upper, true, Errc::NoEdges,
        rhoUpperM(g), mSharp, "rho <= m1^(1/k) * m2^(1-1/k)");
    add("rho_lower_m", BoundTarget::Rho, BoundKind::Lower, true, Errc::NoEdges,
        rhoLowerM(g), mSharp, "rho >= mn^(1/k) * m(n-1)^(1-1/k)");
  } else {
    add("rho_upper_avg2_max", BoundTarget::Rho, BoundKind::Upper, false,
        Errc::IsolatedVertexPresent, 0.0, false, "rho <= max avg2");
    add("rho_lower_avg2_min", BoundTarget::Rho, BoundKind::Lower, false,
        Errc::IsolatedVertexPresent, 0.0, false, "rho >= min avg2");
    add("rho_upper_m", BoundTarget::Rho, BoundKind::Upper, false,
        Errc::IsolatedVertexPresent, 0.0, false, "rho <= m1^(1/k) * m2^(1-1/k)");
    add("rho_lower_m", BoundTarget::Rho, BoundKind::Lower, false,
        Errc::IsolatedVertexPresent, 0.0, false, "rho >= mn^(1/k) * m(n-1)^(1-1/k)");
  }

  const bool blowup = isBlowupOfRegular(g).blowup;
  if (hasEdges) {
    add("rho_upper_d", BoundTarget::Rho, BoundKind::Upper, true, Errc::NoEdges,
        rhoUpperD(g), connected && (regular || blowup), "rho <= d1^(1/k) * d2^(1-1/k)");

    const StarBoundWitness star = rhoLowerStar(g);
    BoundEntry starEntry;
    starEntry.boundId = "rho_lower_star";
    starEntry.target = BoundTarget::Rho;
    starEntry.kind = BoundKind::Lower;
    starEntry.value = star.value;
    starEntry.sharp = star.sharp;
    starEntry.note = "rho >= largest root of the two-center characteristic polynomial";
    starEntry.witness = star;
    rep.entries.push_back(std::move(starEntry));

    const MoBound mo = muUpperMo(g);
    add("mu_upper_mo", BoundTarget::Mu, BoundKind::Upper, true, Errc::NoEdges,
        mo.bound, mo.sharp, "mu <= d1 + d1 * (1/dStar)^(k-1)");
    add("mu_upper_mo_weak", BoundTarget::Mu, BoundKind::Upper, true, Errc::NoEdges,
        muUpperMoWeaker(g), connected && regular, "mu <= d1 + d1^(1/k) * d2^(1-1/k)");
    add("mu_upper_pair_deg", BoundTarget::Mu, BoundKind::Upper, true, Errc::NoEdges,
        maxDegreeSumImpl(g, p), connected && regular,
        "mu <= max over edges of the top two degrees");
  } else {
    add("rho_upper_d", BoundTarget::Rho, BoundKind::Upper, false, Errc::NoEdges, 0.0,
        false, "rho <= d1^(1/k) * d2^(1-1/k)");
    add("rho_lower_star", BoundTarget::Rho, BoundKind::Lower, false, Errc::NoEdges, 0.0,
        false, "rho >= largest root of the two-center characteristic polynomial");
    add("mu_upper_mo", BoundTarget::Mu, BoundKind::Upper, false, Errc::NoEdges, 0.0,
        false, "mu <= d1 + d1 * (1/dStar)^(k-1)");
    add("mu_upper_mo_weak", BoundTarget::Mu, BoundKind::Upper, false, Errc::NoEdges, 0.0,
        false, "mu <= d1 + d1^(1/k) * d2^(1-1/k)");
    add("mu_upper_pair_deg", BoundTarget::Mu, BoundKind::Upper, false, Errc::NoEdges, 0.0,
        false, "mu <= max over edges of the top two degrees");
  }

  if (hasAvg2) {
    add("mu_upper_m_plus_delta", BoundTarget::Mu, BoundKind::Upper, true, Errc::NoEdges,
        muUpperMPlusDelta(g), connected && regular, "mu <= rho_upper_m + max degree");
    add("mu_upper_theta", BoundTarget::Mu, BoundKind::Upper, true, Errc::NoEdges,
        muUpperTheta(g).bound, false, "mu <= min over j of max(outer_j, theta_j)");
    add("mu_lower_gamma", BoundTarget::Mu, BoundKind::Lower, true, Errc::NoEdges,
        muLowerGamma(g).bound, false, "mu >= max over j of min(outer_j, gamma_j)");
  } else {
    add("mu_upper_m_plus_delta", BoundTarget::Mu, BoundKind::Upper, false,
        Errc::IsolatedVertexPresent, 0.0, false, "mu <= rho_upper_m + max degree");
    add("mu_upper_theta", BoundTarget::Mu, BoundKind::Upper, false,
        Errc::IsolatedVertexPresent, 0.0, false,
        "mu <= min over j of max(outer_j, theta_j)");
    add("mu_lower_gamma", BoundTarget::Mu, BoundKind::Lower, false,
        Errc::IsolatedVertexPresent, 0.0, false,
        "mu >= max over j of min(outer_j, gamma_j)");
  }

  if (hasEdges && hasAvg2) {
    add("mu_upper_pair_avg2", BoundTarget::Mu, BoundKind::Upper, true, Errc::NoEdges,
        maxPairFormulaImpl(g, p), connected && regular,
        "mu <= max in-edge pair of (du + dv + sqrt((du - dv)^2 + 4 mu mv)) / 2");
  } else {
    add("mu_upper_pair_avg2", BoundTarget::Mu, BoundKind::Upper, false,
        hasEdges ? Errc::IsolatedVertexPresent : Errc::NoEdges, 0.0, false,
        "mu <= max in-edge pair of (du + dv + sqrt((du - dv)^2 + 4 mu mv)) / 2");
  }

  return rep;
}

}  // namespace hyperspec
