#include "hyperspec/report.hpp"

#include <cmath>
#include <utility>

namespace hyperspec {

nlohmann::json inputSection(const Hypergraph& g) {
  return {{"n", g.order()}, {"k", g.rank()}, {"edgeCount", g.edgeCount()}};
}

nlohmann::json profileSection(const Hypergraph& g) {
  const DegreeProfile p = degreeProfile(g);
  const ComponentDecomposition comps = connectedComponents(g);
  const RegularityCheck reg = isRegular(g);

  nlohmann::json degrees = nlohmann::json::array();
  for (VertexId v = 1; v <= g.order(); ++v) {
    degrees.push_back(p.degrees[static_cast<std::size_t>(v)]);
  }

  nlohmann::json avg2;
  nlohmann::json equalAvg2;
  if (p.avg2) {
    avg2 = nlohmann::json::array();
    for (VertexId v = 1; v <= g.order(); ++v) {
      avg2.push_back((*p.avg2)[static_cast<std::size_t>(v)]);
    }
    equalAvg2 = hasEqualAvg2Degrees(g);
  }

  return {{"degrees", std::move(degrees)},
          {"avg2", std::move(avg2)},
          {"connected", comps.components.size() == 1},
          {"componentCount", comps.components.size()},
          {"isolatedCount", comps.isolatedVertices.size()},
          {"regular", reg.regular},
          {"regularDegree", reg.regular ? nlohmann::json(reg.degree) : nlohmann::json()},
          {"blowupOfRegular", isBlowupOfRegular(g).blowup},
          {"equalAvg2", std::move(equalAvg2)}};
}

nlohmann::json eigenSection(const EigenEstimate& est, OperatorKind kind) {
  return {{operatorName(kind),
           {{"lambda", est.lambda},
            {"lo", est.lo},
            {"hi", est.hi},
            {"iterations", est.iterations},
            {"converged", est.converged},
            {"shift", est.shiftUsed}}}};
}

nlohmann::json boundsSection(const BoundReport& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const BoundEntry& e : report.entries) {
    nlohmann::json row = {{"boundId", e.boundId},
                          {"target", boundTargetName(e.target)},
                          {"kind", boundKindName(e.kind)},
                          {"sharp", e.sharp},
                          {"citation", e.note}};
    if (e.value) {
      row["value"] = *e.value;
    } else {
      row["inapplicable"] = e.inapplicableReason;
    }
    if (e.witness) {
      row["witness"] = {{"u", e.witness->u},
                        {"v", e.witness->v},
                        {"Delta", e.witness->Delta},
                        {"delta", e.witness->delta},
                        {"gamma", e.witness->gamma}};
    }
    out.push_back(std::move(row));
  }
  return out;
}

nlohmann::json reportDocument(const Hypergraph& g, const ReportSections& sections) {
  nlohmann::json doc = {{"schemaVersion", 1}, {"input", inputSection(g)}};
  if (sections.profile) doc["profile"] = profileSection(g);
  if (!sections.eigen.empty()) {
    nlohmann::json eigen = nlohmann::json::object();
    for (const auto& [kind, est] : sections.eigen) {
      eigen.merge_patch(eigenSection(est, kind));
    }
    doc["eigen"] = std::move(eigen);
  }
  if (sections.bounds) doc["bounds"] = boundsSection(fullReport(g));
  return doc;
}

VerifyResult verifyBounds(const Hypergraph& g, double tol, const PowerOptions& opts) {
  VerifyResult res;
  res.rho = spectralRadius(g, opts);
  res.mu = signlessLaplacianRadius(g, opts);

  const BoundReport rep = fullReport(g);
  for (const BoundEntry& e : rep.entries) {
    VerifyCheck check;
    check.boundId = e.boundId;
    check.sharp = e.sharp;
    if (!e.value) {
      check.status = VerifyCheck::Status::Skipped;
      check.detail = e.inapplicableReason;
      res.checks.push_back(std::move(check));
      continue;
    }

    check.value = *e.value;
    const EigenEstimate& target = e.target == BoundTarget::Rho ? res.rho : res.mu;
    double margin = 0.0;
    bool ok = false;
    if (e.kind == BoundKind::Upper) {
      margin = *e.value - target.hi;
      ok = *e.value >= target.hi - tol;
    } else {
      margin = target.lo - *e.value;
      ok = *e.value <= target.lo + tol;
    }
    check.status = ok ? VerifyCheck::Status::Ok : VerifyCheck::Status::Violation;
    check.detail = "margin " + std::to_string(margin);
    if (!ok) res.allOk = false;
    res.checks.push_back(std::move(check));
  }
  return res;
}

}  // namespace hyperspec
