#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperspec/bounds.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/tensor_ops.hpp"

namespace hyperspec {

// JSON report document, schema v1. Section builders return the bare section;
// reportDocument wraps the selected sections with {"schemaVersion": 1,
// "input": {...}}. Doubles round-trip bit-exactly through the serialization.
nlohmann::json inputSection(const Hypergraph& g);
nlohmann::json profileSection(const Hypergraph& g);
nlohmann::json eigenSection(const EigenEstimate& est, OperatorKind kind);
nlohmann::json boundsSection(const BoundReport& report);

struct ReportSections {
  bool profile = false;
  bool bounds = false;
  std::vector<std::pair<OperatorKind, EigenEstimate>> eigen;
};

nlohmann::json reportDocument(const Hypergraph& g, const ReportSections& sections);

// One bound check against the certified eigenvalue interval of its target.
struct VerifyCheck {
  enum class Status { Ok, Violation, Skipped };

  std::string boundId;
  Status status = Status::Skipped;
  bool sharp = false;
  std::optional<double> value;
  std::string detail;  // reason when skipped, margin text otherwise
};

struct VerifyResult {
  std::vector<VerifyCheck> checks;
  EigenEstimate rho;
  EigenEstimate mu;
  bool allOk = true;  // no Violation entries
};

// Evaluates every bound and asserts lower <= certified lo + tol and
// upper >= certified hi - tol against the matching operator's interval.
// Inapplicable bounds are reported as Skipped. NotConvergedError propagates.
VerifyResult verifyBounds(const Hypergraph& g, double tol = 1e-6,
                          const PowerOptions& opts = {});

}  // namespace hyperspec
