// Command line front end: ingest hypergraph files, print profiles, certified
// eigenvalue estimates, bound reports, generate example families, and verify
// every bound against the certified intervals.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 non-convergence.

#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperspec/bounds.hpp"
#include "hyperspec/generators.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/io.hpp"
#include "hyperspec/report.hpp"
#include "hyperspec/tensor_ops.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNotConverged = 3;

void printJson(const nlohmann::json& doc) { std::cout << doc.dump(2) << "\n"; }

void printProfileTable(const hyperspec::Hypergraph& g) {
  const nlohmann::json p = hyperspec::profileSection(g);
  std::printf("%-16s %d\n", "rank k", g.rank());
  std::printf("%-16s %d\n", "order n", g.order());
  std::printf("%-16s %zu\n", "edges", g.edgeCount());
  std::printf("%-16s %s\n", "connected", p["connected"].get<bool>() ? "yes" : "no");
  std::printf("%-16s %zu\n", "components", p["componentCount"].get<std::size_t>());
  std::printf("%-16s %zu\n", "isolated", p["isolatedCount"].get<std::size_t>());
  std::printf("%-16s %s\n", "regular", p["regular"].get<bool>() ? "yes" : "no");
  std::printf("%-16s %s\n", "blowup", p["blowupOfRegular"].get<bool>() ? "yes" : "no");

  std::map<long long, int> degreeClasses;
  for (const auto& d : p["degrees"]) degreeClasses[d.get<long long>()]++;
  std::string line;
  for (const auto& [d, c] : degreeClasses) {
    line += (line.empty() ? "" : ", ") + std::to_string(d) + " x" + std::to_string(c);
  }
  std::printf("%-16s %s\n", "degrees", line.c_str());

  if (!p["avg2"].is_null()) {
    std::map<double, int> mClasses;
    for (const auto& m : p["avg2"]) mClasses[m.get<double>()]++;
    line.clear();
    for (const auto& [m, c] : mClasses) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g x%d", m, c);
      line += (line.empty() ? "" : ", ") + std::string(buf);
    }
    std::printf("%-16s %s\n", "avg2", line.c_str());
  } else {
    std::printf("%-16s undefined (isolated vertex)\n", "avg2");
  }
}

void printEigenTable(const hyperspec::EigenEstimate& est, hyperspec::OperatorKind kind) {
  std::printf("%-16s %s\n", "operator", hyperspec::operatorName(kind));
  std::printf("%-16s %.17g\n", "lambda", est.lambda);
  std::printf("%-16s [%.17g, %.17g]\n", "certified", est.lo, est.hi);
  std::printf("%-16s %.3g\n", "width", est.hi - est.lo);
  std::printf("%-16s %zu\n", "iterations", est.iterations);
  std::printf("%-16s %s\n", "converged", est.converged ? "yes" : "no");
}

void printBoundsTable(const hyperspec::BoundReport& rep) {
  std::printf("%-22s %-4s %-6s %-22s %s\n", "bound", "of", "kind", "value", "notes");
  for (const hyperspec::BoundEntry& e : rep.entries) {
    std::string value;
    if (e.value) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", *e.value);
      value = buf;
    } else {
      value = "n/a (" + e.inapplicableReason + ")";
    }
    std::string notes = e.sharp ? "sharp" : "";
    if (e.witness) {
      notes += (notes.empty() ? "" : "; ") + std::string("witness u=") +
               std::to_string(e.witness->u) + " v=" + std::to_string(e.witness->v) +
               " Delta=" + std::to_string(e.witness->Delta) +
               " delta=" + std::to_string(e.witness->delta) +
               " gamma=" + std::to_string(e.witness->gamma);
    }
    std::printf("%-22s %-4s %-6s %-22s %s\n", e.boundId.c_str(),
                hyperspec::boundTargetName(e.target), hyperspec::boundKindName(e.kind),
                value.c_str(), notes.c_str());
  }
}

struct EigOptions {
  std::string op = "adjacency";
  double tol = 1e-10;
  double shift = 1.0;
  std::size_t maxIter = 1000000;

  hyperspec::PowerOptions power() const { return {shift, tol, maxIter, false}; }
  hyperspec::OperatorKind kind() const {
    return op == "qlap" ? hyperspec::OperatorKind::SignlessLaplacian
                        : hyperspec::OperatorKind::Adjacency;
  }
};

int runEig(const std::string& path, const EigOptions& opt, bool json) {
  const hyperspec::Hypergraph g = hyperspec::readHypergraphFile(path);
  hyperspec::EigenEstimate est;
  try {
    est = opt.kind() == hyperspec::OperatorKind::Adjacency
              ? hyperspec::spectralRadius(g, opt.power())
              : hyperspec::signlessLaplacianRadius(g, opt.power());
  } catch (const hyperspec::NotConvergedError& e) {
    std::cerr << e.what() << "\n";
    if (json) {
      hyperspec::ReportSections s;
      s.eigen.emplace_back(opt.kind(), e.estimate());
      printJson(hyperspec::reportDocument(g, s));
    } else {
      printEigenTable(e.estimate(), opt.kind());
    }
    return kExitNotConverged;
  }

  if (json) {
    hyperspec::ReportSections s;
    s.eigen.emplace_back(opt.kind(), est);
    printJson(hyperspec::reportDocument(g, s));
  } else {
    printEigenTable(est, opt.kind());
  }
  return kExitOk;
}

int runVerify(const std::string& path, double tol) {
  const hyperspec::Hypergraph g = hyperspec::readHypergraphFile(path);
  hyperspec::VerifyResult res;
  try {
    res = hyperspec::verifyBounds(g, tol);
  } catch (const hyperspec::NotConvergedError& e) {
    std::cerr << e.what() << "\n";
    return kExitNotConverged;
  }

  std::printf("rho in [%.17g, %.17g], mu in [%.17g, %.17g]\n", res.rho.lo, res.rho.hi,
              res.mu.lo, res.mu.hi);
  for (const hyperspec::VerifyCheck& c : res.checks) {
    const char* status = c.status == hyperspec::VerifyCheck::Status::Ok          ? "OK"
                         : c.status == hyperspec::VerifyCheck::Status::Violation ? "VIOLATION"
                                                                                 : "SKIPPED";
    std::string value;
    if (c.value) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", *c.value);
      value = buf;
    }
    std::printf("%-10s %-22s %-22s %s%s\n", status, c.boundId.c_str(), value.c_str(),
                c.detail.c_str(), c.sharp ? " (sharp)" : "");
  }
  return res.allOk ? kExitOk : kExitVerifyFailed;
}

int emitGenerated(const hyperspec::Hypergraph& g, const std::string& outPath) {
  if (outPath.empty()) {
    std::cout << hyperspec::serializeCanonical(g);
  } else {
    hyperspec::writeHypergraphFile(g, outPath);
    std::printf("wrote %s: k=%d n=%d edges=%zu\n", outPath.c_str(), g.rank(), g.order(),
                g.edgeCount());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified spectral bounds for uniform hypergraphs"};
  app.require_subcommand(1);

  std::string path;
  bool json = false;

  auto* info = app.add_subcommand("info", "degree and connectivity profile");
  info->add_option("file", path, "hypergraph file")->required();
  info->add_flag("--json", json, "emit the JSON report document");

  EigOptions eig;
  auto* eigCmd = app.add_subcommand("eig", "certified spectral radius estimate");
  eigCmd->add_option("file", path, "hypergraph file")->required();
  eigCmd->add_option("--operator", eig.op, "adjacency or qlap")
      ->check(CLI::IsMember({"adjacency", "qlap"}));
  eigCmd->add_option("--tol", eig.tol, "relative certificate width target");
  eigCmd->add_option("--shift", eig.shift, "diagonal shift sigma");
  eigCmd->add_option("--max-iter", eig.maxIter, "iteration cap");
  eigCmd->add_flag("--json", json, "emit the JSON report document");

  auto* bounds = app.add_subcommand("bounds", "evaluate every bound");
  bounds->add_option("file", path, "hypergraph file")->required();
  bounds->add_flag("--json", json, "emit the JSON report document");

  double verifyTol = 1e-6;
  auto* verify = app.add_subcommand("verify", "check bounds against certified intervals");
  verify->add_option("file", path, "hypergraph file")->required();
  verify->add_option("--tol", verifyTol, "bracketing slack");

  auto* gen = app.add_subcommand("gen", "generate example families");
  gen->require_subcommand(1);
  std::string outPath;

  int genK = 3;
  std::int64_t genD = 1, genD1 = 1, genD2 = 0, genGamma = 1;
  int genN = 4;
  std::string genInput, fixtureName;

  auto* genStar = gen->add_subcommand("hyperstar", "star with d edges glued at one vertex");
  genStar->add_option("--k", genK, "edge size")->required();
  genStar->add_option("--d", genD, "edge count")->required();
  genStar->add_option("-o,--output", outPath, "output file (default: stdout)");

  auto* genGddg = gen->add_subcommand("gddg", "two joined stars with shared edges");
  genGddg->add_option("--k", genK, "edge size")->required();
  genGddg->add_option("--d1", genD1, "private edges at the first center")->required();
  genGddg->add_option("--d2", genD2, "private edges at the second center")->required();
  genGddg->add_option("--gamma", genGamma, "shared edges")->required();
  genGddg->add_option("-o,--output", outPath, "output file (default: stdout)");

  auto* genComplete = gen->add_subcommand("complete", "all k-subsets of n vertices");
  genComplete->add_option("--n", genN, "order")->required();
  genComplete->add_option("--k", genK, "edge size")->required();
  genComplete->add_option("-o,--output", outPath, "output file (default: stdout)");

  auto* genBlowup = gen->add_subcommand("blowup", "append one shared vertex to every edge");
  genBlowup->add_option("--input", genInput, "base hypergraph file")->required();
  genBlowup->add_option("-o,--output", outPath, "output file (default: stdout)");

  auto* genFixture = gen->add_subcommand("fixture", "one of the named example hypergraphs");
  genFixture->add_option("name", fixtureName, "H1, H2, G1, G2 or G3")->required();
  genFixture->add_option("-o,--output", outPath, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (info->parsed()) {
      const hyperspec::Hypergraph g = hyperspec::readHypergraphFile(path);
      if (json) {
        hyperspec::ReportSections s;
        s.profile = true;
        printJson(hyperspec::reportDocument(g, s));
      } else {
        printProfileTable(g);
      }
      return kExitOk;
    }
    if (eigCmd->parsed()) return runEig(path, eig, json);
    if (bounds->parsed()) {
      const hyperspec::Hypergraph g = hyperspec::readHypergraphFile(path);
      if (json) {
        hyperspec::ReportSections s;
        s.bounds = true;
        printJson(hyperspec::reportDocument(g, s));
      } else {
        printBoundsTable(hyperspec::fullReport(g));
      }
      return kExitOk;
    }
    if (verify->parsed()) return runVerify(path, verifyTol);
    if (gen->parsed()) {
      if (genStar->parsed()) return emitGenerated(hyperspec::hyperstar(genK, genD), outPath);
      if (genGddg->parsed()) {
        return emitGenerated(hyperspec::gDeltaDeltaGamma(genK, genD1, genD2, genGamma),
                             outPath);
      }
      if (genComplete->parsed()) {
        return emitGenerated(hyperspec::completeUniform(genN, genK), outPath);
      }
      if (genBlowup->parsed()) {
        return emitGenerated(hyperspec::blowUp(hyperspec::readHypergraphFile(genInput)),
                             outPath);
      }
      if (genFixture->parsed()) return emitGenerated(hyperspec::fixture(fixtureName), outPath);
    }
  } catch (const hyperspec::NotConvergedError& e) {
    std::cerr << e.what() << "\n";
    return kExitNotConverged;
  } catch (const hyperspec::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
