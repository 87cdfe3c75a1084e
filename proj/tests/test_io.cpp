#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "hyperspec/errors.hpp"
#include "hyperspec/generators.hpp"
#include "hyperspec/io.hpp"
#include "test_support.hpp"

using namespace hyperspec;

namespace {

Errc codeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::BadParams;
}

bool sameHypergraph(const Hypergraph& a, const Hypergraph& b) {
  return a.order() == b.order() && a.rank() == b.rank() && a.edges() == b.edges();
}

std::filesystem::path scratchFile(const char* stem) {
  static int counter = 0;
  return std::filesystem::temp_directory_path() /
         (std::string("hyperspec_io_") + stem + "_" + std::to_string(++counter) + ".hg");
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("text format basics") {
  const Hypergraph g = parseHypergraph("3 4\n1 2 3\n2 3 4\n");
  CHECK(g.rank() == 3);
  CHECK(g.order() == 4);
  CHECK(g.edgeCount() == 2);

  // Comments, blank lines, extra whitespace, and no trailing newline are all
  // tolerated and do not change the parse.
  const Hypergraph decorated = parseHypergraph(
      "# rank and order\n\n3 4\n  1 2 3  \n# middle\n\n2 3 4");
  CHECK(sameHypergraph(g, decorated));

  // Edgeless instance: header only.
  const Hypergraph empty = parseHypergraph("3 5\n");
  CHECK(empty.order() == 5);
  CHECK(empty.edgeCount() == 0);

  // Windows line endings parse identically.
  CHECK(sameHypergraph(g, parseHypergraph("3 4\r\n1 2 3\r\n2 3 4\r\n")));
}

TEST_CASE("text format errors") {
  CHECK(codeOf([] { parseHypergraph(""); }) == Errc::ParseError);
  CHECK(codeOf([] { parseHypergraph("\n# only comments\n"); }) == Errc::ParseError);
  CHECK(codeOf([] { parseHypergraph("3\n"); }) == Errc::ParseError);
  CHECK(codeOf([] { parseHypergraph("3 4 5\n1 2 3\n"); }) == Errc::ParseError);
  CHECK(codeOf([] { parseHypergraph("x 4\n"); }) == Errc::ParseError);
  CHECK(codeOf([] { parseHypergraph("3 4\n1 2 z\n"); }) == Errc::ParseError);
  CHECK(codeOf([] { parseHypergraph("3 4\n1 2 99999999999\n"); }) == Errc::ParseError);
  // Semantic problems keep their own codes.
  CHECK(codeOf([] { parseHypergraph("3 5\n1 2\n"); }) == Errc::EdgeWrongSize);
  CHECK(codeOf([] { parseHypergraph("3 5\n1 2 9\n"); }) == Errc::VertexOutOfRange);
  CHECK(codeOf([] { parseHypergraph("3 5\n1 2 3\n3 2 1\n"); }) == Errc::DuplicateEdge);
  CHECK(codeOf([] { parseHypergraph("1 5\n"); }) == Errc::RankTooSmall);
}

TEST_CASE("json format") {
  const Hypergraph fromJson =
      parseHypergraph(R"({"k": 3, "n": 4, "edges": [[1, 2, 3], [4, 3, 2]]})");
  const Hypergraph fromText = parseHypergraph("3 4\n1 2 3\n2 3 4\n");
  CHECK(sameHypergraph(fromJson, fromText));

  // Leading whitespace still selects the JSON branch.
  CHECK(sameHypergraph(fromJson, parseHypergraph("  \n\t{\"k\":3,\"n\":4,\"edges\":[[1,2,3],[2,3,4]]}")));

  CHECK(codeOf([] { parseHypergraph("{"); }) == Errc::ParseError);
  CHECK(codeOf([] { parseHypergraph("{}"); }) == Errc::ParseError);
  CHECK(codeOf([] { parseHypergraph(R"({"k": 3, "n": 4})"); }) == Errc::ParseError);
  CHECK(codeOf([] { parseHypergraph(R"({"k": "3", "n": 4, "edges": []})"); }) ==
        Errc::ParseError);
  CHECK(codeOf([] { parseHypergraph(R"({"k": 3, "n": 4, "edges": [[1, 2, 3.5]]})"); }) ==
        Errc::ParseError);
  CHECK(codeOf([] { parseHypergraph(R"({"k": 3, "n": 4, "edges": [[1, 2]]})"); }) ==
        Errc::EdgeWrongSize);
  CHECK(codeOf([] { parseHypergraph(R"({"k": 3, "n": 4, "edges": 7})"); }) ==
        Errc::ParseError);
}

TEST_CASE("canonical serialization is a fixed point") {
  for (const auto& name : fixtureNames()) {
    CAPTURE(name);
    const Hypergraph g = fixture(name);
    const std::string text = serializeCanonical(g);
    CHECK(text == fixtureText(name));  // the shipped files are canonical
    CHECK(sameHypergraph(g, parseHypergraph(text)));
    CHECK(serializeCanonical(parseHypergraph(text)) == text);
  }
}

TEST_CASE("round trip on random instances") {
  std::mt19937_64 rng(99173u);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const int k = 2 + static_cast<int>(rng() % static_cast<unsigned>(std::min(n, 4) - 1));
    const Hypergraph g = testsupport::randomArbitrary(rng, k, n);
    CAPTURE(trial);
    const std::string text = serializeCanonical(g);
    const Hypergraph back = parseHypergraph(text);
    CHECK(sameHypergraph(g, back));
    CHECK(serializeCanonical(back) == text);
  }
}

TEST_CASE("stream and file IO") {
  const Hypergraph g = fixture("G2");

  std::istringstream in(serializeCanonical(g));
  CHECK(sameHypergraph(readHypergraph(in), g));

  const std::filesystem::path path = scratchFile("roundtrip");
  writeHypergraphFile(g, path.string());
  CHECK(sameHypergraph(readHypergraphFile(path.string()), g));
  std::filesystem::remove(path);

  CHECK(codeOf([] { readHypergraphFile("/nonexistent/definitely/missing.hg"); }) ==
        Errc::ParseError);
  CHECK(codeOf([&] { writeHypergraphFile(g, "/nonexistent/definitely/missing.hg"); }) ==
        Errc::ParseError);
}

}  // TEST_SUITE
