#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// Hypergraph file content, either format:
//   text:  header line "k n", then one edge per line as k whitespace-
//          separated 1-based vertex ids; blank lines and lines starting
//          with '#' are ignored
//   JSON:  {"k": int, "n": int, "edges": [[int, ...], ...]}
// The first non-space character decides ('{' selects JSON). Structural
// problems throw Error(ParseError); semantic problems propagate the
// buildHypergraph error codes.
Hypergraph parseHypergraph(std::string_view content);

Hypergraph readHypergraph(std::istream& in);

// Throws Error(ParseError) when the file cannot be opened.
Hypergraph readHypergraphFile(const std::string& path);

// Canonical text form: "k n" header, edges sorted lexicographically with
// ascending vertices, single spaces, trailing newline. parse-then-serialize
// is a fixed point.
std::string serializeCanonical(const Hypergraph& g);

// Throws Error(ParseError) when the file cannot be written.
void writeHypergraphFile(const Hypergraph& g, const std::string& path);

}  // namespace hyperspec
