#include "hyperspec/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hyperspec {

namespace {

bool parseInt(std::string_view token, long long& out) {
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc() && res.ptr == last;
}

std::vector<std::string_view> splitWs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

VertexId narrowVertex(long long value, const std::string& what) {
  if (value < -1000000000LL || value > 1000000000LL) {
    throw Error(Errc::ParseError, what + " out of range: " + std::to_string(value));
  }
  return static_cast<VertexId>(value);
}

Hypergraph parseTextFormat(std::string_view content) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= content.size()) {
    const std::size_t nl = content.find('\n', start);
    const std::size_t end = nl == std::string_view::npos ? content.size() : nl;
    lines.push_back(content.substr(start, end - start));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }

  bool haveHeader = false;
  int k = 0;
  VertexId n = 0;
  std::vector<Edge> edges;
  for (std::string_view line : lines) {
    const auto tokens = splitWs(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    std::vector<long long> values;
    values.reserve(tokens.size());
    for (std::string_view t : tokens) {
      long long v = 0;
      if (!parseInt(t, v)) {
        throw Error(Errc::ParseError, "not an integer: '" + std::string(t) + "'");
      }
      values.push_back(v);
    }

    if (!haveHeader) {
      if (values.size() != 2) {
        throw Error(Errc::ParseError, "header line must be 'k n'");
      }
      k = static_cast<int>(narrowVertex(values[0], "rank"));
      n = narrowVertex(values[1], "order");
      haveHeader = true;
      continue;
    }

    Edge e;
    e.reserve(values.size());
    for (long long v : values) e.push_back(narrowVertex(v, "vertex id"));
    edges.push_back(std::move(e));
  }

  if (!haveHeader) throw Error(Errc::ParseError, "missing 'k n' header line");
  return buildHypergraph(n, k, std::move(edges));
}

Hypergraph parseJsonFormat(std::string_view content) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(content);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }

  if (!doc.is_object() || !doc.contains("k") || !doc.contains("n") ||
      !doc.contains("edges")) {
    throw Error(Errc::ParseError, "JSON form needs the keys k, n, edges");
  }
  if (!doc["k"].is_number_integer() || !doc["n"].is_number_integer() ||
      !doc["edges"].is_array()) {
    throw Error(Errc::ParseError, "k and n must be integers, edges an array");
  }

  const int k = static_cast<int>(narrowVertex(doc["k"].get<long long>(), "rank"));
  const VertexId n = narrowVertex(doc["n"].get<long long>(), "order");
  std::vector<Edge> edges;
  edges.reserve(doc["edges"].size());
  for (const auto& item : doc["edges"]) {
    if (!item.is_array()) throw Error(Errc::ParseError, "each edge must be an array");
    Edge e;
    e.reserve(item.size());
    for (const auto& v : item) {
      if (!v.is_number_integer()) {
        throw Error(Errc::ParseError, "vertex ids must be integers");
      }
      e.push_back(narrowVertex(v.get<long long>(), "vertex id"));
    }
    edges.push_back(std::move(e));
  }
  return buildHypergraph(n, k, std::move(edges));
}

}  // namespace

Hypergraph parseHypergraph(std::string_view content) {
  for (char c : content) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parseJsonFormat(content) : parseTextFormat(content);
  }
  throw Error(Errc::ParseError, "empty input");
}

Hypergraph readHypergraph(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseHypergraph(buf.str());
}

Hypergraph readHypergraphFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  return readHypergraph(in);
}

std::string serializeCanonical(const Hypergraph& g) {
  std::string out = std::to_string(g.rank()) + " " + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(e[i]);
    }
    out += '\n';
  }
  return out;
}

void writeHypergraphFile(const Hypergraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot open '" + path + "' for writing");
  out << serializeCanonical(g);
  out.flush();
  if (!out) throw Error(Errc::ParseError, "write to '" + path + "' failed");
}

}  // namespace hyperspec
