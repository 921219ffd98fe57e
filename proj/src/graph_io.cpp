#include "fillorder/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace fillorder {

namespace {

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

bool blank_or_comment(const std::string& line, char comment) {
  for (char c : line) {
    if (c == comment) return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

StaticGraph load_matrix_market(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) fail(1, "empty input");
  ++lineno;
  std::istringstream header(line);
  std::string banner, object, layout, field, symmetry;
  header >> banner >> object >> layout >> field >> symmetry;
  if (lower(banner) != "%%matrixmarket" || lower(object) != "matrix")
    fail(lineno, "missing %%MatrixMarket matrix header");
  if (lower(layout) != "coordinate") fail(lineno, "only coordinate layout is supported");
  field = lower(field);
  if (field != "real" && field != "pattern" && field != "integer")
    fail(lineno, "unsupported field '" + field + "'");
  symmetry = lower(symmetry);
  if (symmetry != "symmetric" && symmetry != "general")
    fail(lineno, "unsupported symmetry '" + symmetry + "'");

  long long rows = -1, cols = -1, nnz = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line, '%')) continue;
    std::istringstream s(line);
    if (!(s >> rows >> cols >> nnz) || rows < 0 || cols < 0 || nnz < 0)
      fail(lineno, "bad size line");
    break;
  }
  if (rows < 0) fail(lineno, "missing size line");
  if (rows != cols) fail(lineno, "matrix is not square");

  std::vector<std::pair<Vertex, Vertex>> entries;
  long long seen = 0;
  while (seen < nnz && std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line, '%')) continue;
    std::istringstream s(line);
    long long i = 0, j = 0;
    if (!(s >> i >> j)) fail(lineno, "bad entry");
    if (field != "pattern") {
      double value = 0;
      if (!(s >> value)) fail(lineno, "missing value");
    }
    if (i < 1 || j < 1 || i > rows || j > cols) fail(lineno, "index out of range");
    entries.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1));
    ++seen;
  }
  if (seen < nnz) fail(lineno, "expected " + std::to_string(nnz) + " entries, got " + std::to_string(seen));

  if (symmetry == "general") {
    std::set<std::pair<Vertex, Vertex>> pattern;
    for (auto [i, j] : entries)
      if (i != j) pattern.emplace(i, j);
    for (auto [i, j] : pattern)
      if (!pattern.count({j, i}))
        throw ParseError("asymmetric pattern: entry (" + std::to_string(i + 1) + ", " +
                         std::to_string(j + 1) + ") has no transpose");
  }
  return StaticGraph(static_cast<std::size_t>(rows), entries);
}

StaticGraph load_edge_list(std::istream& in, IndexBase base) {
  std::vector<std::pair<long long, long long>> raw;
  std::string line;
  std::size_t lineno = 0;
  long long max_label = -1;
  bool saw_zero = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line, '#')) continue;
    std::istringstream s(line);
    long long u = 0, v = 0;
    if (!(s >> u >> v)) fail(lineno, "expected two vertex labels");
    std::string rest;
    if (s >> rest && rest[0] != '#') fail(lineno, "trailing tokens");
    if (u < 0 || v < 0) fail(lineno, "negative vertex label");
    saw_zero = saw_zero || u == 0 || v == 0;
    max_label = std::max({max_label, u, v});
    raw.emplace_back(u, v);
  }
  long long b = 0;
  if (base == IndexBase::One || (base == IndexBase::Auto && !saw_zero && max_label >= 1)) b = 1;
  if (b == 1 && saw_zero) throw ParseError("label 0 in a 1-based edge list");
  const std::size_t n = max_label < 0 ? 0 : static_cast<std::size_t>(max_label + 1 - b);
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(raw.size());
  for (auto [u, v] : raw) edges.emplace_back(static_cast<Vertex>(u - b), static_cast<Vertex>(v - b));
  StaticGraph g(n, edges);
  std::vector<std::int64_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<std::int64_t>(i) + b;
  g.set_labels(std::move(labels));
  return g;
}

}  // namespace

GraphFormat parse_graph_format(const std::string& name) {
  if (name == "mtx") return GraphFormat::MatrixMarket;
  if (name == "edges") return GraphFormat::EdgeList;
  throw InvalidArgument("unknown graph format '" + name + "'");
}

StaticGraph load_graph(std::istream& in, GraphFormat format, IndexBase base) {
  return format == GraphFormat::MatrixMarket ? load_matrix_market(in) : load_edge_list(in, base);
}

StaticGraph load_graph_file(const std::string& path, GraphFormat format, IndexBase base) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return load_graph(in, format, base);
}

void write_edge_list(std::ostream& out, const StaticGraph& g) {
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_matrix_market(std::ostream& out, const StaticGraph& g) {
  out << "%%MatrixMarket matrix coordinate pattern symmetric\n";
  out << g.n() << ' ' << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << v + 1 << ' ' << u + 1 << '\n';
}

}  // namespace fillorder
