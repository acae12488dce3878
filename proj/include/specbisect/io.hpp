#ifndef SPECBISECT_IO_HPP
#define SPECBISECT_IO_HPP

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "specbisect/graph.hpp"

namespace specbisect {

namespace detail {

inline std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

inline bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace detail

/// Reads a Matrix Market coordinate-format matrix as a graph: the matrix must
/// be square; every stored off-diagonal entry (i, j) becomes the edge
/// {i-1, j-1}. Numeric values and diagonal entries are discarded, duplicates
/// collapse, and general (non-symmetric) files are symmetrized by union.
inline Graph read_matrix_market(std::istream& in) {
  long line_no = 0;
  std::string line;

  if (!std::getline(in, line)) throw ParseError(1, "empty stream");
  ++line_no;
  {
    std::istringstream header(line);
    std::string banner, object, format;
    header >> banner >> object >> format;
    if (banner.rfind("%%MatrixMarket", 0) != 0)
      throw ParseError(line_no, "missing %%MatrixMarket banner");
    if (detail::lowercase(object) != "matrix")
      throw ParseError(line_no, "unsupported object '" + object + "'");
    if (detail::lowercase(format) != "coordinate")
      throw ParseError(line_no,
                       "only coordinate format is supported, got '" + format + "'");
  }

  long rows = -1, cols = -1, nnz = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '%') continue;
    if (detail::blank(line)) continue;
    std::istringstream sizes(line);
    if (!(sizes >> rows >> cols >> nnz))
      throw ParseError(line_no, "malformed size line '" + line + "'");
    break;
  }
  if (rows < 0) throw ParseError(line_no, "missing size line");
  if (rows != cols)
    throw ParseError(line_no, "matrix is not square (" + std::to_string(rows) +
                                  "x" + std::to_string(cols) + ")");
  if (rows < 1) throw ParseError(line_no, "matrix order must be >= 1");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(nnz));
  long seen = 0;
  while (seen < nnz) {
    if (!std::getline(in, line))
      throw ParseError(line_no, "unexpected end of file: expected " +
                                    std::to_string(nnz) + " entries, got " +
                                    std::to_string(seen));
    ++line_no;
    if (!line.empty() && line[0] == '%') continue;
    if (detail::blank(line)) continue;
    std::istringstream entry(line);
    long i = 0, j = 0;
    if (!(entry >> i >> j))
      throw ParseError(line_no, "malformed entry '" + line + "'");
    if (i < 1 || i > rows || j < 1 || j > rows)
      throw ParseError(line_no, "index out of range: (" + std::to_string(i) +
                                    ", " + std::to_string(j) + ")");
    ++seen;
    if (i == j) continue;
    edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
  }
  return Graph(static_cast<int>(rows), edges);
}

/// Plain edge-list format: optional '#' comment lines, a "n m" header, then
/// m lines "u v" with 0-based endpoints.
inline Graph read_edge_list(std::istream& in) {
  long line_no = 0;
  std::string line;
  long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    if (detail::blank(line)) continue;
    std::istringstream header(line);
    if (!(header >> n >> m))
      throw ParseError(line_no, "malformed header '" + line + "'");
    break;
  }
  if (n < 0) throw ParseError(line_no, "missing 'n m' header");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  long seen = 0;
  while (seen < m) {
    if (!std::getline(in, line))
      throw ParseError(line_no, "unexpected end of file: expected " +
                                    std::to_string(m) + " edges, got " +
                                    std::to_string(seen));
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    if (detail::blank(line)) continue;
    std::istringstream entry(line);
    long u = 0, v = 0;
    if (!(entry >> u >> v))
      throw ParseError(line_no, "malformed edge '" + line + "'");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(line_no, "endpoint out of range: (" + std::to_string(u) +
                                    ", " + std::to_string(v) + ")");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    ++seen;
  }
  return Graph(static_cast<int>(n), edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

/// Partition file: header "n n_half", then one line "v side" per vertex with
/// side in {A, B}.
inline void write_partition(std::ostream& out, const Graph& g,
                            const Bisection& bis) {
  const auto label = detail::bisection_labels(g, bis);
  out << g.num_vertices() << ' ' << bis.a.size() << '\n';
  for (int v = 0; v < g.num_vertices(); ++v)
    out << v << ' ' << (label[v] == 1 ? 'A' : 'B') << '\n';
}

inline Bisection read_partition(std::istream& in, const Graph& g) {
  long line_no = 0;
  std::string line;
  long n = -1, half = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    if (detail::blank(line)) continue;
    std::istringstream header(line);
    if (!(header >> n >> half))
      throw ParseError(line_no, "malformed partition header '" + line + "'");
    break;
  }
  if (n < 0) throw ParseError(line_no, "missing 'n n_half' header");
  if (n != g.num_vertices())
    throw InputError("partition file is for " + std::to_string(n) +
                     " vertices, graph has " +
                     std::to_string(g.num_vertices()));
  if (half * 2 != n)
    throw InputError("partition halves (" + std::to_string(half) +
                     ") do not bisect " + std::to_string(n) + " vertices");

  Bisection bis;
  std::vector<char> assigned(static_cast<std::size_t>(n), 0);
  long seen = 0;
  while (seen < n) {
    if (!std::getline(in, line))
      throw ParseError(line_no, "unexpected end of file: expected " +
                                    std::to_string(n) + " assignments, got " +
                                    std::to_string(seen));
    ++line_no;
    if (!line.empty() && line[0] == '#') continue;
    if (detail::blank(line)) continue;
    std::istringstream entry(line);
    long v = 0;
    std::string side;
    if (!(entry >> v >> side))
      throw ParseError(line_no, "malformed assignment '" + line + "'");
    if (v < 0 || v >= n)
      throw ParseError(line_no, "vertex out of range: " + std::to_string(v));
    if (assigned[v])
      throw InputError("vertex " + std::to_string(v) + " assigned twice");
    assigned[v] = 1;
    if (side == "A")
      bis.a.push_back(static_cast<int>(v));
    else if (side == "B")
      bis.b.push_back(static_cast<int>(v));
    else
      throw ParseError(line_no, "side must be A or B, got '" + side + "'");
    ++seen;
  }
  if (static_cast<long>(bis.a.size()) != half)
    throw InputError("unbalanced partition: |A| = " +
                     std::to_string(bis.a.size()) + ", expected " +
                     std::to_string(half));
  std::sort(bis.a.begin(), bis.a.end());
  std::sort(bis.b.begin(), bis.b.end());
  return bis;
}

}  // namespace specbisect

#endif  // SPECBISECT_IO_HPP
