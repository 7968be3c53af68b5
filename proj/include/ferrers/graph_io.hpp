#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bipartite_graph.hpp"
#include "errors.hpp"

namespace ferrers {

// Text formats.
//
// Neighborhood list (default):
//   m n
//   <0-based X indices of T_0>
//   ...
//   <0-based X indices of T_{n-1}>
//
// Biadjacency:
//   biadj [m n]
//   m lines of n characters '0'/'1'

namespace detail {

inline bool next_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

inline bool is_blank(const std::string& s) {
  return s.find_first_not_of(" \t") == std::string::npos;
}

inline std::size_t parse_count(const std::string& token, const char* what) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    throw format_error(std::string("expected a nonnegative integer for ") + what + ", got '" +
                       token + "'");
  return std::stoul(token);
}

inline bool is_binary_row(const std::string& s) {
  return !s.empty() && s.find_first_not_of("01") == std::string::npos;
}

inline BipartiteGraph read_biadj_body(std::istream& in, std::optional<std::size_t> m,
                                      std::optional<std::size_t> n) {
  std::vector<std::vector<int>> rows;
  std::string line;
  while (!m || rows.size() < *m) {
    const auto pos = in.tellg();
    if (!next_line(in, line)) break;
    if (!m && !is_binary_row(line)) {
      // End of an unsized block; leave the line for the caller.
      in.clear();
      in.seekg(pos);
      break;
    }
    if (!is_binary_row(line))
      throw format_error("biadjacency row " + std::to_string(rows.size()) +
                         " must consist of '0'/'1' characters");
    if (n && line.size() != *n)
      throw dimension_error("biadjacency row " + std::to_string(rows.size()) + " has length " +
                            std::to_string(line.size()) + ", expected " + std::to_string(*n));
    std::vector<int> row;
    row.reserve(line.size());
    for (char c : line) row.push_back(c - '0');
    rows.push_back(std::move(row));
  }
  if (m && rows.size() != *m)
    throw format_error("expected " + std::to_string(*m) + " biadjacency rows, got " +
                       std::to_string(rows.size()));
  return from_biadjacency(rows);
}

}  // namespace detail

/// Reads one graph and leaves the stream just past it. A leading "biadj"
/// header selects the 0/1 matrix format; `force_biadj` requires it.
inline BipartiteGraph read_graph(std::istream& in, bool force_biadj = false) {
  std::string line;
  do {
    if (!detail::next_line(in, line)) throw format_error("empty graph input");
  } while (detail::is_blank(line));

  std::istringstream header(line);
  std::string first;
  header >> first;
  if (first == "biadj") {
    std::string ms, ns;
    if (header >> ms) {
      if (!(header >> ns)) throw format_error("biadj header needs both m and n");
      return detail::read_biadj_body(in, detail::parse_count(ms, "m"),
                                     detail::parse_count(ns, "n"));
    }
    return detail::read_biadj_body(in, std::nullopt, std::nullopt);
  }
  if (force_biadj) {
    // Headerless matrix: the first line is already a row.
    std::stringstream rest;
    rest << line << '\n' << in.rdbuf();
    return detail::read_biadj_body(rest, std::nullopt, std::nullopt);
  }

  std::string ns, extra;
  if (!(header >> ns) || (header >> extra))
    throw format_error("graph header must be 'm n', got '" + line + "'");
  const std::size_t m = detail::parse_count(first, "m");
  const std::size_t n = detail::parse_count(ns, "n");
  if (m == 0 || n == 0) throw dimension_error("graph header has a zero dimension");

  std::vector<VertexSet> nbrs;
  nbrs.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (!detail::next_line(in, line))
      throw format_error("expected " + std::to_string(n) + " neighborhood lines, got " +
                         std::to_string(j));
    if (detail::is_blank(line))
      throw format_error("neighborhood line for y" + std::to_string(j) + " is empty");
    std::istringstream tokens(line);
    std::string tok;
    VertexSet t;
    while (tokens >> tok) {
      const std::size_t i = detail::parse_count(tok, "an X index");
      if (i >= m)
        throw dimension_error("X index " + std::to_string(i) + " on line for y" +
                              std::to_string(j) + " is >= m = " + std::to_string(m));
      if (t.contains(i))
        throw format_error("duplicate X index " + std::to_string(i) + " for y" + std::to_string(j));
      t.insert(i);
    }
    nbrs.push_back(t);
  }
  return BipartiteGraph(m, std::move(nbrs));
}

inline BipartiteGraph parse_graph(const std::string& text, bool force_biadj = false) {
  std::istringstream in(text);
  return read_graph(in, force_biadj);
}

/// Neighborhood-list format. Throws if some y has no neighbor, since the
/// format has no way to express it.
inline std::string to_text(const BipartiteGraph& g) {
  std::string out = std::to_string(g.m()) + " " + std::to_string(g.n()) + "\n";
  for (std::size_t j = 0; j < g.n(); ++j) {
    const auto members = g.neighborhood(j).members();
    if (members.empty())
      throw format_error("y" + std::to_string(j) + " is isolated; cannot serialize");
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(members[k]);
    }
    out += '\n';
  }
  return out;
}

inline std::string to_biadj_text(const BipartiteGraph& g) {
  std::string out = "biadj " + std::to_string(g.m()) + " " + std::to_string(g.n()) + "\n";
  for (const auto& row : g.biadjacency()) {
    for (int v : row) out += static_cast<char>('0' + v);
    out += '\n';
  }
  return out;
}

}  // namespace ferrers
