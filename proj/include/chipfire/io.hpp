#pragma once

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"

namespace chipfire {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename Int>
bool parse_int(std::string_view token, Int& out) {
  if (!token.empty() && token.front() == '+') return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace detail

// Parses the line-oriented graph format:
//
//   mgf 1
//   <n>
//   <u> <v> <m>     one line per adjacent pair, m >= 1
//
// '#' starts a comment. Pairs may appear in any order and with u > v, but
// each unordered pair at most once.
inline Multigraph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t stage = 0;  // 0: header, 1: vertex count, 2: edges
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;
    if (stage == 0) {
      if (tokens.size() != 2 || tokens[0] != "mgf" || tokens[1] != "1")
        throw ParseError(line_no, "expected header 'mgf 1'");
      stage = 1;
    } else if (stage == 1) {
      if (tokens.size() != 1 || !detail::parse_int(tokens[0], n) || n == 0)
        throw ParseError(line_no, "expected a positive vertex count");
      stage = 2;
    } else {
      Vertex u = 0, v = 0;
      int m = 0;
      if (tokens.size() != 3 || !detail::parse_int(tokens[0], u) || !detail::parse_int(tokens[1], v) ||
          !detail::parse_int(tokens[2], m))
        throw ParseError(line_no, "expected 'u v m'");
      if (u >= n || v >= n) throw ParseError(line_no, "vertex out of range");
      if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
      if (m < 1) throw ParseError(line_no, "multiplicity must be at least 1");
      if (u > v) std::swap(u, v);
      if (!seen.insert({u, v}).second)
        throw ParseError(line_no, "pair " + std::to_string(u) + " " + std::to_string(v) + " listed twice");
      edges.push_back({u, v, m});
    }
    if (end == text.size()) break;
  }
  if (stage < 2) throw ParseError(line_no, stage == 0 ? "missing header" : "missing vertex count");
  return Multigraph::from_edges(n, edges);
}

// Canonical form: header, vertex count, then pairs u < v in lexicographic
// order, each line newline-terminated.
inline std::string emit_graph(const Multigraph& g) {
  std::string out = "mgf 1\n" + std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::to_string(e.multiplicity) + "\n";
  return out;
}

// "div n: c_0 c_1 ... c_{n-1}" on a single line.
inline Divisor parse_divisor(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.find('\n') != std::string_view::npos) throw ParseError(0, "divisor must be a single line");
  auto tokens = detail::split_ws(text);
  if (tokens.size() < 2 || tokens[0] != "div" || tokens[1].empty() || tokens[1].back() != ':')
    throw ParseError(1, "expected 'div n: c_0 ... c_{n-1}'");
  std::size_t n = 0;
  if (!detail::parse_int(tokens[1].substr(0, tokens[1].size() - 1), n) || n == 0)
    throw ParseError(1, "bad divisor length");
  if (tokens.size() != n + 2)
    throw ParseError(1, "divisor declares " + std::to_string(n) + " entries but lists " +
                            std::to_string(tokens.size() - 2));
  Divisor d(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!detail::parse_int(tokens[i + 2], d[i])) throw ParseError(1, "bad coefficient '" + std::string(tokens[i + 2]) + "'");
  return d;
}

inline std::string emit_divisor(const Divisor& d) {
  std::string out = "div " + std::to_string(d.size()) + ":";
  for (Chips c : d.chips()) out += " " + std::to_string(c);
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace chipfire
