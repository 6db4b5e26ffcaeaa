// Copyright 2026 The chordcycle Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHORDCYCLE_IO_HPP
#define CHORDCYCLE_IO_HPP

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chordcycle/decomposition.hpp"
#include "chordcycle/graph.hpp"

namespace chordcycle {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

/// Raised when a parsed decomposition violates its invariants; carries the
/// full validation report.
struct InvariantError : std::runtime_error {
  std::vector<std::string> report;
  explicit InvariantError(std::vector<std::string> r)
      : std::runtime_error(join(r)), report(std::move(r)) {}

 private:
  static std::string join(const std::vector<std::string>& r) {
    std::string s = "invalid decomposition:";
    for (const auto& line : r) s += "\n  " + line;
    return s;
  }
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline int parse_int(const std::string& tok, int line_no) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line_no, "expected integer, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line_no, "expected integer, got '" + tok + "'");
  return value;
}

}  // namespace detail

// DECOMP text format (UTF-8, line-oriented):
//   '#' starts a comment line
//   'n <int>' exactly once, first non-comment line
//   'factor v0 v1 ... vk' one line per 2-factor cycle
//   'chord u v' one line per chord
inline DecomposedGraph parse_decomp(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::vector<int>> cycles;
  std::vector<Edge> chords;
  std::set<Edge> seen_edges;

  auto check_vertex = [&](int v) {
    if (v < 0 || v >= n)
      throw ParseError(line_no, "vertex " + std::to_string(v) +
                                    " out of range 0.." + std::to_string(n - 1));
  };
  auto add_edge = [&](int u, int v) {
    if (u == v)
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (!seen_edges.emplace(u, v).second)
      throw ParseError(line_no, "duplicate edge {" + std::to_string(std::min(u, v)) +
                                    "," + std::to_string(std::max(u, v)) + "}");
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = detail::split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    const std::string& kw = toks[0];
    if (kw == "n") {
      if (n >= 0) throw ParseError(line_no, "duplicate 'n' line");
      if (toks.size() != 2) throw ParseError(line_no, "'n' takes one integer");
      n = detail::parse_int(toks[1], line_no);
      if (n < 0) throw ParseError(line_no, "vertex count must be >= 0");
      continue;
    }
    if (n < 0)
      throw ParseError(line_no, "'n <int>' must be the first non-comment line");
    if (kw == "factor") {
      if (toks.size() < 4)
        throw ParseError(line_no, "factor cycle length " +
                                      std::to_string(toks.size() - 1) +
                                      ", cycle length >= 3 required");
      std::vector<int> cyc;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        int v = detail::parse_int(toks[i], line_no);
        check_vertex(v);
        cyc.push_back(v);
      }
      for (std::size_t i = 0; i < cyc.size(); ++i)
        add_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
      cycles.push_back(std::move(cyc));
    } else if (kw == "chord") {
      if (toks.size() != 3) throw ParseError(line_no, "'chord' takes two vertices");
      int u = detail::parse_int(toks[1], line_no);
      int v = detail::parse_int(toks[2], line_no);
      check_vertex(u);
      check_vertex(v);
      add_edge(u, v);
      chords.emplace_back(u, v);
    } else {
      throw ParseError(line_no, "unknown directive '" + kw + "'");
    }
  }
  if (n < 0) throw ParseError(line_no, "missing 'n' line");

  DecomposedGraph dg(n, std::move(cycles), std::move(chords));
  auto report = validate(dg);
  if (!report.empty()) throw InvariantError(std::move(report));
  return dg;
}

/// Canonical DECOMP text; parse(serialize(dg)) == dg.
inline std::string serialize_decomp(const DecomposedGraph& dg) {
  DecomposedGraph c = dg.canonical();
  std::ostringstream out;
  out << "n " << c.graph().vertex_count() << "\n";
  for (const auto& cyc : c.factor_cycles()) {
    out << "factor";
    for (int v : cyc) out << ' ' << v;
    out << "\n";
  }
  for (const Edge& e : c.chord_edges())
    out << "chord " << e.a << ' ' << e.b << "\n";
  return out.str();
}

// graph6: byte 63+n (or '~' + 3 bytes for 63 <= n < 2^18), then the upper
// triangle of the adjacency matrix in column order, packed 6 bits per byte
// and offset by 63. Trailing pad bits must be zero.
inline Graph parse_graph6(std::string_view bytes) {
  // Tolerate the optional nauty header and a trailing newline.
  constexpr std::string_view kHeader = ">>graph6<<";
  if (bytes.substr(0, kHeader.size()) == kHeader)
    bytes.remove_prefix(kHeader.size());
  while (!bytes.empty() && (bytes.back() == '\n' || bytes.back() == '\r'))
    bytes.remove_suffix(1);
  if (bytes.empty()) throw std::invalid_argument("graph6: empty input");

  std::size_t pos = 0;
  auto sixbits = [&](const char* what) -> int {
    if (pos >= bytes.size())
      throw std::invalid_argument(std::string("graph6: truncated ") + what);
    unsigned char c = static_cast<unsigned char>(bytes[pos++]);
    if (c < 63 || c > 126)
      throw std::invalid_argument(std::string("graph6: byte ") +
                                  std::to_string(int(c)) + " out of range in " +
                                  what);
    return c - 63;
  };

  long long n = 0;
  int first = sixbits("size header");
  if (first < 63) {
    n = first;
  } else {  // first byte was '~'
    if (pos < bytes.size() && bytes[pos] == '~')
      throw std::invalid_argument("graph6: 8-byte sizes not supported");
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | sixbits("size header");
  }
  if (n > 100000) throw std::invalid_argument("graph6: size too large");

  std::vector<Edge> edges;
  int bit_index = 0;
  int current = 0;
  auto next_bit = [&]() -> int {
    if (bit_index == 0) {
      current = sixbits("adjacency data");
      bit_index = 6;
    }
    --bit_index;
    return (current >> bit_index) & 1;
  };
  for (long long j = 1; j < n; ++j)
    for (long long i = 0; i < j; ++i)
      if (next_bit()) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  while (bit_index > 0) {
    --bit_index;
    if ((current >> bit_index) & 1)
      throw std::invalid_argument("graph6: nonzero trailing bits");
  }
  if (pos != bytes.size())
    throw std::invalid_argument("graph6: trailing bytes after adjacency data");
  return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string write_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n < (1 << 18)) {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else {
    throw std::invalid_argument("write_graph6: size too large");
  }
  int bits = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      bits = (bits << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + bits));
        bits = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (bits << (6 - filled))));
  return out;
}

}  // namespace chordcycle

#endif  // CHORDCYCLE_IO_HPP
