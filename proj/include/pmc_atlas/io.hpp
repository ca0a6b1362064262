#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmc_atlas/errors.hpp"
#include "pmc_atlas/graph.hpp"

namespace pmca {

/// Width-independent parse result; feed it to Graph<W>::from_edges once the
/// required width is known.
struct EdgeListData {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

namespace io_detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  // A trailing newline produces one empty tail entry; drop it.
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

/// Parses a line holding exactly `count` non-negative integers separated by
/// blanks. Anything else (including stray '\r') is a malformed line.
inline std::vector<int> parse_int_line(std::string_view line, std::size_t count, int lineno) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ' || line[pos] == '\t') {
      ++pos;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc())
      throw ParseError(lineno, "expected integer in \"" + std::string(line) + "\"");
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  if (out.size() != count)
    throw ParseError(lineno, "expected " + std::to_string(count) + " integers, got " +
                                 std::to_string(out.size()));
  return out;
}

}  // namespace io_detail

/// Edge-list format: header "n m", then m lines "u v" with 0 <= u,v < n and
/// u != v. LF line endings, trailing newline optional.
inline EdgeListData parse_edge_list(std::string_view text) {
  auto lines = io_detail::split_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header line \"n m\"");
  auto header = io_detail::parse_int_line(lines[0], 2, 1);
  EdgeListData data;
  data.n = header[0];
  int m = header[1];
  if (data.n < 0 || m < 0) throw ParseError(1, "negative count in header");
  if (static_cast<int>(lines.size()) - 1 != m)
    throw ParseError(static_cast<int>(lines.size()),
                     "header announces " + std::to_string(m) + " edges but file has " +
                         std::to_string(lines.size() - 1) + " edge lines");
  for (int e = 0; e < m; ++e) {
    int lineno = e + 2;
    auto uv = io_detail::parse_int_line(lines[static_cast<std::size_t>(lineno - 1)], 2, lineno);
    int u = uv[0], v = uv[1];
    if (u >= data.n || v >= data.n)
      throw ParseError(lineno, "vertex out of range: " + std::to_string(std::max(u, v)) +
                                   " (n = " + std::to_string(data.n) + ")");
    if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    data.edges.emplace_back(u, v);
  }
  // Collapse duplicates; parse(serialize(g)) must be the identity on the
  // canonical form.
  std::sort(data.edges.begin(), data.edges.end());
  data.edges.erase(std::unique(data.edges.begin(), data.edges.end()), data.edges.end());
  return data;
}

/// Canonical edge-list text: edges sorted with u < v, one per line, trailing
/// newline.
template <unsigned Words>
std::string to_edge_list(const Graph<Words>& g) {
  std::string out = std::to_string(g.size()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

/// graph6 (the 6-bit ASCII encoding of the upper adjacency triangle),
/// restricted to n <= 62, i.e. the one-byte size header.
inline EdgeListData parse_graph6(std::string_view text) {
  static constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 input");
  int n = static_cast<int>(static_cast<unsigned char>(text[0])) - 63;
  if (static_cast<unsigned char>(text[0]) == 126)
    throw ParseError("graph6 with n > 62 is not supported");
  if (n < 0 || n > 62)
    throw ParseError("invalid graph6 size byte '" + std::string(1, text[0]) + "'");
  long bits = static_cast<long>(n) * (n - 1) / 2;
  long chars = (bits + 5) / 6;
  if (static_cast<long>(text.size()) - 1 < chars)
    throw ParseError("graph6 body truncated: need " + std::to_string(chars) + " data bytes");
  EdgeListData data;
  data.n = n;
  long t = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      char c = text[static_cast<std::size_t>(1 + t / 6)];
      int value = static_cast<int>(static_cast<unsigned char>(c)) - 63;
      if (value < 0 || value > 63)
        throw ParseError("invalid graph6 body byte '" + std::string(1, c) + "'");
      if ((value >> (5 - t % 6)) & 1) data.edges.emplace_back(i, j);
    }
  }
  std::sort(data.edges.begin(), data.edges.end());
  return data;
}

template <unsigned Words>
std::string to_graph6(const Graph<Words>& g) {
  int n = g.size();
  if (n > 62) throw InputError("graph6 output supports n <= 62");
  std::string out(1, static_cast<char>(63 + n));
  long bits = static_cast<long>(n) * (n - 1) / 2;
  std::string body(static_cast<std::size_t>((bits + 5) / 6), '\0');
  long t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t)
      if (g.adjacent(i, j)) body[static_cast<std::size_t>(t / 6)] |= static_cast<char>(1 << (5 - t % 6));
  for (char& c : body) c = static_cast<char>(c + 63);
  return out + body;
}

/// Picks the parser from the content: a graph6 header or a single line of
/// printable-ASCII payload reads as graph6, otherwise edge list.
inline EdgeListData parse_graph_auto(std::string_view text) {
  if (text.substr(0, 10) == ">>graph6<<") return parse_graph6(text);
  auto lines = io_detail::split_lines(text);
  if (lines.size() == 1) {
    bool numeric = !lines[0].empty();
    for (char c : lines[0])
      if ((c < '0' || c > '9') && c != ' ' && c != '\t') numeric = false;
    if (!numeric) return parse_graph6(text);
  }
  return parse_edge_list(text);
}

}  // namespace pmca
