#pragma once

#include <charconv>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "enumerate.hpp"
#include "graph.hpp"
#include "parameters.hpp"

namespace mcut {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

struct NumberedLine {
  int number;
  std::vector<std::string> tokens;
};

// Non-blank lines that are not comments, split on whitespace.
inline std::vector<NumberedLine> content_lines(std::string_view text) {
  std::vector<NumberedLine> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream words(line);
    std::vector<std::string> tokens;
    std::string w;
    while (words >> w) tokens.push_back(w);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

inline long long parse_int(const std::string& s, int line, std::string_view what) {
  long long value = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size())
    throw ParseError(line, "expected an integer for " + std::string(what) + ", got '" + s + "'");
  return value;
}

}  // namespace detail

inline Graph parse_graph(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header 'n m'");
  const auto& head = lines.front();
  if (head.tokens.size() != 2) throw ParseError(head.number, "header must be 'n m'");
  const long long n = detail::parse_int(head.tokens[0], head.number, "n");
  const long long m = detail::parse_int(head.tokens[1], head.number, "m");
  if (n < 0 || m < 0) throw ParseError(head.number, "negative count in header");
  if (n > 1'000'000) throw ParseError(head.number, "vertex count too large");
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError(lines.back().number, "header announces " + std::to_string(m) + " edges but the file has " +
                                              std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens.size() != 2) throw ParseError(l.number, "edge line must be 'u v'");
    const long long u = detail::parse_int(l.tokens[0], l.number, "u");
    const long long v = detail::parse_int(l.tokens[1], l.number, "v");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(l.number, "endpoint out of range 0.." + std::to_string(n - 1));
    if (u == v) throw ParseError(l.number, "loop at vertex " + std::to_string(u));
    Edge e = make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second) throw ParseError(l.number, "repeated edge " + to_string(e));
    edges.push_back(e);
  }
  return build_graph(static_cast<int>(n), edges);
}

inline std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

// One block per line; the blocks must partition 0..n-1.
inline VertexClassPartition parse_partition(std::string_view text, int n) {
  std::vector<VertexSet> blocks;
  int last = 1;
  for (const auto& l : detail::content_lines(text)) {
    last = l.number;
    VertexSet b;
    for (const std::string& t : l.tokens) {
      const long long v = detail::parse_int(t, l.number, "vertex");
      if (v < 0 || v >= n) throw ParseError(l.number, "vertex " + t + " out of range 0.." + std::to_string(n - 1));
      b.push_back(static_cast<Vertex>(v));
    }
    blocks.push_back(std::move(b));
  }
  VertexClassPartition p = sorted_partition(std::move(blocks));
  try {
    block_index(n, p);
  } catch (const std::invalid_argument& e) {
    throw ParseError(last, e.what());
  }
  return p;
}

inline std::string format_partition(const VertexClassPartition& p) {
  std::ostringstream out;
  for (const VertexSet& b : p.blocks) {
    for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
    out << '\n';
  }
  return out.str();
}

inline std::string format_cut(const Cut& c) {
  if (c.empty()) return "EMPTY";
  std::string out;
  for (const Edge& e : c) {
    if (!out.empty()) out += ' ';
    out += to_string(e);
  }
  return out;
}

// Writes each cut as soon as the stream yields it; returns the number written.
inline std::size_t write_cuts(std::ostream& out, CutStream cuts) {
  std::size_t count = 0;
  for (const Cut& c : cuts) {
    out << format_cut(c) << '\n';
    out.flush();
    ++count;
  }
  return count;
}

inline std::string format_cuts(CutStream cuts) {
  std::ostringstream out;
  write_cuts(out, std::move(cuts));
  return out.str();
}

}  // namespace mcut
