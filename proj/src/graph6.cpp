#include "hoffman/graph6.hpp"

#include <istream>

namespace hoffman {

namespace {

constexpr int kBias = 63;

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty graph6 string", 0);
  std::size_t pos = 0;
  int n = 0;
  if (text[0] == '~') {
    if (text.size() < 4) throw Graph6Error("truncated long-form length", text.size());
    if (text[1] == '~') throw Graph6Error("orders above 64 are unsupported", 1);
    for (std::size_t i = 1; i < 4; ++i) {
      if (!printable(text[i])) throw Graph6Error("character out of range", i);
      n = (n << 6) | (text[i] - kBias);
    }
    if (n > kMaxVertices) throw Graph6Error("orders above 64 are unsupported", 1);
    pos = 4;
  } else {
    if (!printable(text[0])) throw Graph6Error("malformed length prefix", 0);
    n = text[0] - kBias;
    pos = 1;
  }

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() < pos + bytes)
    throw Graph6Error("edge data too short for order " + std::to_string(n), text.size());
  if (text.size() > pos + bytes) throw Graph6Error("trailing garbage", pos + bytes);

  for (std::size_t b = 0; b < bytes; ++b)
    if (!printable(text[pos + b])) throw Graph6Error("character out of range", pos + b);
  if (bits % 6 != 0) {
    const int pad = static_cast<int>(6 - bits % 6);
    const int last = text[pos + bytes - 1] - kBias;
    if (last & ((1 << pad) - 1)) throw Graph6Error("non-zero padding bits", pos + bytes - 1);
  }

  // Column-wise upper triangle: (0,1), (0,2), (1,2), (0,3), ...
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int value = text[pos + k / 6] - kBias;
      if ((value >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw Error("to_graph6 supports at most 62 vertices, got " + std::to_string(n));
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(from_graph6(line));
    } catch (const Graph6Error& e) {
      throw Error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace hoffman
