#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hoffman/graph.hpp"

namespace hoffman {

/// Decoding failure; `offset` is the byte position that could not be accepted.
class Graph6Error : public Error {
public:
  Graph6Error(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Decodes one header-less graph6 string (short form, or the 4-byte long form
/// for n = 63, 64).
Graph from_graph6(std::string_view text);

/// Encodes with the one-byte order prefix, so n must be at most 62.
std::string to_graph6(const Graph& g);

/// One graph per non-blank line. Errors carry the 1-based line number.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace hoffman
