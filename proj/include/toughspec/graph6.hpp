#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "toughspec/error.hpp"
#include "toughspec/graph.hpp"

namespace toughspec {

enum class Graph6ErrorCode { BadLength, BadByte, TrailingGarbage };

class Graph6Error : public Error {
 public:
  Graph6Error(Graph6ErrorCode code, std::size_t offset, const std::string& what)
      : Error(ErrorKind::Parse, what), code_(code), offset_(offset) {}

  Graph6ErrorCode code() const noexcept { return code_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  Graph6ErrorCode code_;
  std::size_t offset_;
};

inline constexpr std::uint64_t kGraph6MaxOrder = 68719476735ULL;

// Accepts an optional ">>graph6<<" header. Trailing '\n' / "\r\n" is not
// part of the encoding and must be stripped by the caller.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// One graph per line; blank lines are skipped.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace toughspec
