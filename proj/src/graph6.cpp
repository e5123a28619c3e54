#include "toughspec/graph6.hpp"

#include <istream>

namespace toughspec {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr unsigned char kMinByte = 63;
constexpr unsigned char kMaxByte = 126;

std::uint64_t read_sextets(std::string_view s, std::size_t pos, std::size_t count) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < count; ++i)
    value = (value << 6) | static_cast<std::uint64_t>(static_cast<unsigned char>(s[pos + i]) - kMinByte);
  return value;
}

void append_sextets(std::string& out, std::uint64_t value, int count) {
  for (int i = count - 1; i >= 0; --i)
    out.push_back(static_cast<char>(kMinByte + ((value >> (6 * i)) & 0x3F)));
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) base = kHeader.size();
  const std::string_view body = text.substr(base);

  for (std::size_t i = 0; i < body.size(); ++i) {
    const auto c = static_cast<unsigned char>(body[i]);
    if (c < kMinByte || c > kMaxByte)
      throw Graph6Error(Graph6ErrorCode::BadByte, base + i,
                        "invalid graph6 byte at offset " + std::to_string(base + i));
  }
  if (body.empty())
    throw Graph6Error(Graph6ErrorCode::BadLength, base, "empty graph6 string");

  std::uint64_t n = 0;
  std::size_t pos = 0;
  auto need = [&](std::size_t bytes) {
    if (body.size() < bytes)
      throw Graph6Error(Graph6ErrorCode::BadLength, base + body.size(),
                        "truncated graph6 order field at offset " +
                            std::to_string(base + body.size()));
  };
  if (static_cast<unsigned char>(body[0]) != kMaxByte) {
    n = read_sextets(body, 0, 1);
    pos = 1;
  } else {
    need(2);
    if (static_cast<unsigned char>(body[1]) != kMaxByte) {
      need(4);
      n = read_sextets(body, 1, 3);
      pos = 4;
    } else {
      need(8);
      n = read_sextets(body, 2, 6);
      pos = 8;
    }
  }

  const std::size_t available = body.size() - pos;
  // A string can never hold the bits of a graph this large; avoids overflow below.
  if (n > (std::uint64_t{1} << 31))
    throw Graph6Error(Graph6ErrorCode::BadLength, base + body.size(),
                      "graph6 order " + std::to_string(n) + " exceeds supported size");
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t expected = (bits + 5) / 6;
  if (available < expected)
    throw Graph6Error(Graph6ErrorCode::BadLength, base + body.size(),
                      "graph6 string too short: expected " + std::to_string(expected) +
                          " edge bytes, found " + std::to_string(available));
  if (available > expected)
    throw Graph6Error(Graph6ErrorCode::TrailingGarbage, base + pos + expected,
                      "trailing bytes after graph6 data at offset " +
                          std::to_string(base + pos + expected));

  Graph g(static_cast<int>(n));
  std::uint64_t k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const auto byte = static_cast<unsigned char>(body[pos + k / 6]) - kMinByte;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kMinByte + n));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kMaxByte));
    append_sextets(out, n, 3);
  } else {
    out.append(2, static_cast<char>(kMaxByte));
    append_sextets(out, n, 6);
  }
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kMinByte + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kMinByte + (acc << (6 - filled))));
  return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      throw Graph6Error(e.code(), e.offset(),
                        "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return graphs;
}

}  // namespace toughspec
