#include "fraccover/graph6.hpp"

namespace fraccover {

namespace {
constexpr int kBias = 63;
constexpr int kLongMarker = 126;
constexpr long kLongMax = 258047;

int decode_byte(const std::string& line, size_t offset) {
  if (offset >= line.size())
    throw Graph6ParseError("truncated graph6 record", offset);
  unsigned char c = static_cast<unsigned char>(line[offset]);
  if (c < kBias || c > kLongMarker)
    throw Graph6ParseError("byte outside graph6 range [63,126]", offset);
  return c - kBias;
}
}  // namespace

Graph6ParseError::Graph6ParseError(const std::string& message, size_t offset)
    : std::runtime_error(message + " at byte offset " + std::to_string(offset)),
      offset_(offset) {}

Graph from_graph6(const std::string& line) {
  size_t pos = 0;
  if (line.empty()) throw Graph6ParseError("empty graph6 record", 0);
  long n;
  if (static_cast<unsigned char>(line[0]) == kLongMarker) {
    if (line.size() > 1 && static_cast<unsigned char>(line[1]) == kLongMarker)
      throw Graph6ParseError("graph6 orders above 258047 are unsupported", 1);
    n = 0;
    for (pos = 1; pos <= 3; ++pos) n = (n << 6) | decode_byte(line, pos);
    if (n > kLongMax)
      throw Graph6ParseError("graph6 order exceeds long-form limit", 1);
  } else {
    n = decode_byte(line, 0);
    pos = 1;
  }

  Graph g(static_cast<int>(n));
  int group = 0;
  int bits_left = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (bits_left == 0) {
        group = decode_byte(line, pos);
        ++pos;
        bits_left = 6;
      }
      if (group & (1 << (bits_left - 1))) g.add_edge(u, v);
      --bits_left;
    }
  }
  if (pos != line.size())
    throw Graph6ParseError("trailing bytes after graph6 record", pos);
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    if (n > kLongMax) throw std::invalid_argument("graph too large for graph6 long form");
    out.push_back(static_cast<char>(kLongMarker));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
    out.push_back(static_cast<char>((n & 0x3f) + kBias));
  }

  int group = 0;
  int bits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((group << (6 - bits)) + kBias));
  return out;
}

}  // namespace fraccover
