#pragma once

#include <stdexcept>
#include <string>

#include "fraccover/graph.hpp"

namespace fraccover {

// Malformed graph6 input; what() names the offending byte offset.
class Graph6ParseError : public std::runtime_error {
 public:
  Graph6ParseError(const std::string& message, size_t offset);
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

// Parses one graph6 record (without trailing newline). Short form covers
// n <= 62, long form (126, x1, x2, x3) covers n <= 258047.
Graph from_graph6(const std::string& line);
// Bit-exact graph6 encoding; round-trips through from_graph6.
std::string to_graph6(const Graph& g);

}  // namespace fraccover
