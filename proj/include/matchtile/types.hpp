#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace matchtile {

// 0/1 entries of an outdegree sequence of a matching.
using Bits = std::vector<std::uint8_t>;

// Outdegrees d_1..d_n of a triangulation.
using Degrees = std::vector<int>;

// Unordered vertex/point pair, stored with first < second, 1-based.
using Edge = std::pair<int, int>;
using EdgeList = std::vector<Edge>;

// Raised when textual or JSON input cannot be read at all.  Violations of
// structural invariants of well-formed input raise std::invalid_argument
// instead, so callers can tell the two failure classes apart.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline Edge make_edge(int a, int b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

}  // namespace matchtile
