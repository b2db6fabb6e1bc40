#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchtile/seqcore.hpp"
#include "matchtile/types.hpp"

namespace matchtile {

// Bitonic k-coloring of vertex i: the palindromic pattern
// c_1..c_k, c_k..c_1 repeated with period 2k.  Returns a color in 1..k.
int color_of(long long vertex, int k);

struct MatchingIssue {
  enum class Kind { bad_vertex, duplicate_vertex, uncovered_vertex, crossing };
  Kind kind;
  Edge first{0, 0};   // offending edge
  Edge second{0, 0};  // second edge for crossings
  std::string message() const;
};

// Plane perfect matching on 2n points in convex position.  Edges are stored
// normalized (smaller endpoint first) and sorted by smaller endpoint.
class Matching {
 public:
  Matching(int n, EdgeList edges);
  static std::optional<MatchingIssue> check(int n, const EdgeList& edges);

  int n() const { return n_; }
  int vertex_count() const { return 2 * n_; }
  const EdgeList& edges() const { return edges_; }
  int partner(int vertex) const { return partner_[vertex]; }

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  EdgeList edges_;
  std::vector<int> partner_;  // 1-based
};

// Stack decoding: push i on a 1, on a 0 pop l and emit the edge {l, i}.
Matching decode_matching(const MatchingCode& code);

// b_i = 1 iff v_i is the smaller endpoint of its edge; inverse of decoding.
MatchingCode encode_matching(const Matching& m);

// True iff within every block of k consecutive entries no 1 precedes a 0.
// Requires k to divide n.
bool has_valid_blocks(const MatchingCode& code, int k);

// Shortest edge (by index difference, ties broken by smaller start vertex)
// whose endpoints have different colors, or nullopt if none.  Requires k | n.
std::optional<Edge> find_bichromatic_witness(const Matching& m, int k);

// True iff every edge is monochromatic under the bitonic coloring.
bool is_k_colored(const Matching& m, int k);

// A matching together with a color count under which it is monochromatic.
struct ColoredMatching {
  Matching base;
  int k;

  ColoredMatching(Matching base, int k);

  friend bool operator==(const ColoredMatching& a, const ColoredMatching& b) {
    return a.k == b.k && a.base == b.base;
  }
};

}  // namespace matchtile
