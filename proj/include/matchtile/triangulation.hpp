#pragma once

#include <optional>
#include <string>

#include "matchtile/seqcore.hpp"
#include "matchtile/types.hpp"

namespace matchtile {

// Triangulation of npoints >= 3 points in convex position, stored by its
// diagonal set; hull edges are implicit.
class Triangulation {
 public:
  Triangulation(int npoints, EdgeList diagonals);
  static std::optional<std::string> check(int npoints, const EdgeList& diagonals);

  int npoints() const { return npoints_; }
  int n() const { return npoints_ - 2; }
  const EdgeList& diagonals() const { return diagonals_; }  // sorted

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  int npoints_;
  EdgeList diagonals_;
};

// d_i counts the edges directed out of p_i among the diagonals plus the one
// counted hull edge p_1 p_{n+2}.
TriangulationCode encode_triangulation(const Triangulation& t);

struct DecodeStats {
  long long pops = 0;
  long long pushes = 0;       // after the two initial pushes
  long long emitted = 0;      // counted edges, including p_1 p_{n+2}
};

// Stack decoding: initialize with n+2 then n+1 on top, process d_n down to
// d_1, each pop emitting the edge to the new stack top.  The terminal stack
// holds exactly n+2 and 1.
Triangulation decode_triangulation(const TriangulationCode& code,
                                   DecodeStats* stats = nullptr);

}  // namespace matchtile
