#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matchtile/matching.hpp"
#include "matchtile/seqcore.hpp"
#include "matchtile/triangulation.hpp"
#include "matchtile/types.hpp"

namespace matchtile {

// t-gonal tiling of npoints convex points: every bounded face of the hull
// plus the diagonals is a t-gon.  t = 3 gives a triangulation.
class Tiling {
 public:
  Tiling(int t, int npoints, EdgeList diagonals);
  static std::optional<std::string> check(int t, int npoints,
                                          const EdgeList& diagonals);

  int t() const { return t_; }
  int npoints() const { return npoints_; }
  int n() const { return npoints_ - 2; }
  const EdgeList& diagonals() const { return diagonals_; }  // sorted

  friend bool operator==(const Tiling&, const Tiling&) = default;

 private:
  int t_;
  int npoints_;
  EdgeList diagonals_;
};

// Corner list of one bounded face, clockwise, starting at the smallest
// corner (point labels increase clockwise, so corners ascend).
using Face = std::vector<int>;

// All bounded faces of the plane graph formed by the hull and a non-crossing
// diagonal set, ordered by (smallest corner, largest corner).  Every face is
// the region directly enclosed by one diagonal or by the hull edge
// p_1 p_npoints, which makes the enumeration linear after sorting adjacency.
std::vector<Face> faces(int npoints, const EdgeList& diagonals);
std::vector<Face> faces(const Tiling& t);

// A leaf of the dual tree that is not incident to the edge p_1 p_{n+2}:
// the returned face has consecutive corners r..s and can be cut off along
// the chord p_r p_s.  Deterministic: the qualifying leaf with the smallest
// minimum corner.  Rejects single-face tilings.
Face find_ear(const Tiling& t);

// Location of a t-ear inside a matching code.  The ear-edge is p_r p_s with
// s = r + t - 1; window_start is the 1-based code position where the ear's
// subsequence begins and is absent for the terminal ear |1^k|0^k| at the
// end of the code.
struct EarSite {
  int r = 0;
  int s = 0;
  std::optional<std::size_t> window_start;
};

// Weight-window scan for the first t-ear of the k-color valid triangulation
// encoded by `code` (t = k + 2).  Rejects codes that do not decode to a
// k-colored matching and codes with a single face (n == k).
EarSite find_first_t_ear(const MatchingCode& code, int k);

// Removes the ear's window from the code -- entirely for the terminal ear,
// all but its last zero otherwise -- and reports the recorded ear-edge in
// the input code's point labels.
std::pair<MatchingCode, Edge> remove_t_ear(const MatchingCode& code,
                                           const EarSite& site, int k);

// Inverse surgery: grow a t-ear at the boundary edge p_r p_{r+1},
// 1 <= r <= n + 1.  r = n + 1 appends the block pair |1^k|0^k|.  The input
// must be k-color valid; the result is again k-color valid and the
// extension at a fixed edge is unique.
MatchingCode extend_with_ear(const MatchingCode& code, int r, int k);

// The bijection, ear by ear: repeatedly locate and remove the first t-ear,
// resuming each scan 2k entries before the previous window, and collect the
// ear-edges as diagonals in original labels.  Linear in n for fixed k.
Tiling matching_to_tiling(const ColoredMatching& m);

// Inverse bijection: reconstruct the outdegree sequence of the unique
// k-color valid triangulated completion of the tiling and decode it.
// Equivalent to peeling all ears and re-adding them in reverse order with
// extend_with_ear, but computed in one pass over the face structure.
ColoredMatching tiling_to_matching(const Tiling& t);

// Brute-force enumeration of all t-gonal tilings that are subgraphs of the
// triangulation; by the uniqueness lemma the result has at most one element.
// Intended for small instances (the subset search is exponential).
std::vector<Tiling> tilings_within(const Triangulation& tr, int t);

}  // namespace matchtile
