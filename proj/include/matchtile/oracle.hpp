#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <optional>
#include <vector>

#include "matchtile/matching.hpp"
#include "matchtile/seqcore.hpp"
#include "matchtile/tiling.hpp"
#include "matchtile/types.hpp"

namespace matchtile {

using BigInt = boost::multiprecision::cpp_int;

// Exact binomial coefficient; never rounds through floating point.
BigInt binomial(unsigned long long n, unsigned long long r);

// C_n = binom(2n, n) / (n + 1).
BigInt catalan(unsigned n);

// f(k, m) = binom(km + m, m - 1) / m; f(1, m) = catalan(m).
BigInt fuss_catalan(unsigned k, unsigned m);

// Exhaustive enumeration is the test oracle for everything else; the caps
// keep accidental huge runs out.  Callers may pass a larger limit.
inline constexpr int kDefaultBallotLimit = 10;        // max n
inline constexpr int kDefaultTilingPointLimit = 14;   // max npoints

// All valid matching codes of length 2n in lexicographic order, one at a
// time (single consumer).
class BallotStream {
 public:
  explicit BallotStream(int n, int limit = kDefaultBallotLimit);
  std::optional<MatchingCode> next();

 private:
  void advance();
  int n_;
  Bits bits_;
  bool done_ = false;
};

// enumerate_ballots(km) filtered through is_k_colored.
class ColoredMatchingStream {
 public:
  ColoredMatchingStream(int k, int m, int limit = kDefaultBallotLimit);
  std::optional<ColoredMatching> next();

 private:
  int k_;
  BallotStream inner_;
};

// Visits every t-gonal tiling on npoints points exactly once, generated by
// splitting off the face that contains the hull edge p_1 p_npoints in all
// valid ways.  Returning false from the visitor stops the enumeration.
void for_each_tiling(int t, int npoints,
                     const std::function<bool(const Tiling&)>& visit,
                     int limit = kDefaultTilingPointLimit);

// Materialized conveniences for small instances.
std::vector<MatchingCode> enumerate_ballots(int n,
                                            int limit = kDefaultBallotLimit);
std::vector<ColoredMatching> enumerate_colored_matchings(
    int k, int m, int limit = kDefaultBallotLimit);
std::vector<Tiling> enumerate_tilings(int t, int npoints,
                                      int limit = kDefaultTilingPointLimit);

// One comparison of a formula value against an enumeration.
struct CountRow {
  int k = 0;
  int m = 0;
  BigInt expected;
  BigInt observed;
  bool matches() const { return expected == observed; }
};

}  // namespace matchtile
