#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "matchtile/types.hpp"

namespace matchtile {

// Why a sequence fails to be a valid code.  `index` is 1-based: for
// prefix/suffix conditions it is the first violating prefix/suffix length,
// for bad entries the entry position.
struct CodeIssue {
  enum class Kind {
    empty,
    odd_length,
    not_binary,
    unbalanced,
    prefix_deficit,
    negative_entry,
    sum_mismatch,
    suffix_excess,
  };
  Kind kind;
  std::size_t index = 0;
  std::string message() const;
};

// Ballot check for b_1..b_2n: entries 0/1, equally many of each, and every
// prefix holds at least as many 1s as 0s.  Total predicates, no errors.
std::optional<CodeIssue> ballot_issue(const std::vector<int>& bits);
bool is_ballot(const std::vector<int>& bits);

// Outdegree check for d_1..d_n: entries non-negative, summing to n, and
// every suffix of length l sums to at most l.
std::optional<CodeIssue> tri_code_issue(const std::vector<int>& degrees);
bool is_valid_tri_code(const std::vector<int>& degrees);

// Outdegree sequence of a plane perfect matching on 2n points: a balanced
// ballot sequence.  Immutable once constructed; construction validates.
class MatchingCode {
 public:
  explicit MatchingCode(Bits bits);

  // Text form is a string over {0,1}; '|' block separators are ignored.
  static MatchingCode parse(std::string_view text);

  std::size_t n() const { return bits_.size() / 2; }
  std::size_t size() const { return bits_.size(); }
  int bit(std::size_t pos) const { return bits_[pos - 1]; }  // 1-based
  const Bits& bits() const { return bits_; }

  // With block > 0, '|' is inserted between blocks of that many entries.
  std::string str(std::size_t block = 0) const;

  friend bool operator==(const MatchingCode&, const MatchingCode&) = default;

 private:
  Bits bits_;
};

// Outdegree sequence of a triangulation on n+2 points (only d_1..d_n are
// stored; the last two outdegrees are always zero).
class TriangulationCode {
 public:
  explicit TriangulationCode(Degrees degrees);

  // Text form is comma-separated decimal integers.
  static TriangulationCode parse(std::string_view text);

  std::size_t n() const { return degrees_.size(); }
  int degree(std::size_t pos) const { return degrees_[pos - 1]; }  // 1-based
  const Degrees& degrees() const { return degrees_; }
  std::string str() const;

  friend bool operator==(const TriangulationCode&,
                         const TriangulationCode&) = default;

 private:
  Degrees degrees_;
};

// The two mutually inverse transforms between the code families.
// b_to_d: d_1 is the number of 1s before the first 0, d_i the number of 1s
// between the (i-1)-st and i-th 0.  d_to_b: emit d_i 1s then one 0, in order.
// Both run in time linear in n.
TriangulationCode b_to_d(const MatchingCode& code);
MatchingCode d_to_b(const TriangulationCode& code);

}  // namespace matchtile
