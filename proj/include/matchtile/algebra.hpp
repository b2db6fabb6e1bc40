#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matchtile/matching.hpp"
#include "matchtile/types.hpp"

namespace matchtile {

// Temperley-Lieb / Fuss-Catalan basis diagram: a plane perfect matching on
// 2*rows vertices, v_1..v_rows on the top row left to right and the rest
// labeled clockwise, so the bottom vertex below v_j is v_{2*rows+1-j}.
// When k is set the pairing must be monochromatic under the bitonic
// coloring (the clockwise coloring starting at the top left vertex).
struct Diagram {
  int rows;
  Matching pairing;
  std::optional<int> k;

  Diagram(int rows, Matching pairing, std::optional<int> k = std::nullopt);

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.rows == b.rows && a.pairing == b.pairing;
  }
};

// n propagating lines {j, 2n+1-j}.
Diagram identity_diagram(int n, std::optional<int> k = std::nullopt);

// TL generator u_i: arcs {i, i+1} and {2n-i, 2n-i+1}, the rest propagating.
Diagram tl_generator(int n, int i);

// Fuss-Catalan generator u_i^(l) on n = m*k strands: l nested arcs with the
// innermost connecting v_{ki} and v_{ki+1}, mirrored below, the rest
// propagating.  For i = m the nest straddles the right boundary and the
// mirror image coincides with it.
Diagram fc_generator(int m, int k, int i, int l);

struct ComposeResult {
  Diagram diagram;
  int loops;
};

// Product d1 * d2, d1 drawn on top: glue d1's bottom vertex v_{2n+1-j} to
// d2's top vertex v_j, trace the strands, and discard closed loops
// (coefficients are fixed to 1), reporting how many were removed.
ComposeResult compose(const Diagram& d1, const Diagram& d2);

// Evaluates a word such as "u2 u3 u2" (k = 1) or "u1^(2) u2^(1)" (k >= 2,
// n = m*k) as a left-to-right product.  "I" is the identity.
ComposeResult evaluate_word(std::string_view word, int n, int k = 1);

struct RelationCheck {
  std::string name;
  bool ok;
};

// Defining relations of TL_n at unit loop coefficient, checked as diagram
// equalities (squares additionally check the single removed loop).
std::vector<RelationCheck> check_tl_relations(int n);

// Relations of the k-colored Fuss-Catalan algebra on m*k strands at unit
// coefficients, checked as diagram equalities.
std::vector<RelationCheck> check_fc_relations(int m, int k);

// Number of distinct diagrams generated by the given elements under
// composition (including themselves).
std::size_t monoid_closure_size(const std::vector<Diagram>& generators);

}  // namespace matchtile
