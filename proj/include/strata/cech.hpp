#pragma once

#include "strata/cut.hpp"
#include "strata/homology.hpp"
#include "strata/zigzag.hpp"

#include <utility>
#include <vector>

namespace strata {

// Cover of a complex by subcomplexes that meet at most pairwise. Overlap
// parts are stored only when nonempty, keyed by piece indices a < b.
struct pairwise_cover {
  struct overlap {
    int a;
    int b;
    simplicial_complex part;
  };
  std::vector<simplicial_complex> pieces;
  std::vector<overlap> overlaps;
};

// Pullback of an interval cover along the height function: piece k is the
// full subcomplex of C over the closure of interval k. Endpoints may not
// cross an edge strictly (cut there first), every simplex must land in some
// piece, no piece may be empty, and the closed models of non-consecutive
// intervals must stay disjoint.
pairwise_cover build_cover(const cut_complex& C, const interval_cover& cover);

// Cover by explicit subcomplexes of `whole`: each piece nonempty, every
// simplex covered, no simplex shared by three or more pieces.
pairwise_cover cover_from_pieces(const simplicial_complex& whole,
                                 std::vector<simplicial_complex> pieces);

// First page of the cover's spectral sequence, restricted to the two columns
// a pairwise cover can populate. Per degree q the differential
//   d1[q] : (+)_e H_q(overlap e) -> (+)_k H_q(piece k)
// sends a class x over the overlap {a, b} to (incl_b x) - (incl_a x), blocks
// ordered as the pieces and overlaps are stored.
struct cech_first_page {
  field coeff_field;
  int max_degree;
  std::vector<std::vector<int>> piece_dims;    // [q][piece]
  std::vector<std::vector<int>> overlap_dims;  // [q][overlap]
  std::vector<matrix> differential;            // [q]
};

cech_first_page first_page(const field& f, const pairwise_cover& pc, int max_degree);

// Betti numbers of the covered space read off the collapsed second page:
// dim H_0 = coker d1[0], dim H_n = ker d1[n-1] + coker d1[n] for n >= 1.
std::vector<int> second_page_two_column(const cech_first_page& fp);

// Nerve of the cover with a homological goodness audit. A piece or overlap
// part passes when it has the homology of a point up to its own dimension;
// when everything passes the nerve carries the homology of the covered space.
struct nerve_report {
  simplicial_complex nerve;  // vertex k per piece at height 0, edge per overlap
  std::vector<int> nerve_betti;  // degrees 0 and 1
  std::vector<int> bad_pieces;
  std::vector<std::pair<int, int>> bad_overlaps;
  bool good = false;
};

nerve_report nerve_row(const field& f, const pairwise_cover& pc);

}  // namespace strata
