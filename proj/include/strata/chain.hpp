#pragma once

#include "strata/complex.hpp"
#include "strata/matrix.hpp"

#include <vector>

namespace strata {

// Simplicial chain complex over a fixed field. cells[q] lists the q-simplices
// in lexicographic order; boundary[q] maps degree q to degree q-1 with the
// alternating-sign incidence from the ascending vertex order. boundary[0] has
// zero rows (unreduced chains).
struct chain_complex {
  field coeff_field;
  std::vector<std::vector<simplex>> cells;
  std::vector<matrix> boundary;

  int top_degree() const { return static_cast<int>(cells.size()) - 1; }
  int cell_count(int q) const {
    if (q < 0 || q > top_degree()) return 0;
    return static_cast<int>(cells[static_cast<std::size_t>(q)].size());
  }
};

chain_complex make_chain_complex(const field& f, const simplicial_complex& K);

// Index of s in a lexicographically sorted cell list; -1 when absent.
int cell_index(const std::vector<simplex>& cells, const simplex& s);

}  // namespace strata
