#pragma once

// Independent Betti-number oracle: re-derives cell lists and boundary
// matrices from the raw simplex set, then reads dimensions off ranks alone.
// Shares nothing with the chain/homology code paths under test.

#include "strata/complex.hpp"
#include "strata/matrix.hpp"

#include <algorithm>
#include <vector>

namespace oracle {

inline std::vector<int> betti(const strata::field& f, const strata::simplicial_complex& K,
                              int max_degree) {
  std::vector<std::vector<strata::simplex>> cells;
  for (const auto& s : K.simplices()) {
    const std::size_t q = s.size() - 1;
    if (cells.size() <= q) cells.resize(q + 1);
    cells[q].push_back(s);
  }
  for (auto& layer : cells) std::sort(layer.begin(), layer.end());

  // boundary ranks: rank[q] = rank of d_q for q >= 1
  std::vector<int> rank(cells.size() + 1, 0);
  for (std::size_t q = 1; q < cells.size(); ++q) {
    std::vector<std::vector<strata::rational>> rows(
        cells[q - 1].size(), std::vector<strata::rational>(cells[q].size(), strata::rational(0)));
    for (std::size_t j = 0; j < cells[q].size(); ++j) {
      const strata::simplex& s = cells[q][j];
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        strata::simplex face;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        auto it = std::find(cells[q - 1].begin(), cells[q - 1].end(), face);
        const std::size_t r = static_cast<std::size_t>(it - cells[q - 1].begin());
        rows[r][j] = (drop % 2 == 0) ? strata::rational(1) : strata::rational(-1);
      }
    }
    rank[q] = strata::matrix::from_rows(f, rows).rank();
  }

  std::vector<int> out;
  for (int q = 0; q <= max_degree; ++q) {
    if (static_cast<std::size_t>(q) >= cells.size()) {
      out.push_back(0);
      continue;
    }
    const int n_q = static_cast<int>(cells[static_cast<std::size_t>(q)].size());
    out.push_back(n_q - rank[static_cast<std::size_t>(q)] - rank[static_cast<std::size_t>(q) + 1]);
  }
  return out;
}

}  // namespace oracle
