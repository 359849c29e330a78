#include "strata/chain.hpp"

#include <algorithm>

namespace strata {

chain_complex make_chain_complex(const field& f, const simplicial_complex& K) {
  chain_complex out{f, {}, {}};
  const int d = K.dim();
  for (int q = 0; q <= d; ++q) out.cells.push_back(K.simplices_of_dim(q));
  for (int q = 0; q <= d; ++q) {
    const int rows = q == 0 ? 0 : out.cell_count(q - 1);
    matrix b(f, rows, out.cell_count(q));
    if (q > 0) {
      const auto& lower = out.cells[static_cast<std::size_t>(q - 1)];
      const auto& upper = out.cells[static_cast<std::size_t>(q)];
      for (std::size_t j = 0; j < upper.size(); ++j) {
        const simplex& s = upper[j];
        rational sign(1);
        simplex face(s.size() - 1);
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          face.clear();
          for (std::size_t i = 0; i < s.size(); ++i)
            if (i != drop) face.push_back(s[i]);
          const int r = cell_index(lower, face);
          if (r < 0) throw internal_inconsistency("face missing from chain basis");
          b.set(r, static_cast<int>(j), f.normalize(sign));
          sign = -sign;
        }
      }
    }
    out.boundary.push_back(std::move(b));
  }
  return out;
}

int cell_index(const std::vector<simplex>& cells, const simplex& s) {
  auto it = std::lower_bound(cells.begin(), cells.end(), s);
  if (it == cells.end() || *it != s) return -1;
  return static_cast<int>(it - cells.begin());
}

}  // namespace strata
