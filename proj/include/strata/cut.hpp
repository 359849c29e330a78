#pragma once

#include "strata/complex.hpp"

#include <vector>

namespace strata {

// One edge split: `vertex` was created at `level` on the edge {edge_u, edge_v}
// of the complex as it stood when the split happened (earlier splits may have
// already subdivided the original edge).
struct cut_provenance {
  int vertex;
  int edge_u;
  int edge_v;
  rational level;
  bool operator==(const cut_provenance&) const = default;
};

// Subdivision of `origin` in which no simplex crosses any cut level strictly:
// every simplex lies in a closed half-space of each level. The vertices at
// height exactly t span the fiber model of f^{-1}(t).
struct cut_complex {
  simplicial_complex complex;
  simplicial_complex origin;
  std::vector<rational> cut_levels;            // sorted, distinct
  std::vector<cut_provenance> new_vertices;    // in creation order
};

// Splits every edge strictly crossing a level, one level at a time in
// ascending order, edges in lexicographic order; new vertex ids continue past
// the largest existing id. Levels are sorted and deduplicated internally.
cut_complex cut_at_levels(const simplicial_complex& K, std::vector<rational> levels);

// Full subcomplex at height exactly t. t must be a cut level or a vertex
// height of the origin.
simplicial_complex fiber(const cut_complex& C, const rational& t);

// Full subcomplex on vertices with height in [a, b]. Each endpoint must be a
// cut level or an extremal vertex height of the origin.
simplicial_complex interlevel(const cut_complex& C, const rational& a, const rational& b);

}  // namespace strata
