#pragma once

#include "strata/errors.hpp"
#include "strata/rational.hpp"

#include <functional>
#include <map>
#include <set>
#include <vector>

namespace strata {

// Vertex ids strictly ascending; nonempty for any simplex stored in a complex.
using simplex = std::vector<int>;

// Sorts and validates: distinct nonnegative ids, nonempty.
simplex make_simplex(std::vector<int> ids);

// Finite abstract simplicial complex with an exact rational height per vertex
// (the PL function evaluated at vertices). Closed under faces; every vertex
// carrying a height is present as a 0-simplex.
class simplicial_complex {
 public:
  simplicial_complex() = default;
  simplicial_complex(std::map<int, rational> heights, std::set<simplex> simplices);

  // Face closure of `maximal` plus a 0-simplex for every listed vertex.
  // Maximal simplices are limited to 12 vertices so closure stays bounded.
  static simplicial_complex from_maximal(const std::map<int, rational>& heights,
                                         const std::vector<simplex>& maximal);

  const std::map<int, rational>& heights() const { return heights_; }
  const std::set<simplex>& simplices() const { return simplices_; }

  bool has_vertex(int v) const { return heights_.count(v) > 0; }
  rational height(int v) const;
  int vertex_count() const { return static_cast<int>(heights_.size()); }
  std::size_t simplex_count() const { return simplices_.size(); }
  int dim() const;            // -1 for the empty complex
  int max_vertex_id() const;  // -1 for the empty complex
  bool contains(const simplex& s) const { return simplices_.count(s) > 0; }
  // Simplices with q+1 vertices in lexicographic vertex-id order.
  std::vector<simplex> simplices_of_dim(int q) const;

  std::vector<rational> distinct_heights() const;  // ascending
  rational min_height() const;                     // throws invalid_complex when empty
  rational max_height() const;
  long long euler() const;

  // Full subcomplex on the vertices satisfying `keep`.
  simplicial_complex full_subcomplex(const std::function<bool(int)>& keep) const;
  // Simplex containment plus height agreement on shared vertices.
  bool is_subcomplex_of(const simplicial_complex& other) const;
  // vmap must be injective and defined on every vertex; heights carried over.
  simplicial_complex relabeled(const std::map<int, int>& vmap) const;

  bool operator==(const simplicial_complex&) const = default;

 private:
  std::map<int, rational> heights_;
  std::set<simplex> simplices_;
};

}  // namespace strata
