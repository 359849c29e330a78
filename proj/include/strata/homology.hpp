#pragma once

#include "strata/chain.hpp"
#include "strata/complex.hpp"
#include "strata/matrix.hpp"

#include <map>
#include <vector>

namespace strata {

// Homology of one complex in one degree, with a stored cycle-representative
// basis. Representatives are the echelon remainders of kernel vectors reduced
// against the boundary image, so bases are reproducible run to run.
class homology_space {
 public:
  homology_space(const field& f, simplicial_complex K, int degree);

  int dimension() const { return reps_.cols(); }
  int degree() const { return degree_; }
  const field& coeff_field() const { return f_; }
  const simplicial_complex& complex() const { return complex_; }
  // q-simplices in lexicographic order; rows of every cycle vector.
  const std::vector<simplex>& cell_basis() const { return cells_; }
  // cell_basis().size() x dimension(); column j represents basis class j.
  const matrix& representatives() const { return reps_; }
  int cycle_rank() const { return cycle_rank_; }
  int boundary_rank() const { return boundary_rank_; }

  // Coordinates of a cycle's class in the stored basis. The vector must be a
  // cycle over cell_basis(); anything outside the cycle space signals a bug.
  std::vector<rational> express(const sparse_vec& cycle) const;

 private:
  field f_;
  int degree_;
  simplicial_complex complex_;
  std::vector<simplex> cells_;
  matrix reps_;
  column_echelon expr_;  // boundary image basis first, then representatives
  int boundary_rank_ = 0;
  int cycle_rank_ = 0;
};

// Map between stored homology bases: matrix is target.dimension x
// source.dimension, column j holding the target coordinates of source class j.
struct linear_map {
  matrix mat;
};

linear_map identity_map(const field& f, int dimension);
// src.complex() must be a subcomplex of dst.complex(); the map is induced by
// the inclusion on chains.
linear_map induced_map(const homology_space& src, const homology_space& dst);
// vertex_map must be an order-preserving simplicial isomorphism from
// src.complex() onto dst.complex(); carries classes along the relabeling.
// Heights play no role, so the complexes may assign different ones.
linear_map transport_map(const homology_space& src, const homology_space& dst,
                         const std::map<int, int>& vertex_map);
linear_map compose(const linear_map& g, const linear_map& f);
// Throws not_invertible (carrying the rank) when the matrix is not square
// invertible.
linear_map invert(const linear_map& m);

// Dimensions of H_0 .. H_max_degree in one pass.
std::vector<int> homology_dimensions(const field& f, const simplicial_complex& K, int max_degree);

}  // namespace strata
